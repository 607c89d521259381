"""Matrices of roots of unity (with optional structural zeros).

Entries are exponents k of zeta_m = exp(2*pi*i/m) held in an integer numpy
array. Structural zeros live in a separate boolean mask; they are allowed
only for weighing matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CycloNumber, CycloVector, RootExp, is_vanishing_sum, lcm

PLAIN = "plain"
HADAMARD = "hadamard"
WEIGHING = "weighing"


class InvalidKindError(ValueError):
    """Raised when an operation receives a matrix of the wrong kind."""


class NotHadamardError(ValueError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


class UnitMatrix:
    """An n x n matrix whose entries are m-th roots of unity or structural zeros.

    ``kind`` records a verification that has actually been run: it is set
    only by :func:`verify_hadamard` / :func:`verify_weighing` (or by a
    constructor that calls them) and every derived matrix starts as plain.
    """

    __slots__ = ("exps", "zeros", "m", "kind", "weight")

    def __init__(self, exps, m: int, zeros=None, kind: str = PLAIN, weight: int | None = None) -> None:
        exps = np.asarray(exps, dtype=np.int64)
        if exps.ndim != 2 or exps.shape[0] != exps.shape[1] or exps.shape[0] == 0:
            raise ValueError(f"expected a nonempty square exponent grid, got shape {exps.shape}")
        RootExp(0, m)  # validates the modulus
        if zeros is not None:
            zeros = np.asarray(zeros, dtype=bool)
            if zeros.shape != exps.shape:
                raise ValueError("zero mask shape mismatch")
            if not zeros.any():
                zeros = None
            else:
                exps = np.where(zeros, 0, exps)
        object.__setattr__(self, "exps", _frozen(exps % m))
        object.__setattr__(self, "zeros", None if zeros is None else _frozen(zeros))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weight", weight)

    def __setattr__(self, name, value):
        raise AttributeError("UnitMatrix is immutable")

    # -- basic views ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self.exps.shape[0]

    @property
    def has_zeros(self) -> bool:
        return self.zeros is not None

    def is_zero(self, i: int, j: int) -> bool:
        return self.zeros is not None and bool(self.zeros[i, j])

    def entry(self, i: int, j: int) -> RootExp | None:
        if self.is_zero(i, j):
            return None
        return RootExp(int(self.exps[i, j]), self.m)

    def row(self, i: int, cols: Iterable[int] | None = None) -> RowView:
        return RowView(self, i, None if cols is None else frozenset(cols))

    def col(self, j: int, rows: Iterable[int] | None = None) -> ColView:
        return ColView(self, j, None if rows is None else frozenset(rows))

    def is_real(self) -> bool:
        if self.m == 1:
            return True
        if self.m % 2:
            return False
        e = self.exps if self.zeros is None else self.exps[~self.zeros]
        return bool(np.all((e == 0) | (e == self.m // 2)))

    def plain(self) -> UnitMatrix:
        return UnitMatrix(self.exps, self.m, self.zeros)

    def reembed(self, m: int) -> UnitMatrix:
        if m % self.m:
            raise ValueError(f"cannot embed modulus {self.m} into {m}")
        if m == self.m:
            return self
        return UnitMatrix(self.exps * (m // self.m), m, self.zeros, self.kind, self.weight)

    def reduced(self) -> UnitMatrix:
        """Same matrix over the smallest modulus that holds all its entries."""
        g = self.m
        for k in np.unique(self.exps):
            g = np.gcd(g, int(k))
        step = int(g) if g else self.m
        if step in (0, 1):
            return self
        return UnitMatrix(self.exps // step, self.m // step, self.zeros, self.kind, self.weight)

    def sign_array(self) -> np.ndarray:
        """Real matrices only: the +1/-1/0 integer array."""
        if not self.is_real():
            raise InvalidKindError("sign_array requires a real matrix")
        out = np.where(self.exps == 0, 1, -1)
        if self.zeros is not None:
            out[self.zeros] = 0
        return out

    def to_complex(self) -> np.ndarray:
        out = np.exp(2j * np.pi * self.exps / self.m)
        if self.zeros is not None:
            out[self.zeros] = 0
        return out

    def cyclo(self, i: int, j: int, m: int | None = None) -> CycloNumber:
        m = self.m if m is None else m
        if self.is_zero(i, j):
            return CycloNumber.zero(m)
        return RootExp(int(self.exps[i, j]), self.m).to_cyclo(m)

    def cyclo_submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[CycloNumber]]:
        return [[self.cyclo(i, j) for j in cols] for i in rows]

    def bit_rows(self) -> list[int]:
        """Real matrices: row i packed as an int with bit j set iff entry (i, j) is -1."""
        if self.has_zeros or not self.is_real():
            raise InvalidKindError("bit-packed rows need a zero-free real matrix")
        neg = self.exps != 0
        return [sum(1 << j for j in np.flatnonzero(neg[i])) for i in range(self.n)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitMatrix) or other.n != self.n:
            return False
        m = lcm(self.m, other.m)
        a, b = self.reembed(m), other.reembed(m)
        za = np.zeros_like(a.exps, dtype=bool) if a.zeros is None else a.zeros
        zb = np.zeros_like(b.exps, dtype=bool) if b.zeros is None else b.zeros
        return bool(np.array_equal(za, zb) and np.array_equal(a.exps, b.exps))

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.m, r.exps.tobytes(), None if r.zeros is None else r.zeros.tobytes()))

    def __repr__(self) -> str:
        tag = self.kind if self.kind != WEIGHING else f"weighing({self.weight})"
        return f"UnitMatrix(n={self.n}, m={self.m}, kind={tag})"


@dataclass(frozen=True)
class RowView:
    """Row i of a matrix, optionally masked to the column set ``cols``."""

    parent: UnitMatrix
    index: int
    cols: frozenset[int] | None = None

    def coords(self) -> list[int]:
        return sorted(self.cols) if self.cols is not None else list(range(self.parent.n))

    def vector(self, m: int | None = None) -> CycloVector:
        m = self.parent.m if m is None else m
        keep = self.cols
        return CycloVector(
            (self.parent.cyclo(self.index, j, m) if keep is None or j in keep else CycloNumber.zero(m))
            for j in range(self.parent.n)
        )

    def complement(self) -> RowView:
        full = frozenset(range(self.parent.n))
        return RowView(self.parent, self.index, full - (full if self.cols is None else self.cols))


@dataclass(frozen=True)
class ColView:
    parent: UnitMatrix
    index: int
    rows: frozenset[int] | None = None

    def vector(self, m: int | None = None) -> CycloVector:
        m = self.parent.m if m is None else m
        keep = self.rows
        return CycloVector(
            (self.parent.cyclo(i, self.index, m) if keep is None or i in keep else CycloNumber.zero(m))
            for i in range(self.parent.n)
        )


# -- orthogonality ----------------------------------------------------------


def inner_exponents(M: UnitMatrix, i: int, j: int, cols: Iterable[int] | None = None) -> list[int]:
    """Exponents of the terms of <r_i, r_j> restricted to ``cols`` (zeros dropped)."""
    cols = range(M.n) if cols is None else cols
    out = []
    for c in cols:
        if not (M.is_zero(i, c) or M.is_zero(j, c)):
            out.append(int(M.exps[i, c] - M.exps[j, c]))
    return out


def rows_orthogonal(M: UnitMatrix, i: int, j: int, cols: Iterable[int] | None = None) -> bool:
    """Exact test of <r_{i,B}, r_{j,B}> == 0 with B = cols (all columns if None)."""
    return is_vanishing_sum(inner_exponents(M, i, j, cols), M.m)


def first_nonorthogonal_pair(M: UnitMatrix) -> tuple[int, int] | None:
    for i, j in combinations(range(M.n), 2):
        if not rows_orthogonal(M, i, j):
            return i, j
    return None


def is_complex_hadamard(M: UnitMatrix) -> bool:
    """HH^dagger == nI, decided pairwise with exact vanishing-sum tests."""
    if M.has_zeros:
        raise InvalidKindError("matrix has structural zeros; use is_weighing")
    return first_nonorthogonal_pair(M) is None


def verify_hadamard(M: UnitMatrix) -> UnitMatrix:
    """Return M tagged as a verified Hadamard matrix, or raise NotHadamardError."""
    if M.kind == HADAMARD:
        return M
    pair = None if M.has_zeros else first_nonorthogonal_pair(M)
    if M.has_zeros or pair is not None:
        raise NotHadamardError(f"rows {pair} are not orthogonal" if pair else "structural zeros present")
    return UnitMatrix(M.exps, M.m, kind=HADAMARD)


def is_weighing(M: UnitMatrix, k: int) -> bool:
    """True iff M has entries in {0, 1, -1}, M M^T = kI and k nonzeros per row/column."""
    if not M.is_real():
        raise InvalidKindError("weighing matrices must have real entries")
    nz = np.ones(M.exps.shape, dtype=bool) if M.zeros is None else ~M.zeros
    if not (np.all(nz.sum(axis=0) == k) and np.all(nz.sum(axis=1) == k)):
        return False
    return first_nonorthogonal_pair(M) is None


def verify_weighing(M: UnitMatrix, k: int) -> UnitMatrix:
    if not is_weighing(M, k):
        raise NotHadamardError(f"not a weighing matrix of weight {k}")
    return UnitMatrix(M.exps, M.m, M.zeros, kind=WEIGHING, weight=k)


def reverify(M: UnitMatrix, like: UnitMatrix) -> UnitMatrix:
    """Re-run whichever verification ``like`` carried on M."""
    if like.kind == HADAMARD:
        return verify_hadamard(M)
    if like.kind == WEIGHING:
        return verify_weighing(M, like.weight)
    return M


# -- equivalence operations ---------------------------------------------------


def _as_root(c, m: int) -> RootExp:
    return c if isinstance(c, RootExp) else RootExp(int(c), m)


def permute_rows(M: UnitMatrix, perm: Sequence[int]) -> UnitMatrix:
    """Row i of the result is row perm[i] of M."""
    perm = list(perm)
    if sorted(perm) != list(range(M.n)):
        raise ValueError(f"not a permutation of range({M.n}): {perm}")
    z = None if M.zeros is None else M.zeros[perm]
    return reverify(UnitMatrix(M.exps[perm], M.m, z), M)


def permute_cols(M: UnitMatrix, perm: Sequence[int]) -> UnitMatrix:
    perm = list(perm)
    if sorted(perm) != list(range(M.n)):
        raise ValueError(f"not a permutation of range({M.n}): {perm}")
    z = None if M.zeros is None else M.zeros[:, perm]
    return reverify(UnitMatrix(M.exps[:, perm], M.m, z), M)


def swap_rows(M: UnitMatrix, i: int, j: int) -> UnitMatrix:
    perm = list(range(M.n))
    perm[i], perm[j] = perm[j], perm[i]
    return permute_rows(M, perm)


def _scale(M: UnitMatrix, index: int, c, axis: int) -> UnitMatrix:
    if not 0 <= index < M.n:
        raise ValueError(f"index {index} out of range for order {M.n}")
    c = _as_root(c, M.m)
    m = lcm(M.m, c.m)
    e = np.array(M.exps * (m // M.m))
    shift = c.reembed(m).k
    if axis == 0:
        e[index, :] += shift
    else:
        e[:, index] += shift
    out = UnitMatrix(e, m, M.zeros)
    if M.kind == WEIGHING and not out.is_real():
        return out
    return reverify(out, M)


def scale_row(M: UnitMatrix, i: int, c) -> UnitMatrix:
    """Multiply row i by the root of unity c (a RootExp, or an exponent over M.m)."""
    return _scale(M, i, c, 0)


def scale_col(M: UnitMatrix, j: int, c) -> UnitMatrix:
    return _scale(M, j, c, 1)


def equivalence_op(M: UnitMatrix, op: str, *args) -> UnitMatrix:
    ops = {
        "permute-rows": permute_rows,
        "permute-cols": permute_cols,
        "scale-row": scale_row,
        "scale-col": scale_col,
    }
    if op not in ops:
        raise ValueError(f"unknown equivalence operation {op!r}")
    return ops[op](M, *args)


def dephase(M: UnitMatrix) -> UnitMatrix:
    """Equivalent matrix with all-ones first row and column."""
    if M.kind != HADAMARD:
        M = verify_hadamard(M)
    e = M.exps - M.exps[0, :][None, :]
    e = e - e[:, 0][:, None]
    return verify_hadamard(UnitMatrix(e, M.m))


def kronecker(A: UnitMatrix, B: UnitMatrix) -> UnitMatrix:
    """Kronecker product; entry ((i, k), (j, l)) is A[i, j] * B[k, l]."""
    m = lcm(A.m, B.m)
    ea, eb = A.reembed(m).exps, B.reembed(m).exps
    e = (ea[:, None, :, None] + eb[None, :, None, :]).reshape(A.n * B.n, A.n * B.n)
    za = np.zeros(ea.shape, bool) if A.zeros is None else A.zeros
    zb = np.zeros(eb.shape, bool) if B.zeros is None else B.zeros
    z = (za[:, None, :, None] | zb[None, :, None, :]).reshape(e.shape)
    out = UnitMatrix(e, m, z)
    if A.kind == HADAMARD and B.kind == HADAMARD:
        return verify_hadamard(out)
    return out


# -- text formats -------------------------------------------------------------


def format_matrix(M: UnitMatrix) -> str:
    """``n m`` header then one line of exponents (``z`` for zero) per row."""
    lines = [f"{M.n} {M.m}"]
    for i in range(M.n):
        lines.append(" ".join("z" if M.is_zero(i, j) else str(int(M.exps[i, j])) for j in range(M.n)))
    return "\n".join(lines) + "\n"


def format_real(M: UnitMatrix) -> str:
    s = M.sign_array()
    sym = {1: "+", -1: "-", 0: "0"}
    return "".join("".join(sym[int(x)] for x in row) + "\n" for row in s)


def parse_matrix(text: str) -> UnitMatrix:
    """Parse either the exponent format or the +/-/0 shorthand (m = 2)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) == 2 and all(t.isdigit() for t in head):
        n, m = int(head[0]), int(head[1])
        body = lines[1:]
        if len(body) != n:
            raise ValueError(f"expected {n} rows, found {len(body)}")
        exps = np.zeros((n, n), dtype=np.int64)
        zeros = np.zeros((n, n), dtype=bool)
        for i, ln in enumerate(body):
            toks = ln.split()
            if len(toks) != n:
                raise ValueError(f"row {i + 1}: expected {n} entries, found {len(toks)}")
            for j, t in enumerate(toks):
                if t == "z":
                    zeros[i, j] = True
                else:
                    k = int(t)
                    if not 0 <= k < m:
                        raise ValueError(f"row {i + 1}: exponent {k} outside [0, {m})")
                    exps[i, j] = k
        return UnitMatrix(exps, m, zeros)
    rows = ["".join(ln.split()) for ln in lines]
    n = len(rows)
    table = {"+": (0, False), "-": (1, False), "0": (0, True)}
    exps = np.zeros((n, n), dtype=np.int64)
    zeros = np.zeros((n, n), dtype=bool)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i + 1}: expected {n} symbols, found {len(row)}")
        for j, ch in enumerate(row):
            if ch not in table:
                raise ValueError(f"row {i + 1}: unexpected symbol {ch!r}")
            exps[i, j], zeros[i, j] = table[ch]
    return UnitMatrix(exps, 2, zeros)


def from_signs(rows: Sequence[str] | Sequence[Sequence[int]]) -> UnitMatrix:
    """Build a real matrix from +/-/0 strings or from integer rows of 1/-1/0."""
    if not isinstance(rows, np.ndarray) and len(rows) and isinstance(rows[0], str):
        return parse_matrix("\n".join(rows))
    a = np.asarray(rows, dtype=np.int64)
    if not np.all(np.isin(a, (-1, 0, 1))):
        raise ValueError("sign rows must contain only -1, 0, 1")
    return UnitMatrix(np.where(a == -1, 1, 0), 2, a == 0)
