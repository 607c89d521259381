"""Trades in Hadamard and weighing matrices.

A trade is a set of cells of a host matrix that can all be changed to give
another matrix of the same kind. A :class:`Trade` may carry how it is
switched (a scalar multiplier for every cell, or explicit replacement
values); profile and symmetric-difference analytics work without one.

Cells are 0-based ``(row, col)`` pairs throughout the library; the
certificate format and the CLI use 1-based indices by default.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .cyclotomic import RootExp, cyclo_rank, lcm
from .matrix import (
    HADAMARD,
    WEIGHING,
    InvalidKindError,
    UnitMatrix,
    is_complex_hadamard,
    is_weighing,
    rows_orthogonal,
    verify_hadamard,
)

Cell = tuple[int, int]

NEG = RootExp(1, 2)


class TradeError(ValueError):
    pass


class ViolatesTradeError(TradeError):
    """A replacement value equals the host entry it is meant to change."""


class NotSkewError(TradeError):
    pass


@dataclass(frozen=True)
class Trade:
    n: int
    cells: frozenset[Cell]
    scalar: RootExp | None = None
    values: Mapping[Cell, RootExp] | None = field(default=None, hash=False, compare=True)

    def __post_init__(self) -> None:
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise TradeError("a trade needs at least one cell")
        for r, c in cells:
            if not (0 <= r < self.n and 0 <= c < self.n):
                raise TradeError(f"cell {(r, c)} out of range for order {self.n}")
        if self.scalar is not None and self.values is not None:
            raise TradeError("give either a scalar or explicit values, not both")
        if self.scalar is not None and self.scalar.is_one:
            raise TradeError("scalar multiplier must differ from 1")
        if self.values is not None:
            vals = {(int(r), int(c)): v for (r, c), v in dict(self.values).items()}
            if set(vals) != cells:
                raise TradeError("explicit assignment must cover exactly the trade cells")
            object.__setattr__(self, "values", vals)

    @classmethod
    def negation(cls, n: int, cells: Iterable[Cell]) -> Trade:
        return cls(n, frozenset(cells), scalar=NEG)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def has_assignment(self) -> bool:
        return self.scalar is not None or self.values is not None

    def is_negation(self) -> bool:
        return self.scalar is not None and 2 * self.scalar.k == self.scalar.m

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def rows(self) -> list[int]:
        return sorted({r for r, _ in self.cells})

    def cols_in_row(self, r: int) -> list[int]:
        return sorted(c for rr, c in self.cells if rr == r)

    def replacements(self, H: UnitMatrix) -> dict[Cell, RootExp | None]:
        """New value for each cell on host H (None marks a structural zero)."""
        if self.values is not None:
            return dict(self.values)
        if self.scalar is None:
            raise TradeError("trade has no assignment")
        out = {}
        for r, c in self.cells:
            e = H.entry(r, c)
            out[(r, c)] = None if e is None else e * self.scalar
        return out

    def __hash__(self) -> int:
        return hash((self.n, self.cells, self.scalar))


@dataclass(frozen=True, order=True)
class RectBlock:
    """Rows A x columns B, switched by multiplying every entry by c."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    c: RootExp = NEG

    def __post_init__(self) -> None:
        rows, cols = tuple(sorted(set(self.rows))), tuple(sorted(set(self.cols)))
        if not rows or not cols:
            raise TradeError("a block needs at least one row and one column")
        if self.c.is_one:
            raise TradeError("block multiplier must differ from 1")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def area(self) -> int:
        return len(self.rows) * len(self.cols)

    def cells(self) -> frozenset[Cell]:
        return frozenset((r, c) for r in self.rows for c in self.cols)

    def trade(self, n: int) -> Trade:
        return Trade(n, self.cells(), scalar=self.c)

    def one_based(self) -> tuple[list[int], list[int]]:
        return [r + 1 for r in self.rows], [c + 1 for c in self.cols]


# -- switching ----------------------------------------------------------------


def apply_switch(H: UnitMatrix, T: Trade) -> UnitMatrix:
    """H with the cells of T replaced by T's assignment (unverified)."""
    if T.n != H.n:
        raise TradeError(f"trade order {T.n} does not match host order {H.n}")
    if not T.has_assignment:
        raise TradeError("trade has no assignment")
    new = T.replacements(H)
    m = H.m
    for v in new.values():
        if v is not None:
            m = lcm(m, v.m)
    exps = np.array(H.exps * (m // H.m))
    zeros = np.zeros(exps.shape, dtype=bool) if H.zeros is None else np.array(H.zeros)
    for (r, c), v in new.items():
        old = H.entry(r, c)
        if v is None:
            if old is None:
                raise ViolatesTradeError(f"cell {(r + 1, c + 1)} is zero before and after the switch")
            zeros[r, c] = True
            continue
        v = v.reembed(m)
        if old is not None and old.reembed(m) == v:
            raise ViolatesTradeError(f"cell {(r + 1, c + 1)} keeps its value {old}")
        exps[r, c] = v.k
        zeros[r, c] = False
    return UnitMatrix(exps, m, zeros)


def _verified_host(H: UnitMatrix) -> UnitMatrix:
    if H.kind in (HADAMARD, WEIGHING):
        return H
    return verify_hadamard(H)


def is_trade(H: UnitMatrix, T: Trade) -> bool:
    """Does switching T in H give another matrix of H's kind (real stays real)?"""
    H = _verified_host(H)
    Hp = apply_switch(H, T)
    if H.is_real() and not Hp.is_real():
        return False
    if H.kind == WEIGHING:
        return is_weighing(Hp, H.weight)
    return not Hp.has_zeros and is_complex_hadamard(Hp)


def lemma1_violations(H: UnitMatrix, T: Trade) -> list[tuple[int, int]]:
    """Pairs (i, j), i meeting T and j disjoint from it, with <r_{i,B_i}, r_{j,B_i}> != 0.

    B_i is the set of columns where row i meets T. Any violation certifies
    that T cannot be switched by a single scalar.
    """
    if T.scalar is None:
        raise TradeError("the necessary condition applies to scalar switches only")
    met = T.rows()
    unmet = [j for j in range(H.n) if j not in set(met)]
    bad = []
    for i in met:
        cols = T.cols_in_row(i)
        for j in unmet:
            if not rows_orthogonal(H, i, j, cols):
                bad.append((i, j))
    return bad


def lemma1_necessary(H: UnitMatrix, T: Trade) -> bool:
    return not lemma1_violations(H, T)


def rectangular_violations(H: UnitMatrix, R: RectBlock) -> list[tuple[int, int]]:
    inside = set(R.rows)
    return [
        (i, j)
        for i in R.rows
        for j in range(H.n)
        if j not in inside and not rows_orthogonal(H, i, j, R.cols)
    ]


def is_rectangular_trade(H: UnitMatrix, R: RectBlock) -> bool:
    """Exact block test: <r_{i,B}, r_{j,B}> = 0 for all i in A, j not in A.

    The multiplier R.c plays no part in the verdict.
    """
    if max(R.rows) >= H.n or max(R.cols) >= H.n:
        raise TradeError("block indices out of range")
    return not rectangular_violations(H, R)


def row_pair_trade(H: UnitMatrix, i: int, j: int) -> RectBlock:
    """The 2 x n/2 block where real rows i and j disagree."""
    if i == j:
        raise TradeError("row_pair_trade needs two distinct rows")
    if not H.is_real() or H.has_zeros:
        raise InvalidKindError("row_pair_trade needs a real Hadamard matrix")
    H = _verified_host(H)
    cols = tuple(int(c) for c in np.flatnonzero(H.exps[i] != H.exps[j]))
    return RectBlock((i, j), cols, RootExp.minus_one(H.m))


# -- rank one -------------------------------------------------------------------


def is_rank_one(H: UnitMatrix, rows: Iterable[int], cols: Iterable[int]) -> bool:
    rows, cols = sorted(set(rows)), sorted(set(cols))
    if not rows or not cols:
        raise TradeError("rank test needs nonempty row and column sets")
    return cyclo_rank(H.cyclo_submatrix(rows, cols)) == 1


def proportional_groups(
    H: UnitMatrix, min_rows: int = 1, max_cols: int | None = None, bound=None
) -> Iterator[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """Depth-first walk over column sets B, in lexicographic order.

    Yields ``(B, groups)`` where ``groups`` partitions the rows whose
    restriction to B is proportional to each other (so each group spans a
    rank-one block on B). Groups smaller than ``min_rows`` are dropped and a
    branch dies once no group is left, since rank one is hereditary.
    ``bound(B, groups, remaining)`` may return False to cut a branch.
    Zero-free matrices only.
    """
    if H.has_zeros:
        raise InvalidKindError("proportional_groups needs a zero-free matrix")
    n, m, E = H.n, H.m, H.exps
    max_cols = n if max_cols is None else max_cols

    def walk(B: tuple[int, ...], groups: list[tuple[int, ...]], start: int):
        for j in range(start, n):
            if not B:
                new = [tuple(range(n))] if n >= min_rows else []
            else:
                j0 = B[0]
                new = []
                for g in groups:
                    split: dict[int, list[int]] = {}
                    for r in g:
                        split.setdefault(int(E[r, j] - E[r, j0]) % m, []).append(r)
                    new.extend(tuple(v) for v in split.values() if len(v) >= min_rows)
            if not new:
                continue
            new.sort()
            B2 = B + (j,)
            yield B2, new
            if len(B2) < max_cols and (bound is None or bound(B2, new, n - j - 1)):
                yield from walk(B2, new, j + 1)

    yield from walk((), [], 0)


def enumerate_rank_one_blocks(H: UnitMatrix, a: int, b: int) -> list[RectBlock]:
    """All a x b rank-one submatrices of H with a * b = n, lexicographically."""
    if a * b != H.n or a < 1 or b < 1:
        raise TradeError(f"block shape {a}x{b} does not have area n = {H.n}")
    c = RootExp.minus_one(lcm(H.m, 2))
    out = []
    if H.has_zeros:
        for A in combinations(range(H.n), a):
            for B in combinations(range(H.n), b):
                if is_rank_one(H, A, B):
                    out.append(RectBlock(A, B, c))
    else:
        for B, groups in proportional_groups(H, min_rows=a, max_cols=b):
            if len(B) != b:
                continue
            for g in groups:
                out.extend(RectBlock(A, B, c) for A in combinations(g, a))
    out.sort()
    return out


# -- trade analytics ------------------------------------------------------------


@dataclass(frozen=True)
class TradeProfile:
    n: int
    size: int
    row_counts: tuple[int, ...]
    col_counts: tuple[int, ...]
    d: int | None
    e: int | None

    @property
    def rows_met(self) -> int:
        return sum(1 for x in self.row_counts if x)

    @property
    def cols_met(self) -> int:
        return sum(1 for x in self.col_counts if x)

    @property
    def d_even_or_one(self) -> bool:
        return self.d is not None and (self.d % 2 == 0 or self.d == 1)

    @property
    def e_even_or_one(self) -> bool:
        return self.e is not None and (self.e % 2 == 0 or self.e == 1)

    @property
    def rows_account_for_size(self) -> bool:
        return self.d is not None and self.d * self.rows_met == self.size

    def minimal_structure_holds(self) -> bool:
        """The structure forced on a size-n trade in a real Hadamard matrix."""
        return (
            self.d is not None
            and self.e is not None
            and self.n % self.d == 0
            and self.n % self.e == 0
            and self.d_even_or_one
            and self.e_even_or_one
            and self.rows_account_for_size
        )


def _uniform(counts: Sequence[int]) -> int | None:
    nz = {x for x in counts if x}
    return nz.pop() if len(nz) == 1 else None


def trade_profile(T: Trade) -> TradeProfile:
    rows = Counter(r for r, _ in T.cells)
    cols = Counter(c for _, c in T.cells)
    rc = tuple(rows.get(i, 0) for i in range(T.n))
    cc = tuple(cols.get(j, 0) for j in range(T.n))
    return TradeProfile(T.n, T.size, rc, cc, _uniform(rc), _uniform(cc))


def symmetric_difference(T1: Trade, T2: Trade) -> frozenset[Cell]:
    if T1.n != T2.n:
        raise TradeError("trades live in matrices of different orders")
    return T1.cells ^ T2.cells


def symdiff_trade(T1: Trade, T2: Trade) -> Trade:
    """For two negation trades, the negation trade on their symmetric difference."""
    if not (T1.is_negation() and T2.is_negation()):
        raise TradeError("induced symmetric-difference trade needs two negation trades")
    cells = symmetric_difference(T1, T2)
    if not cells:
        raise TradeError("the symmetric difference is empty")
    return Trade(T1.n, cells, scalar=T1.scalar)


def is_skew(H: UnitMatrix) -> bool:
    if not H.is_real() or H.has_zeros:
        return False
    S = H.sign_array()
    return bool(np.array_equal(S + S.T, 2 * np.eye(H.n, dtype=S.dtype)))


def diagonal_trade(H: UnitMatrix) -> Trade:
    """The negated main diagonal of a skew-Hadamard matrix (H + H^T = 2I)."""
    if not is_skew(H):
        raise NotSkewError("diagonal_trade needs a real matrix with H + H^T = 2I")
    return Trade.negation(H.n, ((i, i) for i in range(H.n)))


# -- GF(2) span of the minimal rectangular trades ---------------------------------


def _indicator(n: int, cells: Iterable[Cell]) -> int:
    v = 0
    for r, c in cells:
        v |= 1 << (r * n + c)
    return v


@dataclass
class TradeSpace:
    """GF(2) span of the indicator vectors of all size-n rectangular trades.

    Membership does not make a cell set a trade; the span may contain
    non-trades.
    """

    n: int
    generators: list[RectBlock]
    basis: dict[int, int]  # pivot bit -> reduced vector

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce(self, v: int) -> int:
        for p in sorted(self.basis, reverse=True):
            if (v >> p) & 1:
                v ^= self.basis[p]
        return v

    def contains(self, cells: Iterable[Cell]) -> bool:
        return self.reduce(_indicator(self.n, cells)) == 0

    def basis_vectors(self) -> list[int]:
        return [self.basis[p] for p in sorted(self.basis)]


def gf2_reduced_basis(vectors: Iterable[int]) -> dict[int, int]:
    """Fully reduced echelon basis keyed by each vector's leading bit."""
    basis: dict[int, int] = {}
    for v in vectors:
        for p in sorted(basis, reverse=True):
            if (v >> p) & 1:
                v ^= basis[p]
        if not v:
            continue
        p = v.bit_length() - 1
        for q in basis:
            if (basis[q] >> p) & 1:
                basis[q] ^= v
        basis[p] = v
    return basis


def trade_space_gf2(H: UnitMatrix) -> TradeSpace:
    if not H.is_real() or H.has_zeros:
        raise InvalidKindError("trade_space_gf2 needs a real Hadamard matrix")
    if H.n > 16:
        raise TradeError(f"trade_space_gf2 supports n <= 16, got {H.n}")
    gens = []
    for a in range(1, H.n + 1):
        if H.n % a == 0:
            gens.extend(enumerate_rank_one_blocks(H, a, H.n // a))
    basis = gf2_reduced_basis(_indicator(H.n, g.cells()) for g in gens)
    return TradeSpace(H.n, gens, basis)


# -- certificate files --------------------------------------------------------------


def trade_to_json(T: Trade, modulus: int | None = None, zero_index: bool = False) -> str:
    """Serialise T as a trade certificate.

    ``modulus`` defaults to the modulus of the assignment (2 if there is none).
    """
    off = 0 if zero_index else 1
    if T.scalar is not None:
        m = modulus or T.scalar.m
        assignment = {"scalar": T.scalar.reembed(m).k}
    elif T.values is not None:
        m = modulus or 1
        if modulus is None:
            for v in T.values.values():
                m = lcm(m, v.m)
        assignment = [[r + off, c + off, T.values[(r, c)].reembed(m).k] for r, c in sorted(T.values)]
    else:
        m = modulus or 2
        assignment = None
    doc = {
        "order": T.n,
        "modulus": m,
        "cells": [[r + off, c + off] for r, c in T.sorted_cells()],
        "assignment": assignment,
    }
    return json.dumps(doc, indent=1) + "\n"


def trade_from_json(text: str, zero_index: bool = False) -> Trade:
    doc = json.loads(text)
    try:
        n, m, cells = int(doc["order"]), int(doc["modulus"]), doc["cells"]
    except (KeyError, TypeError) as exc:
        raise TradeError(f"malformed trade certificate: {exc}") from None
    off = 0 if zero_index else 1
    cellset = [(int(r) - off, int(c) - off) for r, c in cells]
    if len(set(cellset)) != len(cellset):
        raise TradeError("duplicate cells in certificate")
    a = doc.get("assignment")
    if a is None:
        return Trade(n, frozenset(cellset))
    if isinstance(a, dict) and "scalar" in a:
        return Trade(n, frozenset(cellset), scalar=RootExp(int(a["scalar"]), m))
    if isinstance(a, list):
        vals = {(int(r) - off, int(c) - off): RootExp(int(k), m) for r, c, k in a}
        return Trade(n, frozenset(cellset), values=vals)
    raise TradeError(f"unrecognised assignment {a!r}")
