"""Exact arithmetic over roots of unity and the cyclotomic fields Q(zeta_m).

Elements are stored as rational coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(m)-1), reduced modulo the cyclotomic polynomial.
Since that polynomial is irreducible the representation is canonical, so
equality and zero tests are plain coefficient comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
import cmath
from typing import Iterable, Sequence

MAX_MODULUS = 360


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _check_modulus(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"modulus must be a positive integer, got {m!r}")
    if m > MAX_MODULUS:
        raise ValueError(f"modulus {m} exceeds the supported maximum {MAX_MODULUS}")


# -- integer / rational polynomial helpers (ascending coefficient lists) -----


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_monic(num: Sequence, den: Sequence[int]) -> tuple[list, list]:
    """Long division by a monic polynomial; exact over Z and Q alike."""
    rem = list(num)
    dd = len(den) - 1
    if len(rem) <= dd:
        return [], _trim(rem)
    quot = [0] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd]
        if c:
            quot[shift] = c
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _trim(quot), _trim(rem[:dd])


def _mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _sub(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def _divmod_field(num: list, den: list) -> tuple[list, list]:
    """Division with remainder over Q (den need not be monic)."""
    rem = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    dd = len(den) - 1
    if len(rem) <= dd:
        return [], _trim(rem)
    quot = [Fraction(0)] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd] / lead
        if c:
            quot[shift] = c
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _trim(quot), _trim(rem[:dd])


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _divmod_monic(num, _cyclotomic(d))
            assert not rem
    return tuple(num)


def cyclotomic_poly(m: int) -> list[int]:
    """Return the m-th cyclotomic polynomial as ascending integer coefficients."""
    _check_modulus(m)
    return list(_cyclotomic(m))


def totient(m: int) -> int:
    return len(_cyclotomic(m)) - 1


def is_vanishing_sum(exponents: Iterable[int], m: int) -> bool:
    """Decide exactly whether sum(zeta_m ** k for k in exponents) == 0."""
    _check_modulus(m)
    poly = [0] * m
    for k in exponents:
        poly[k % m] += 1
    _, rem = _divmod_monic(_trim(poly), _cyclotomic(m))
    return not rem


# -- roots of unity ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class RootExp:
    """The root of unity exp(2*pi*i*k/m), stored as its exponent k mod m."""

    k: int
    m: int

    def __post_init__(self) -> None:
        _check_modulus(self.m)
        object.__setattr__(self, "k", self.k % self.m)

    @classmethod
    def one(cls, m: int = 1) -> RootExp:
        return cls(0, m)

    @classmethod
    def minus_one(cls, m: int = 2) -> RootExp:
        if m % 2:
            raise ValueError(f"-1 is not an {m}-th root of unity")
        return cls(m // 2, m)

    def __mul__(self, other: RootExp) -> RootExp:
        if not isinstance(other, RootExp):
            return NotImplemented
        m = lcm(self.m, other.m)
        return RootExp(self.k * (m // self.m) + other.k * (m // other.m), m)

    def conj(self) -> RootExp:
        return RootExp(-self.k, self.m)

    def reembed(self, m: int) -> RootExp:
        if m % self.m:
            raise ValueError(f"cannot embed modulus {self.m} into {m}")
        return RootExp(self.k * (m // self.m), m)

    def order(self) -> int:
        return self.m // gcd(self.k, self.m)

    def reduced(self) -> RootExp:
        """The same root expressed over its own order."""
        q = self.order()
        return RootExp(self.k // (self.m // q), q)

    @property
    def is_one(self) -> bool:
        return self.k == 0

    def is_real(self) -> bool:
        return self.k == 0 or 2 * self.k == self.m

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.k / self.m)

    def to_cyclo(self, m: int | None = None) -> CycloNumber:
        r = self if m is None else self.reembed(m)
        return CycloNumber.root(r.k, r.m)


# -- field elements ----------------------------------------------------------


class CycloNumber:
    """An element of Q(zeta_m) in the reduced power basis."""

    __slots__ = ("m", "coeffs")

    def __init__(self, coeffs: Iterable, m: int) -> None:
        _check_modulus(m)
        poly = _trim([Fraction(c) for c in coeffs])
        _, rem = _divmod_monic(poly, _cyclotomic(m))
        deg = totient(m)
        rem = [Fraction(c) for c in rem]
        self.m = m
        self.coeffs: tuple[Fraction, ...] = tuple(rem + [Fraction(0)] * (deg - len(rem)))

    def __setattr__(self, name, value):
        if hasattr(self, "coeffs"):
            raise AttributeError("CycloNumber is immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def zero(cls, m: int) -> CycloNumber:
        return cls([], m)

    @classmethod
    def from_rational(cls, x, m: int) -> CycloNumber:
        return cls([x], m)

    @classmethod
    def root(cls, k: int, m: int) -> CycloNumber:
        k %= m
        return cls([0] * k + [1], m)

    def _coerce(self, other) -> CycloNumber:
        if isinstance(other, CycloNumber):
            if other.m != self.m:
                raise ValueError(f"modulus mismatch: {self.m} vs {other.m}; re-embed first")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(other, self.m)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(other, self.m)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __add__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber([a + b for a, b in zip(self.coeffs, other.coeffs)], self.m)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber([-a for a in self.coeffs], self.m)

    def __sub__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber([a - b for a, b in zip(self.coeffs, other.coeffs)], self.m)

    def __rsub__(self, other) -> CycloNumber:
        return -(self - other)

    def __mul__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber(_mul(self.coeffs, other.coeffs), self.m)

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # invariant: s_i * a == r_i  (mod phi)
        r0, r1 = [Fraction(c) for c in _cyclotomic(self.m)], _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _divmod_field(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub(s0, _mul(q, s1))
        # r1 is a nonzero constant since phi is irreducible
        c = r1[0]
        return CycloNumber([x / c for x in s1], self.m)

    def __truediv__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def conj(self) -> CycloNumber:
        poly = [Fraction(0)] * self.m
        for i, c in enumerate(self.coeffs):
            poly[(-i) % self.m] += c
        return CycloNumber(poly, self.m)

    def reembed(self, m: int) -> CycloNumber:
        if m % self.m:
            raise ValueError(f"cannot embed modulus {self.m} into {m}")
        step = m // self.m
        poly = [Fraction(0)] * (step * len(self.coeffs) or 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] += c
        return CycloNumber(poly, m)

    def rational(self) -> Fraction | None:
        """The value as a rational if it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CycloNumber({' + '.join(terms) or '0'}; m={self.m})"


def cyclo_arith(a: CycloNumber, b: CycloNumber | None, op: str) -> CycloNumber:
    """Dispatch helper: op is one of add, mul, inv, conj (b unused for the unary ops)."""
    if op in ("add", "mul"):
        if b is None or a.m != b.m:
            raise ValueError("binary cyclotomic op needs operands of equal modulus")
        return a + b if op == "add" else a * b
    if op == "inv":
        return a.inverse()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown op {op!r}")


class CycloVector:
    """A finite vector over Q(zeta_m)."""

    __slots__ = ("entries", "m")

    def __init__(self, entries: Iterable[CycloNumber], m: int | None = None) -> None:
        entries = tuple(entries)
        if not entries:
            raise ValueError("CycloVector needs at least one entry")
        m = entries[0].m if m is None else m
        if any(e.m != m for e in entries):
            raise ValueError("all entries must share the same modulus")
        self.entries = entries
        self.m = m

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> CycloNumber:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __add__(self, other: CycloVector) -> CycloVector:
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return CycloVector((a + b for a, b in zip(self, other)), self.m)

    def __sub__(self, other: CycloVector) -> CycloVector:
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return CycloVector((a - b for a, b in zip(self, other)), self.m)

    def scale(self, c: CycloNumber) -> CycloVector:
        return CycloVector((c * a for a in self), self.m)

    def inner(self, other: CycloVector) -> CycloNumber:
        """Hermitian inner product sum(x_i * conj(y_i))."""
        if len(other) != len(self):
            raise ValueError("length mismatch")
        total = CycloNumber.zero(self.m)
        for a, b in zip(self, other):
            total = total + a * b.conj()
        return total

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self) if not e.is_zero())

    def to_complex(self) -> list[complex]:
        return [e.to_complex() for e in self]

    def __repr__(self) -> str:
        return f"CycloVector({list(self.entries)!r})"


# -- exact linear algebra ----------------------------------------------------


def _row_reduce(rows: list[list[CycloNumber]]) -> tuple[list[list[CycloNumber]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _check_matrix(M: Sequence[Sequence[CycloNumber]]) -> None:
    if not M:
        return
    width = len(M[0])
    if any(len(row) != width for row in M):
        raise ValueError("matrix rows have unequal lengths")
    ms = {x.m for row in M for x in row}
    if len(ms) > 1:
        raise ValueError(f"inconsistent moduli {sorted(ms)}")


def cyclo_rank(M: Sequence[Sequence[CycloNumber]]) -> int:
    """Rank over Q(zeta_m) by exact Gaussian elimination."""
    _check_matrix(M)
    if not M or not M[0]:
        return 0
    return len(_row_reduce([list(r) for r in M])[1])


def cyclo_nullspace(M: Sequence[Sequence[CycloNumber]], m: int | None = None) -> list[list[CycloNumber]]:
    """A basis of {x : M x = 0}; M must have at least one column."""
    _check_matrix(M)
    if not M:
        raise ValueError("nullspace of a matrix with no rows needs an explicit width")
    ncols = len(M[0])
    m = M[0][0].m if m is None else m
    rref, pivots = _row_reduce([list(r) for r in M])
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        x = [CycloNumber.zero(m) for _ in range(ncols)]
        x[free] = CycloNumber.from_rational(1, m)
        for row, pc in zip(rref, pivots):
            x[pc] = -row[free]
        basis.append(x)
    return basis


@lru_cache(maxsize=None)
def _prime_root(m: int) -> tuple[int, int]:
    """A prime p = 1 mod m and an element of order exactly m in GF(p)."""
    p = m * (10007 // m + 1) + 1
    while any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        p += m
    factors = {q for q in range(2, m + 1) if m % q == 0 and all(q % r for r in range(2, q))}
    for a in range(2, p):
        w = pow(a, (p - 1) // m, p)
        if all(pow(w, m // q, p) != 1 for q in factors):
            return p, w
    raise AssertionError("unreachable: GF(p)* is cyclic")


def root_rank_lower_bound(exps: Sequence[Sequence[int]], m: int, zeros=None) -> int:
    """Rank of the image of a root-of-unity matrix in GF(p), with zeta_m sent to w.

    The reduction is a ring map on Z[zeta_m], so a nonzero minor of the image
    lifts to a nonzero minor: the result never exceeds the true rank.
    """
    _check_modulus(m)
    p, w = _prime_root(m)
    pw = [pow(w, k, p) for k in range(m)]
    rows = [
        [0 if zeros is not None and zeros[i][j] else pw[int(k) % m] for j, k in enumerate(row)]
        for i, row in enumerate(exps)
    ]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] * inv % p
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
