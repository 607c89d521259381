"""Named Hadamard and weighing matrices.

The order-8 Paley example and the order-7 Petrescu matrix are stored entry
by entry, since their row and column order fixes where the shaded cells sit.
"""

from __future__ import annotations

import os

import numpy as np

from .matrix import UnitMatrix, from_signs, kronecker, verify_hadamard, verify_weighing


class SizeLimitError(ValueError):
    pass


def size_limit(default: int) -> int:
    """Apply HADTRADES_MAX_N, which may lower but never raise ``default``."""
    raw = os.environ.get("HADTRADES_MAX_N")
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError:
        raise SizeLimitError(f"HADTRADES_MAX_N must be an integer, got {raw!r}") from None
    return min(default, cap)


def _check_order(n: int, default: int, what: str) -> None:
    limit = size_limit(default)
    if n > limit:
        raise SizeLimitError(f"{what}: order {n} exceeds the limit {limit}")


H2 = from_signs(["++", "+-"])


def sylvester(k: int) -> UnitMatrix:
    """Sylvester Hadamard matrix of order 2**k, k <= 6."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > 6:
        raise SizeLimitError(f"sylvester: k = {k} exceeds the limit 6")
    _check_order(2**k, 64, "sylvester")
    H = verify_hadamard(UnitMatrix([[0]], 2))
    h2 = verify_hadamard(H2)
    for _ in range(k):
        H = kronecker(h2, H)
    return H


def fourier(n: int) -> UnitMatrix:
    """Fourier matrix with entry (j, k) = zeta_n ** (j*k), over modulus n."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_order(n, 24, "fourier")
    idx = np.arange(n)
    return verify_hadamard(UnitMatrix(np.outer(idx, idx) % n, n))


PALEY_PRIMES = (3, 7, 11, 19, 23)


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobsthal(q: int) -> np.ndarray:
    """Q[a, b] = chi(a - b) over GF(q), q prime."""
    return np.array([[legendre(a - b, q) for b in range(q)] for a in range(q)], dtype=np.int64)


def paley_I(q: int) -> UnitMatrix:
    """Skew Paley I matrix of order q + 1 normalised so that H + H^T = 2I."""
    if q not in PALEY_PRIMES:
        raise ValueError(f"paley_I supports q in {PALEY_PRIMES}, got {q}")
    _check_order(q + 1, 24, "paley_I")
    S = np.zeros((q + 1, q + 1), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = -1
    S[1:, 1:] = jacobsthal(q)
    return verify_hadamard(from_signs(np.eye(q + 1, dtype=np.int64) + S))


PALEY8_ROWS = (
    "++++++++",
    "+---+-++",
    "++---+-+",
    "+++---+-",
    "+-++---+",
    "++-++---",
    "+-+-++--",
    "+--+-++-",
)

# 0-based (row, col) positions of the shaded cells.
PALEY8_SHADED = frozenset({(0, 0), (0, 1), (2, 3), (2, 4), (3, 3), (3, 4), (5, 0), (5, 1)})
PALEY8_BLOCK_2x4 = ((2, 3), (0, 1, 3, 4))
PALEY8_BLOCK_4x2 = ((0, 2, 3, 5), (0, 1))


def example_paley8() -> UnitMatrix:
    return verify_hadamard(from_signs(PALEY8_ROWS))


# u = zeta_3 written over zeta_6: 1 -> 0, u -> 2, -u -> 5, u^2 -> 4, -u^2 -> 1, -1 -> 3
PETRESCU7_PRINTED = (
    (0, 0, 0, 0, 0, 0, 0),
    (0, 5, 2, 1, 3, 3, 5),
    (0, 2, 5, 3, 1, 3, 5),
    (0, 1, 3, 2, 5, 5, 3),
    (0, 3, 1, 5, 2, 5, 3),
    (0, 3, 3, 5, 5, 2, 1),
    (0, 5, 5, 3, 3, 1, 2),
)
# PETRESCU7_PRINTED has u and -u exchanged in the 2x2 block at rows 4-5,
# columns 4-5 (1-based) and is not Hadamard for any unimodular u. This grid
# restores the block and matches the catalogued Petrescu matrix.
PETRESCU7_EXPS = (
    (0, 0, 0, 0, 0, 0, 0),
    (0, 5, 2, 1, 3, 3, 5),
    (0, 2, 5, 3, 1, 3, 5),
    (0, 1, 3, 5, 2, 5, 3),
    (0, 3, 1, 2, 5, 5, 3),
    (0, 3, 3, 5, 5, 2, 1),
    (0, 5, 5, 3, 3, 1, 2),
)
PETRESCU7_SHADED = frozenset({(1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (3, 4), (4, 3), (4, 4)})
# The shaded set is two 2x2 blocks. Scaling the first by c and the second by
# conj(c) keeps the matrix Hadamard for every unimodular c; one common scalar
# only works for c = -1.
PETRESCU7_BLOCKS = (((1, 2), (1, 2)), ((3, 4), (3, 4)))


def petrescu7() -> UnitMatrix:
    return verify_hadamard(UnitMatrix(PETRESCU7_EXPS, 6))


W64_PRINTED = (
    "00++++",
    "00++--",
    "++00+-",
    "++00-+",
    "+-+-00",
    "-+-+00",
)
# In W64_PRINTED the last two rows are negatives of each other. Flipping the
# two middle nonzero signs of the last row gives a genuine W(6, 4) in which
# every nonzero 2x2 block is still rank one.
W64_ROWS = W64_PRINTED[:5] + ("-++-00",)
W64_SHADED_BLOCK = ((0, 1), (2, 3))


def weave_w64() -> UnitMatrix:
    return verify_weighing(from_signs(W64_ROWS), 4)
