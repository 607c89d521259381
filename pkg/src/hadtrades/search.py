"""Exhaustive searches that certify trade bounds at small orders.

Every search returns a :class:`SearchReport`. Nothing here samples: a
"none exists" certificate is only issued after the whole space has been
covered.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import ceil, gcd
from typing import Any, NamedTuple, Sequence

import numpy as np

from .constructions import PETRESCU7_BLOCKS, PETRESCU7_SHADED, SizeLimitError, fourier, petrescu7, size_limit
from .cyclotomic import CycloNumber, CycloVector, RootExp, cyclo_nullspace, cyclo_rank, root_rank_lower_bound
from .matrix import InvalidKindError, UnitMatrix
from .trades import (
    RectBlock,
    Trade,
    TradeError,
    enumerate_rank_one_blocks,
    is_trade,
    proportional_groups,
    trade_profile,
)


@dataclass
class SupportWitness:
    cols: tuple[int, ...]
    rows: tuple[int, ...]
    alpha: list[CycloNumber]
    gamma: CycloVector


@dataclass
class SearchReport:
    kind: str
    host: str
    params: dict[str, Any]
    witnesses: list = field(default_factory=list)
    statement: str = ""
    cert: str = ""
    value: int | None = None
    nodes: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def cert_line(self) -> str:
        return f"CERT {self.cert}"

    def to_text(self, zero_index: bool = False, timing: bool = False) -> str:
        off = 0 if zero_index else 1
        lines = [
            f"kind: {self.kind}",
            f"host: {self.host}",
            "params: " + " ".join(f"{k}={v}" for k, v in self.params.items()),
            f"nodes: {self.nodes}",
        ]
        if timing:
            lines.append(f"elapsed: {self.elapsed:.3f}")
        if self.value is not None:
            lines.append(f"value: {self.value}")
        lines.append(f"statement: {self.statement}")
        lines.extend(f"note: {n}" for n in self.notes)
        lines.append(f"witnesses: {len(self.witnesses)}")
        lines.extend(f"witness {i + 1}: {describe(w, off)}" for i, w in enumerate(self.witnesses))
        lines.append(self.cert_line)
        return "\n".join(lines) + "\n"


def describe(w, off: int = 1) -> str:
    """One-line rendering of a witness with ``off``-based indices."""
    if isinstance(w, Trade):
        p = trade_profile(w)
        cells = " ".join(f"{r + off}:{c + off}" for r, c in w.sorted_cells())
        return f"size={w.size} d={p.d} e={p.e} cells={cells}"
    if isinstance(w, RectBlock):
        rows = ",".join(str(r + off) for r in w.rows)
        cols = ",".join(str(c + off) for c in w.cols)
        return f"rows={rows} cols={cols} area={w.area}"
    if isinstance(w, SupportWitness):
        cols = ",".join(str(c + off) for c in w.cols)
        rows = ",".join(str(r + off) for r in w.rows)
        alpha = " ".join(_fmt_cyclo(a) for a in w.alpha)
        return f"cols={cols} support={rows} alpha=[{alpha}]"
    return str(w)


def _fmt_cyclo(x: CycloNumber) -> str:
    terms = [f"{c}*z{x.m}^{i}" if i else str(c) for i, c in enumerate(x.coeffs) if c]
    return "+".join(terms) or "0"


def _host_name(H: UnitMatrix, host: str | None) -> str:
    return host or f"order {H.n} modulus {H.m}"


# -- minimum trades in real Hadamard matrices -------------------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _RealTradeDFS:
    """Row-by-row completion of +-1 matrices within Hamming distance ``budget`` of H.

    Rows are bitmasks (bit set = -1). Row i of the new matrix must be
    orthogonal to every earlier new row (exactly n/2 disagreements).

    With ``prune`` on, two admissible cuts are applied:
      * parity: a real trade that misses some row meets every row an even
        number of times, so once a row is left unchanged (or the budget can no
        longer touch every remaining row) only even distances are allowed,
        and an odd-distance row forces every row to change;
      * look-ahead: a future row j must flip at least |<h_j, x_k>| / 2 entries
        to become orthogonal to a chosen row x_k.
    """

    def __init__(self, rows: Sequence[int], n: int, budget: int, prune: bool = True) -> None:
        self.h = list(rows)
        self.n = n
        self.budget = budget
        self.prune = prune
        self.half = n // 2
        self.masks = [[sum(1 << p for p in pos) for pos in combinations(range(n), d)] for d in range(n + 1)]
        self.nodes = 0
        self.found: list[tuple[int, ...]] = []

    def candidates(self, i: int, remaining: int, even_only: bool, nonzero: bool):
        for d in range(1 if nonzero else 0, remaining + 1):
            if even_only and d % 2:
                continue
            for mask in self.masks[d]:
                yield d, self.h[i] ^ mask

    def top_choices(self) -> list[tuple[int, int]]:
        return list(self.candidates(0, self.budget, False, False))

    def run(self, first: Sequence[tuple[int, int]] | None = None) -> None:
        need = [0] * self.n
        if first is None:
            self._extend([], 0, False, False, need)
            return
        for d, x in first:
            self._try(x, d, [], 0, False, False, need)

    def _try(self, x, d, chosen, used, odd_seen, unmet_seen, need) -> None:
        n = self.n
        i = len(chosen)
        for y in chosen:
            if _popcount(x ^ y) != self.half:
                return
        self.nodes += 1
        odd2, unmet2 = odd_seen or d % 2 == 1, unmet_seen or d == 0
        used2 = used + d
        need2 = need
        if self.prune:
            if odd2 and unmet2:
                return
            need2 = list(need)
            lower = 0
            for j in range(i + 1, n):
                ip = abs(n - 2 * _popcount(self.h[j] ^ x)) // 2
                if ip > need2[j]:
                    need2[j] = ip
                nj = need2[j]
                if odd2 and nj == 0:
                    nj = 1
                if unmet2 and nj % 2:
                    nj += 1
                lower += nj
            if used2 + lower > self.budget:
                return
        chosen.append(x)
        self._extend(chosen, used2, odd2, unmet2, need2)
        chosen.pop()

    def _extend(self, chosen, used, odd_seen, unmet_seen, need) -> None:
        i = len(chosen)
        if i == self.n:
            if used:
                self.found.append(tuple(chosen))
            return
        remaining = self.budget - used
        even_only = nonzero = False
        if self.prune:
            rows_left = self.n - i
            if rows_left > remaining:
                # some remaining row must stay unchanged
                if odd_seen:
                    return
                even_only = True
            even_only = even_only or unmet_seen
            nonzero = odd_seen
        for d, x in self.candidates(i, remaining, even_only, nonzero):
            self._try(x, d, chosen, used, odd_seen, unmet_seen, need)


def _dfs_chunk(args):
    rows, n, budget, prune, first = args
    dfs = _RealTradeDFS(rows, n, budget, prune)
    dfs.run(first)
    return dfs.nodes, dfs.found


def enumerate_nearby_hadamard(
    H: UnitMatrix, budget: int, prune: bool = True, workers: int = 1
) -> tuple[list[tuple[int, ...]], int]:
    """All real Hadamard matrices (as bit rows) at Hamming distance 1..budget from H.

    Returns (matrices sorted canonically, node count). The node count does
    not depend on ``workers``.
    """
    if H.has_zeros or not H.is_real():
        raise InvalidKindError("the minimum-trade search needs a real Hadamard matrix")
    rows = H.bit_rows()
    n = H.n
    if workers <= 1:
        dfs = _RealTradeDFS(rows, n, budget, prune)
        dfs.run()
        return sorted(dfs.found), dfs.nodes
    top = _RealTradeDFS(rows, n, budget, prune).top_choices()
    chunks = [top[k::workers] for k in range(workers)]
    nodes, found = 0, []
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for c_nodes, c_found in ex.map(_dfs_chunk, [(rows, n, budget, prune, c) for c in chunks]):
            nodes += c_nodes
            found.extend(c_found)
    return sorted(found), nodes


def diff_trade(H: UnitMatrix, new_rows: Sequence[int]) -> Trade:
    old = H.bit_rows()
    cells = [(i, j) for i, (a, b) in enumerate(zip(old, new_rows)) for j in range(H.n) if ((a ^ b) >> j) & 1]
    return Trade.negation(H.n, cells)


def min_trade_search_real(
    H: UnitMatrix,
    budget: int,
    host: str | None = None,
    prune: bool = True,
    verify: bool = True,
    workers: int = 1,
) -> SearchReport:
    """Find every trade of size <= budget in the real Hadamard matrix H."""
    limit = size_limit(12)
    if H.n > limit:
        raise SizeLimitError(f"min-trade search supports n <= {limit}, got {H.n}")
    if not 1 <= budget <= H.n:
        raise ValueError(f"budget must lie in [1, {H.n}], got {budget}")
    t0 = time.perf_counter()
    found, nodes = enumerate_nearby_hadamard(H, budget, prune, workers)
    trades = sorted((diff_trade(H, f) for f in found), key=lambda t: (t.size, t.sorted_cells()))
    if verify:
        for t in trades:
            if not is_trade(H, t):
                raise AssertionError(f"search produced a non-trade: {describe(t)}")
    rep = SearchReport(
        "min-trade",
        _host_name(H, host),
        {"budget": budget, "prune": prune},
        witnesses=trades,
        nodes=nodes,
    )
    if trades:
        k = trades[0].size
        rep.value = k
        rep.cert = f"min-size {k}"
        rep.statement = f"smallest trade has size {k}; all {len(trades)} trades of size <= {budget} listed"
    else:
        rep.cert = f"none-below {budget + 1}"
        rep.statement = f"no trade of size <= {budget} exists"
    rep.elapsed = time.perf_counter() - t0
    return rep


# -- column-span supports -------------------------------------------------------------


def _sub_exps(H: UnitMatrix, rows, cols):
    return H.exps[np.ix_(rows, cols)].tolist()


def _sub_zeros(H: UnitMatrix, rows, cols):
    return None if H.zeros is None else H.zeros[np.ix_(rows, cols)].tolist()


def min_support_column_span(H: UnitMatrix, cols: Sequence[int], host: str | None = None) -> SearchReport:
    """Least number of nonzero entries in a nonzero combination of the given columns.

    For each row set S of size s = 1, 2, ..., a combination vanishing off S
    exists iff the rows outside S restricted to ``cols`` have rank < b. A
    rank computed modulo a prime settles most full-rank cases before the
    exact elimination runs.
    """
    cols = tuple(sorted(set(cols)))
    b = len(cols)
    n = H.n
    if not 1 <= b <= 4:
        raise SizeLimitError(f"min-support handles 1 to 4 columns, got {b}")
    limit = size_limit(12)
    if n > limit:
        raise SizeLimitError(f"min-support supports n <= {limit}, got {n}")
    if any(not 0 <= c < n for c in cols):
        raise ValueError("column index out of range")
    t0 = time.perf_counter()
    nodes = 0
    full = tuple(range(n))
    for s in range(1, n + 1):
        for S in combinations(full, s):
            nodes += 1
            rest = [r for r in full if r not in S]
            if rest and root_rank_lower_bound(_sub_exps(H, rest, cols), H.m, _sub_zeros(H, rest, cols)) == b:
                continue
            sub = H.cyclo_submatrix(rest, cols)
            if rest and cyclo_rank(sub) == b:
                continue
            if rest:
                alpha = cyclo_nullspace(sub)[0]
            else:
                alpha = [CycloNumber.from_rational(1, H.m)] + [CycloNumber.zero(H.m)] * (b - 1)
            gamma = CycloVector(
                sum((a * H.cyclo(r, c) for a, c in zip(alpha, cols)), CycloNumber.zero(H.m)) for r in full
            )
            support = tuple(sorted(gamma.support()))
            rep = SearchReport(
                "min-support",
                _host_name(H, host),
                {"cols": ",".join(map(str, cols))},
                witnesses=[SupportWitness(cols, support, alpha, gamma)],
                value=len(support),
                cert=f"min-support {len(support)}",
                statement=(
                    f"every nonzero combination of these {b} columns has at least {len(support)} "
                    f"nonzero entries (floor ceil(n/b) = {ceil(n / b)})"
                ),
                nodes=nodes,
            )
            rep.elapsed = time.perf_counter() - t0
            return rep
    raise AssertionError("unreachable: the full row set always admits a combination")


class DivisorWitness(NamedTuple):
    vector: CycloVector
    support: frozenset[int]
    rows: tuple[int, ...]
    tight: bool


def fourier_divisor_witness(n: int, t: int) -> DivisorWitness:
    """Sum of the t rows of fourier(n) made of t-th roots of unity.

    It is nonzero on exactly the n/t columns divisible by t, which meets the
    ceil(n/b) support floor with b = t.
    """
    if t < 1 or n % t:
        raise ValueError(f"t = {t} does not divide n = {n}")
    F = fourier(n)
    rows = tuple(j * (n // t) for j in range(t))
    vec = CycloVector(
        sum((F.cyclo(r, k) for r in rows), CycloNumber.zero(n)) for k in range(n)
    )
    support = vec.support()
    return DivisorWitness(vec, support, rows, len(support) == ceil(n / t))


# -- rank-one areas -----------------------------------------------------------------------


def max_rank_one_area(H: UnitMatrix, host: str | None = None) -> SearchReport:
    """Largest |A|*|B| over rank-one submatrices, with every maximiser."""
    limit = size_limit(12)
    if H.n > limit:
        raise SizeLimitError(f"max-area search supports n <= {limit}, got {H.n}")
    t0 = time.perf_counter()
    best = 0
    best_blocks: list[RectBlock] = []
    nodes = 0

    def bound(B, groups, remaining):
        return max(len(g) for g in groups) * (len(B) + remaining) >= best

    c = RootExp.minus_one(2 * H.m // gcd(2, H.m))
    for B, groups in proportional_groups(H, bound=bound):
        nodes += 1
        for g in groups:
            area = len(g) * len(B)
            if area > best:
                best, best_blocks = area, []
            if area == best:
                best_blocks.append(RectBlock(g, B, c))
    best_blocks.sort()
    rep = SearchReport(
        "max-area",
        _host_name(H, host),
        {},
        witnesses=best_blocks,
        value=best,
        cert=f"max-area {best}",
        statement=f"largest rank-one submatrix has area {best} (order {H.n})",
        nodes=nodes,
    )
    rep.elapsed = time.perf_counter() - t0
    return rep


def rank_one_report(H: UnitMatrix, a: int, b: int, host: str | None = None) -> SearchReport:
    t0 = time.perf_counter()
    blocks = enumerate_rank_one_blocks(H, a, b)
    return SearchReport(
        "rank-one",
        _host_name(H, host),
        {"a": a, "b": b},
        witnesses=blocks,
        value=len(blocks),
        cert=f"rank-one-blocks {len(blocks)}",
        statement=f"{len(blocks)} rank-one {a}x{b} blocks, each a rectangular trade",
        elapsed=time.perf_counter() - t0,
    )


# -- Petrescu scalar sweep ------------------------------------------------------------------


def petrescu_paired_trade(c: RootExp) -> Trade:
    """Shaded Petrescu cells with the first block scaled by c, the second by conj(c)."""
    H = petrescu7()
    (r1, c1), (r2, c2) = PETRESCU7_BLOCKS
    values = {(r, k): H.entry(r, k) * c for r in r1 for k in c1}
    values.update({(r, k): H.entry(r, k) * c.conj() for r in r2 for k in c2})
    return Trade(H.n, PETRESCU7_SHADED, values=values)


def petrescu_scalar_sweep(c_orders: Sequence[int]) -> SearchReport:
    """Switch the shaded Petrescu cells by every primitive q-th root of unity.

    Each c is tried twice: as one common scalar on all eight cells, and as the
    conjugate pair (c on the first block, conj(c) on the second).
    """
    H = petrescu7()
    t0 = time.perf_counter()
    results = []
    for q in c_orders:
        if not 2 <= q <= 24:
            raise TradeError(f"root order q must lie in [2, 24], got {q}")
        for j in range(1, q):
            if gcd(j, q) != 1:
                continue
            c = RootExp(j, q)
            uniform = is_trade(H, Trade(H.n, PETRESCU7_SHADED, scalar=c))
            paired = is_trade(H, petrescu_paired_trade(c))
            results.append((q, j, uniform, paired))
    n_uni = sum(u for _, _, u, _ in results)
    n_pair = sum(p for _, _, _, p in results)
    total = len(results)

    def verdict(ok: bool) -> str:
        return "hadamard" if ok else "FAIL"

    rep = SearchReport(
        "petrescu-sweep",
        "petrescu7",
        {"orders": ",".join(map(str, c_orders))},
        witnesses=[f"c=zeta_{q}^{j}: uniform {verdict(u)}, paired {verdict(p)}" for q, j, u, p in results],
        value=n_uni,
        cert=f"sweep uniform {n_uni}/{total} paired {n_pair}/{total}",
        statement=(
            f"common scalar c switches to a Hadamard matrix for {n_uni} of {total} tested c; "
            f"the conjugate pair does for {n_pair} of {total}"
        ),
        nodes=total,
        notes=["only roots of unity are tested; the claim for arbitrary unimodular c is not machine-checked"],
    )
    rep.elapsed = time.perf_counter() - t0
    return rep
