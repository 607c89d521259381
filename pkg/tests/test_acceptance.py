"""End-to-end acceptance checks, one per criterion.

Each test prints a single ``[criterion N] PASS|FAIL`` line. Two criteria
state values that exact computation contradicts; those tests still assert
every verifiable part, then print FAIL and are reported as xfail.
"""

import time
from collections import Counter
from itertools import combinations
from math import ceil, gcd

import numpy as np
import pytest

from hadtrades.constructions import (
    PALEY8_BLOCK_2x4,
    PALEY8_BLOCK_4x2,
    PALEY8_SHADED,
    PETRESCU7_SHADED,
    W64_SHADED_BLOCK,
    example_paley8,
    fourier,
    paley_I,
    petrescu7,
    sylvester,
    weave_w64,
)
from hadtrades.cyclotomic import RootExp, lcm
from hadtrades.matrix import HADAMARD, WEIGHING, is_complex_hadamard, is_weighing
from hadtrades.search import (
    enumerate_nearby_hadamard,
    fourier_divisor_witness,
    max_rank_one_area,
    min_support_column_span,
    min_trade_search_real,
    petrescu_paired_trade,
)
from hadtrades.trades import (
    RectBlock,
    Trade,
    apply_switch,
    diagonal_trade,
    enumerate_rank_one_blocks,
    is_rectangular_trade,
    is_skew,
    is_trade,
    symmetric_difference,
    trade_profile,
)

from oracles import int_is_hadamard


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")

    return emit


def test_criterion_01_constructors(report):
    t0 = time.perf_counter()
    built = [sylvester(k) for k in range(6)]
    built += [fourier(n) for n in range(1, 13)]
    built += [paley_I(q) for q in (3, 7, 11)]
    built += [example_paley8(), petrescu7()]
    ok = all(M.kind == HADAMARD for M in built)
    W = weave_w64()
    ok = ok and W.kind == WEIGHING and is_weighing(W, 4)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5
    report(1, ok, f"{len(built) + 1} constructors verified in {elapsed:.2f}s (limit 5s)")
    assert ok


def test_criterion_02_paley8_example(report):
    P = example_paley8()
    T = Trade.negation(8, PALEY8_SHADED)
    prof = trade_profile(T)
    two_by_four = RectBlock(*PALEY8_BLOCK_2x4).trade(8)
    four_by_two = RectBlock(*PALEY8_BLOCK_4x2).trade(8)
    sd = symmetric_difference(two_by_four, four_by_two)
    ok = is_trade(P, T) and prof.d == 2 and prof.e == 2 and sd == PALEY8_SHADED
    report(2, ok, f"trade verified, d={prof.d} e={prof.e}, symdiff of the 2x4 and 4x2 blocks equals the shaded set: {sd == PALEY8_SHADED}")
    assert ok


def test_criterion_03_petrescu_all_c(report):
    P = petrescu7()
    t0 = time.perf_counter()
    uniform, paired = [], []
    for q in (2, 3, 4, 6, 12):
        for j in range(1, q):
            if gcd(j, q) != 1:
                continue
            c = RootExp(j, q)
            Q = apply_switch(P, Trade(7, PETRESCU7_SHADED, scalar=c))
            assert Q.m == lcm(6, q)
            uniform.append(is_complex_hadamard(Q))
            paired.append(is_trade(P, petrescu_paired_trade(c)))
    elapsed = time.perf_counter() - t0
    assert elapsed < 2
    assert all(paired)
    ok = all(uniform)
    report(
        3,
        ok,
        f"common scalar c verifies for {sum(uniform)}/{len(uniform)} roots (only c = -1); "
        f"conjugate-paired switch verifies for {sum(paired)}/{len(paired)}; {elapsed:.2f}s",
    )
    if not ok:
        pytest.xfail("switching both shaded blocks by one common scalar c only works for c = -1")


def test_criterion_04_minimum_trade_size(report):
    t0 = time.perf_counter()
    certs = {
        "H4": min_trade_search_real(sylvester(2), 3).cert,
        "paley8": min_trade_search_real(example_paley8(), 7).cert,
        "H8": min_trade_search_real(sylvester(3), 7).cert,
    }
    ok = certs == {"H4": "none-below 4", "paley8": "none-below 8", "H8": "none-below 8"}
    counts = {}
    for name, H in [("H4", sylvester(2)), ("paley8", example_paley8()), ("H8", sylvester(3))]:
        rep = min_trade_search_real(H, H.n)
        counts[name] = len(rep.witnesses)
        for T in rep.witnesses:
            p = trade_profile(T)
            ok = ok and T.size == H.n and p.d is not None and p.e is not None
            ok = ok and H.n % p.d == 0 and H.n % p.e == 0 and p.d_even_or_one and p.e_even_or_one
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 600
    report(4, ok, f"certificates {certs}; size-n witnesses {counts} all have the minimal structure; {elapsed:.1f}s")
    assert ok


def test_criterion_05_rank_one_iff_rectangular(report):
    hosts = {"H4": sylvester(2), "F4": fourier(4), "H8": sylvester(3), "paley8": example_paley8(), "F8": fourier(8)}
    checked = 0
    ok = True
    for H in hosts.values():
        n = H.n
        for a in range(1, n + 1):
            if n % a:
                continue
            b = n // a
            rank_one = {(R.rows, R.cols) for R in enumerate_rank_one_blocks(H, a, b)}
            rect = set()
            for A in combinations(range(n), a):
                for B in combinations(range(n), b):
                    checked += 1
                    if is_rectangular_trade(H, RectBlock(A, B)):
                        rect.add((A, B))
            ok = ok and rank_one == rect
    report(5, ok, f"{checked} candidate blocks over {', '.join(hosts)}: rank one <=> rectangular trade")
    assert ok


def test_criterion_06_support_floor_and_tightness(report):
    floor_ok = True
    values = {}
    for n in (4, 5, 6, 7):
        F = fourier(n)
        for b in (2, 3):
            for cols in combinations(range(n), b):
                v = min_support_column_span(F, cols).value
                floor_ok = floor_ok and v >= ceil(n / b)
                values.setdefault((n, b), set()).add(v)
    tight_ok = all(
        len(fourier_divisor_witness(n, t).support) == n // t for n in (4, 5, 6, 7) for t in range(1, n + 1) if n % t == 0
    )
    assert floor_ok and tight_ok
    prime = {(n, b): values[(n, b)] for n in (5, 7) for b in (2, 3)}
    stated = all(prime[(n, b)] == {n - b} for n, b in prime)
    report(
        6,
        stated,
        f"floor ceil(n/b) holds and divisor witnesses are tight; prime supports {prime} "
        f"(stated n - b, computed n - b + 1)",
    )
    if not stated:
        assert all(prime[(n, b)] == {n - b + 1} for n, b in prime)
        pytest.xfail("prime-order Fourier supports are n - b + 1, not n - b")


def test_criterion_07_area_bound(report):
    hosts = {"H8": sylvester(3), "paley8": example_paley8()}
    hosts.update({f"F{n}": fourier(n) for n in range(1, 9)})
    areas = {name: max_rank_one_area(H).value for name, H in hosts.items()}
    ok = all(areas[name] == H.n for name, H in hosts.items())
    report(7, ok, f"maximum rank-one areas {areas}")
    assert ok


def test_criterion_08_skew_diagonal(report):
    ok = True
    for q in (3, 7, 11):
        H = paley_I(q)
        S = H.sign_array()
        ok = ok and is_skew(H) and np.array_equal(S + S.T, 2 * np.eye(q + 1, dtype=int))
        ok = ok and is_complex_hadamard(apply_switch(H, diagonal_trade(H)))
        ok = ok and int_is_hadamard(S - 2 * np.eye(q + 1, dtype=int))
    report(8, ok, "paley_I(q), q in {3, 7, 11}: H + H^T = 2I and H - 2I is Hadamard")
    assert ok


def test_criterion_09_weighing_trades(report):
    W = weave_w64()
    rows, cols = W64_SHADED_BLOCK
    block = Trade.negation(6, [(r, c) for r in rows for c in cols])
    ok = block.size == W.weight == 4 and is_trade(W, block)
    row_sizes = []
    for r in range(6):
        T = Trade.negation(6, [(r, c) for c in range(6) if not W.is_zero(r, c)])
        row_sizes.append(T.size)
        ok = ok and T.size == 4 and is_trade(W, T)
    report(9, ok, f"shaded 2x2 block (size {block.size}) and every single-row negation (sizes {row_sizes}) are weighing trades")
    assert ok


def test_criterion_10_symdiff_bound(report):
    rep = min_trade_search_real(sylvester(2), 4)
    trades = rep.witnesses
    sizes = Counter(len(symmetric_difference(a, b)) for a, b in combinations(trades, 2))
    ok = len(trades) == 52 and min(sizes) >= 4
    report(10, ok, f"{len(trades)} trades, {sum(sizes.values())} pairs, smallest symmetric difference {min(sizes)}")
    assert ok


def test_criterion_11_dfs_vs_brute_force(report):
    H = sylvester(2)
    S = H.sign_array()
    cells = [(i, j) for i in range(4) for j in range(4)]
    patterns = 0
    brute = set()
    for d in range(0, 5):
        for flips in combinations(cells, d):
            patterns += 1
            T = S.copy()
            for i, j in flips:
                T[i, j] = -T[i, j]
            if d and int_is_hadamard(T):
                brute.add(frozenset(flips))
    found, _ = enumerate_nearby_hadamard(H, 4, prune=True)
    rows = H.bit_rows()
    dfs = {
        frozenset((i, j) for i in range(4) for j in range(4) if ((rows[i] ^ f[i]) >> j) & 1) for f in found
    }
    ok = patterns == 2517 and dfs == brute
    report(11, ok, f"{patterns} patterns; pruned DFS finds {len(dfs)} matrices, brute force {len(brute)}")
    assert ok
