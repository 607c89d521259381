import json
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadtrades.constructions import (
    PALEY8_BLOCK_2x4,
    PALEY8_BLOCK_4x2,
    PALEY8_SHADED,
    PETRESCU7_SHADED,
    example_paley8,
    fourier,
    paley_I,
    petrescu7,
    sylvester,
)
from hadtrades.cyclotomic import RootExp
from hadtrades.matrix import InvalidKindError, is_complex_hadamard
from hadtrades.trades import (
    NotSkewError,
    RectBlock,
    Trade,
    TradeError,
    ViolatesTradeError,
    apply_switch,
    diagonal_trade,
    enumerate_rank_one_blocks,
    is_rank_one,
    is_rectangular_trade,
    is_trade,
    lemma1_necessary,
    lemma1_violations,
    row_pair_trade,
    symdiff_trade,
    symmetric_difference,
    trade_from_json,
    trade_profile,
    trade_space_gf2,
    trade_to_json,
)

from oracles import complex_grid, float_is_hadamard, gf2_rank_numpy, rank_one_blocks_float

NEG = RootExp(1, 2)


def block(pair):
    rows, cols = pair
    return RectBlock(rows, cols)


def paley8_trade():
    return Trade.negation(8, PALEY8_SHADED)


def all_blocks(n):
    for a in range(1, n + 1):
        for A in combinations(range(n), a):
            for b in range(1, n + 1):
                for B in combinations(range(n), b):
                    yield A, B


# -- switching ---------------------------------------------------------------------


def test_switch_examples():
    H4 = sylvester(2)
    row = Trade.negation(4, [(0, c) for c in range(4)])
    assert is_complex_hadamard(apply_switch(H4, row))
    assert is_complex_hadamard(apply_switch(example_paley8(), paley8_trade()))
    assert not is_complex_hadamard(apply_switch(H4, Trade.negation(4, [(2, 1)])))


def test_switch_errors():
    H4 = sylvester(2)
    with pytest.raises(TradeError):
        apply_switch(H4, Trade(4, {(0, 0)}))
    with pytest.raises(ViolatesTradeError):
        apply_switch(H4, Trade(4, {(0, 0)}, values={(0, 0): RootExp(0, 2)}))
    with pytest.raises(TradeError):
        apply_switch(H4, Trade.negation(8, {(0, 0)}))


def test_trade_validation():
    with pytest.raises(TradeError):
        Trade(4, set())
    with pytest.raises(TradeError):
        Trade(4, {(4, 0)})
    with pytest.raises(TradeError):
        Trade(4, {(0, 0)}, scalar=RootExp(0, 3))
    with pytest.raises(TradeError):
        Trade(4, {(0, 0), (1, 1)}, values={(0, 0): NEG})


def test_is_trade_examples():
    for H in [sylvester(3), example_paley8(), paley_I(11)]:
        full = Trade.negation(H.n, [(r, c) for r in range(H.n) for c in range(H.n)])
        assert is_trade(H, full)
    assert is_trade(example_paley8(), paley8_trade())
    for cell in PALEY8_SHADED:
        partial = Trade.negation(8, PALEY8_SHADED - {cell})
        assert not is_trade(example_paley8(), partial)


def test_real_host_needs_real_switch():
    H4 = sylvester(2)
    T = Trade(4, [(0, c) for c in range(4)], scalar=RootExp(1, 4))
    # multiplying a whole row by i is Hadamard, but not real
    assert is_complex_hadamard(apply_switch(H4, T))
    assert not is_trade(H4, T)


def test_switch_involution():
    P = example_paley8()
    once = apply_switch(P, paley8_trade())
    assert apply_switch(once, paley8_trade()) == P


# -- necessary row test ------------------------------------------------------------


def test_lemma1_examples():
    assert lemma1_necessary(example_paley8(), paley8_trade())
    assert not lemma1_necessary(sylvester(2), Trade.negation(4, [(1, 1)]))
    with pytest.raises(TradeError):
        lemma1_necessary(sylvester(2), Trade(4, {(0, 0)}))


def test_lemma1_petrescu_untouched_rows():
    P = petrescu7()
    T = Trade(7, PETRESCU7_SHADED, scalar=RootExp(1, 3))
    # exact 2-term sums: rows 6 and 7 against each met row on its met columns
    for i in T.rows():
        cols = T.cols_in_row(i)
        for j in (5, 6):
            s = sum(np.exp(2j * np.pi * (P.exps[i, c] - P.exps[j, c]) / 6) for c in cols)
            assert abs(s) < 1e-12
    assert {j for _, j in lemma1_violations(P, T)} <= {0}
    assert lemma1_necessary(P, T)


@pytest.mark.parametrize(
    "H",
    [sylvester(2), sylvester(3), example_paley8(), fourier(4), fourier(6)],
    ids=["H4", "H8", "paley8", "F4", "F6"],
)
def test_lemma1_consistency_on_blocks(H):
    # every verified scalar trade among the rank-one blocks passes the necessary test
    for a in range(1, H.n + 1):
        if H.n % a:
            continue
        for R in enumerate_rank_one_blocks(H, a, H.n // a):
            T = R.trade(H.n)
            assert is_trade(H, T)
            assert lemma1_necessary(H, T)


# -- rectangular trades ------------------------------------------------------------


def test_rectangular_examples():
    P = example_paley8()
    for i in range(8):
        assert is_rectangular_trade(P, RectBlock((i,), tuple(range(8))))
    assert is_rectangular_trade(P, block(PALEY8_BLOCK_2x4))
    assert is_rectangular_trade(P, block(PALEY8_BLOCK_4x2))
    one_based = (([3, 4], [1, 2, 4, 5]), ([1, 3, 4, 6], [1, 2]))
    assert block(PALEY8_BLOCK_2x4).one_based() == one_based[0]
    assert block(PALEY8_BLOCK_4x2).one_based() == one_based[1]


def test_row_pair_trade():
    H4 = sylvester(2)
    R = row_pair_trade(H4, 0, 1)
    assert R.rows == (0, 1) and R.cols == (1, 3)
    assert is_rectangular_trade(H4, R)
    for H in [sylvester(3), example_paley8(), paley_I(11)]:
        for i, j in combinations(range(H.n), 2):
            R = row_pair_trade(H, i, j)
            assert len(R.cols) == H.n // 2 and is_rectangular_trade(H, R)
            T = R.trade(H.n)
            assert apply_switch(apply_switch(H, T), T) == H
    with pytest.raises(TradeError):
        row_pair_trade(H4, 2, 2)
    with pytest.raises(InvalidKindError):
        row_pair_trade(fourier(4), 0, 1)


@pytest.mark.parametrize("name", ["H4", "F4", "F3"])
def test_small_rectangular_trades_have_area_n_and_rank_one(name):
    H = {"H4": sylvester(2), "F4": fourier(4), "F3": fourier(3)}[name]
    for A, B in all_blocks(H.n):
        R = RectBlock(A, B)
        if is_rectangular_trade(H, R):
            assert R.area >= H.n
            if R.area == H.n:
                assert is_rank_one(H, A, B)


def test_is_rank_one_examples():
    P = example_paley8()
    assert is_rank_one(P, [0], range(8))
    assert is_rank_one(P, [0, 2, 3, 5], [0, 1])
    assert not is_rank_one(sylvester(1), [0, 1], [0, 1])
    with pytest.raises(TradeError):
        is_rank_one(P, [], [0])


def test_enumerate_examples():
    F5 = fourier(5)
    shapes = lambda bl: [(R.rows, R.cols) for R in bl]
    assert shapes(enumerate_rank_one_blocks(F5, 1, 5)) == [((i,), (0, 1, 2, 3, 4)) for i in range(5)]
    assert shapes(enumerate_rank_one_blocks(F5, 5, 1)) == [((0, 1, 2, 3, 4), (j,)) for j in range(5)]
    with pytest.raises(TradeError):
        enumerate_rank_one_blocks(F5, 2, 2)
    P = example_paley8()
    blocks = enumerate_rank_one_blocks(P, 2, 4)
    assert block(PALEY8_BLOCK_2x4) in blocks
    assert blocks == sorted(blocks)
    assert len(blocks) == 56


@pytest.mark.parametrize(
    "H",
    [sylvester(2), sylvester(3), example_paley8(), fourier(4), fourier(6), petrescu7()],
    ids=["H4", "H8", "paley8", "F4", "F6", "P7"],
)
def test_enumeration_matches_float_oracle(H):
    G = complex_grid(H.exps, H.m)
    for a in range(1, H.n + 1):
        if H.n % a:
            continue
        got = {(R.rows, R.cols) for R in enumerate_rank_one_blocks(H, a, H.n // a)}
        assert got == set(rank_one_blocks_float(G, a, H.n // a))


@pytest.mark.parametrize("H", [sylvester(2), sylvester(3), example_paley8()], ids=["H4", "H8", "paley8"])
def test_rank_one_iff_rectangular_real(H):
    n = H.n
    for a in range(1, n + 1):
        if n % a:
            continue
        b = n // a
        rank_one = {(R.rows, R.cols) for R in enumerate_rank_one_blocks(H, a, b)}
        rect = {
            (A, B)
            for A in combinations(range(n), a)
            for B in combinations(range(n), b)
            if is_rectangular_trade(H, RectBlock(A, B))
        }
        assert rank_one == rect


def test_rank_one_iff_rectangular_complex():
    # the same equivalence on F4 and F6, checked with the exact rank test
    for H in [fourier(4), fourier(6)]:
        n = H.n
        for a in range(1, n + 1):
            if n % a:
                continue
            for A in combinations(range(n), a):
                for B in combinations(range(n), n // a):
                    assert is_rank_one(H, A, B) == is_rectangular_trade(H, RectBlock(A, B))


@pytest.mark.parametrize("host", ["H4", "paley8", "F4", "F6"])
def test_rectangular_c_independence(host):
    H = {"H4": sylvester(2), "paley8": example_paley8(), "F4": fourier(4), "F6": fourier(6)}[host]
    blocks = []
    for a in range(1, H.n + 1):
        if H.n % a == 0:
            blocks.extend(enumerate_rank_one_blocks(H, a, H.n // a)[:6])
    roots = [RootExp(k, q) for q in range(2, 13) for k in range(1, q)]
    for R in blocks:
        for c in roots:
            Hp = apply_switch(H, Trade(H.n, R.cells(), scalar=c))
            assert is_complex_hadamard(Hp)


# -- symmetric difference and profiles -----------------------------------------------


def test_symdiff_examples():
    T1 = block(PALEY8_BLOCK_2x4).trade(8)
    T2 = block(PALEY8_BLOCK_4x2).trade(8)
    assert symmetric_difference(T1, T2) == PALEY8_SHADED
    assert symdiff_trade(T1, T2) == paley8_trade()
    assert symmetric_difference(T1, T1) == frozenset()
    with pytest.raises(TradeError):
        symdiff_trade(T1, T1)
    H4 = sylvester(2)
    r0 = Trade.negation(4, [(0, c) for c in range(4)])
    r1 = Trade.negation(4, [(1, c) for c in range(4)])
    assert len(symmetric_difference(r0, r1)) == 8
    assert is_trade(H4, symdiff_trade(r0, r1))


def test_symdiff_law_on_blocks():
    P = example_paley8()
    trades = [R.trade(8) for R in enumerate_rank_one_blocks(P, 2, 4) + enumerate_rank_one_blocks(P, 4, 2)]
    trades.append(paley8_trade())
    for T1, T2 in combinations(trades, 2):
        assert is_trade(P, T1) and len(symmetric_difference(T1, T2)) >= 8


def test_profile_examples():
    p = trade_profile(paley8_trade())
    assert (p.d, p.e, p.size) == (2, 2, 8)
    assert p.minimal_structure_holds()
    full_row = trade_profile(Trade.negation(5, [(2, c) for c in range(5)]))
    assert (full_row.d, full_row.e) == (5, 1)
    diag = trade_profile(diagonal_trade(paley_I(7)))
    assert (diag.d, diag.e) == (1, 1)
    odd = trade_profile(Trade.negation(4, [(0, 0), (0, 1), (1, 0)]))
    assert odd.d is None and odd.e is None


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=1))))
def test_profile_counts(case):
    n, cells = case
    p = trade_profile(Trade.negation(n, cells))
    assert sum(p.row_counts) == sum(p.col_counts) == len(cells)
    nz = {c for c in p.row_counts if c}
    assert (p.d is not None) == (len(nz) == 1)
    if p.d is not None:
        assert p.rows_account_for_size


# -- diagonal trades ---------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 7, 11, 19])
def test_diagonal_trade(q):
    H = paley_I(q)
    T = diagonal_trade(H)
    assert T.size == q + 1 and is_trade(H, T)
    S = H.sign_array() - 2 * np.eye(q + 1, dtype=int)
    assert float_is_hadamard(S.astype(complex))


def test_diagonal_trade_not_skew():
    with pytest.raises(NotSkewError):
        diagonal_trade(sylvester(2))


# -- GF(2) span ----------------------------------------------------------------------


def indicator_rows(space):
    n = space.n
    rows = []
    for R in space.generators:
        v = np.zeros(n * n, dtype=np.uint8)
        for r, c in R.cells():
            v[r * n + c] = 1
        rows.append(v)
    return rows


@pytest.mark.parametrize("name, rank", [("H4", 10), ("H8", 36), ("paley8", 36)])
def test_gf2_rank_regression(name, rank):
    H = {"H4": sylvester(2), "H8": sylvester(3), "paley8": example_paley8()}[name]
    space = trade_space_gf2(H)
    assert space.rank == rank
    assert gf2_rank_numpy(indicator_rows(space)) == rank


def test_gf2_membership():
    space = trade_space_gf2(example_paley8())
    assert space.contains(PALEY8_SHADED)
    assert space.contains([])
    assert not space.contains([(0, 0)])
    for v in space.basis_vectors():
        assert space.reduce(v) == 0


def test_gf2_errors():
    with pytest.raises(InvalidKindError):
        trade_space_gf2(fourier(4))
    with pytest.raises(TradeError):
        trade_space_gf2(paley_I(19))


# -- certificates ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "T",
    [
        Trade.negation(8, PALEY8_SHADED),
        Trade(7, PETRESCU7_SHADED, scalar=RootExp(1, 3)),
        Trade(4, {(0, 0), (1, 2)}),
        Trade(3, {(0, 1), (2, 2)}, values={(0, 1): RootExp(1, 3), (2, 2): RootExp(2, 6)}),
    ],
    ids=["paley8", "petrescu", "bare", "values"],
)
def test_certificate_round_trip(T):
    for zi in (False, True):
        back = trade_from_json(trade_to_json(T, zero_index=zi), zero_index=zi)
        assert back.cells == T.cells
        if T.scalar is not None:
            assert back.scalar == T.scalar
        if T.values is not None:
            assert {k: v.reduced() for k, v in back.values.items()} == {k: v.reduced() for k, v in T.values.items()}


def test_certificate_is_one_based():
    doc = json.loads(trade_to_json(Trade.negation(8, PALEY8_SHADED)))
    assert doc["cells"][0] == [1, 1] and doc["assignment"] == {"scalar": 1} and doc["modulus"] == 2
    with pytest.raises(TradeError):
        trade_from_json('{"order": 2}')
    with pytest.raises(TradeError):
        trade_from_json('{"order": 2, "modulus": 2, "cells": [[1, 1], [1, 1]], "assignment": null}')
