"""A size-8 trade in an order-8 Paley matrix
============================================

Negating eight well-chosen entries gives another Hadamard matrix. The eight
cells are the symmetric difference of a 2x4 and a 4x2 rectangular trade.
"""

# %%
import hadtrades as ht
from hadtrades.constructions import PALEY8_BLOCK_2x4, PALEY8_BLOCK_4x2, PALEY8_SHADED

P = ht.example_paley8()
T = ht.Trade.negation(8, PALEY8_SHADED)
print(ht.format_real(P))
print("cells (1-based):", [(r + 1, c + 1) for r, c in T.sorted_cells()])

# %% Switch and re-verify.
Q = ht.apply_switch(P, T)
print(ht.format_real(Q))
print("still Hadamard:", ht.is_complex_hadamard(Q))

# %% Profile: two cells in every row and column the trade meets.
p = ht.trade_profile(T)
print("d =", p.d, "e =", p.e, "size =", p.size)

# %% Dropping any one cell breaks it.
print([ht.is_trade(P, ht.Trade.negation(8, PALEY8_SHADED - {c})) for c in sorted(PALEY8_SHADED)])

# %% The two rectangular pieces, each a rank-one block of area 8.
A = ht.RectBlock(*PALEY8_BLOCK_2x4)
B = ht.RectBlock(*PALEY8_BLOCK_4x2)
for R in (A, B):
    print(R.one_based(), "rank one:", ht.is_rank_one(P, R.rows, R.cols),
          "rectangular trade:", ht.is_rectangular_trade(P, R))
print("symmetric difference is the trade:", ht.symmetric_difference(A.trade(8), B.trade(8)) == PALEY8_SHADED)

# %% The GF(2) span of all size-8 rectangular trades contains it.
space = ht.trade_space_gf2(P)
print("generators:", len(space.generators), "rank:", space.rank, "contains:", space.contains(PALEY8_SHADED))
