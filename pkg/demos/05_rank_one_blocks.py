"""Rank-one blocks and the area bound
=====================================

A block of area n is a rectangular trade exactly when it has rank one, and
no rank-one block is larger than n.
"""

# %%
import hadtrades as ht

for name, H in [("H8", ht.sylvester(3)), ("paley8", ht.example_paley8()), ("F6", ht.fourier(6))]:
    rep = ht.max_rank_one_area(H, host=name)
    print(f"{name}: max area {rep.value}, maximisers {len(rep.witnesses)}")

# %% Counting a x b rank-one blocks for each factorisation of n.
H = ht.example_paley8()
for a in (1, 2, 4, 8):
    blocks = ht.enumerate_rank_one_blocks(H, a, 8 // a)
    print(f"{a}x{8 // a}: {len(blocks)}")

# %% Prime-order Fourier matrices only have full rows and columns.
print([R.one_based() for R in ht.max_rank_one_area(ht.fourier(5)).witnesses])

# %% Any rectangular trade switches with any multiplier c != 1.
F6 = ht.fourier(6)
R = ht.enumerate_rank_one_blocks(F6, 2, 3)[0]
print(R.one_based())
for q in (2, 3, 5, 7):
    T = ht.Trade(6, R.cells(), scalar=ht.RootExp(1, q))
    print(q, ht.is_complex_hadamard(ht.apply_switch(F6, T)))
