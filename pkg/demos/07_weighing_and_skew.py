"""Trades beyond Hadamard matrices
=================================

Skew-Hadamard matrices have a diagonal trade, and weighing matrices have
trades as small as their weight.
"""

# %%
import hadtrades as ht
from hadtrades.constructions import W64_SHADED_BLOCK

for q in (3, 7, 11, 19):
    H = ht.paley_I(q)
    T = ht.diagonal_trade(H)
    print(f"paley_I({q}): diagonal trade of size {T.size} verifies: {ht.is_trade(H, T)}")

# %% Sylvester matrices are symmetric, so there is no diagonal trade.
try:
    ht.diagonal_trade(ht.sylvester(2))
except ht.NotSkewError as exc:
    print("H4:", exc)

# %% W(6, 4): a 2x2 block and each row's four nonzero entries.
W = ht.weave_w64()
rows, cols = W64_SHADED_BLOCK
block = ht.Trade.negation(6, [(r, c) for r in rows for c in cols])
print(ht.format_real(ht.apply_switch(W, block)))
print("block trade:", ht.is_trade(W, block))
for r in range(6):
    T = ht.Trade.negation(6, [(r, c) for c in range(6) if not W.is_zero(r, c)])
    print(f"row {r + 1}: size {T.size}, trade {ht.is_trade(W, T)}")
