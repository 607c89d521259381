"""How sparse can a combination of b columns be?
================================================

A nonzero combination of b columns of an order-n Hadamard matrix has at
least ceil(n/b) nonzero entries. Fourier matrices of composite order meet
this; prime orders sit well above it.
"""

# %%
from math import ceil

import hadtrades as ht

for n in (4, 6, 8, 12):
    for t in (d for d in range(2, n) if n % d == 0):
        w = ht.fourier_divisor_witness(n, t)
        print(f"n={n} t={t}: support {sorted(w.support)} tight={w.tight}")

# %% Exact minimum supports, with the witness coefficients.
for n, cols in [(4, (0, 2)), (6, (0, 3)), (5, (0, 1)), (7, (0, 1)), (7, (0, 1, 2))]:
    rep = ht.min_support_column_span(ht.fourier(n), cols)
    print(f"F{n} cols {cols}: min support {rep.value}, floor {ceil(n / len(cols))}")

# %% The witness line for one of them.
print(ht.min_support_column_span(ht.fourier(7), (0, 1)).to_text(zero_index=True))
