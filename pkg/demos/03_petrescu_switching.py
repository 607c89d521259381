"""Switching a trade in more than one way
=========================================

The 7x7 Petrescu matrix over 6th roots of unity has eight shaded cells
forming two 2x2 blocks. Scaling the first block by c and the second by
conj(c) stays Hadamard for every unimodular c. One common scalar on both
blocks does not: only c = -1 survives.
"""

# %%
import numpy as np

import hadtrades as ht
from hadtrades.constructions import PETRESCU7_SHADED

P = ht.petrescu7()
print(P.exps)

# %% Exact sweep over roots of unity.
rep = ht.petrescu_scalar_sweep([2, 3, 4, 6, 12])
print(rep.to_text())

# %% A float scan of the continuous family: block 1 by a, block 2 by b.
G0 = P.to_complex()
t = np.linspace(0, 2 * np.pi, 73)
grid = np.zeros((len(t), len(t)), dtype=bool)
for i, x in enumerate(t):
    for j, y in enumerate(t):
        G = G0.copy()
        G[1:3, 1:3] *= np.exp(1j * x)
        G[3:5, 3:5] *= np.exp(1j * y)
        grid[i, j] = np.abs(G @ G.conj().T - 7 * np.eye(7)).max() < 1e-9
hits = np.argwhere(grid)
print("Hadamard points:", len(hits), "all on a + b = 0 mod 2 pi:",
      all((t[i] + t[j]) % (2 * np.pi) < 1e-9 or abs((t[i] + t[j]) % (2 * np.pi) - 2 * np.pi) < 1e-9 for i, j in hits))

# %% The necessary row test is blind to the problem here: rows 6 and 7 are
# orthogonal to the met rows on their met columns.
T = ht.Trade(7, PETRESCU7_SHADED, scalar=ht.RootExp(1, 3))
print("lemma 1 necessary test:", ht.lemma1_necessary(P, T), "but is_trade:", ht.is_trade(P, T))
