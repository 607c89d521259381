"""Building and checking Hadamard matrices
=========================================

Every matrix in hadtrades is a grid of exponents k standing for zeta_m^k,
so verification never touches floating point.
"""

# %%
import numpy as np

import hadtrades as ht

H8 = ht.sylvester(3)
print(ht.format_real(H8))
print("kind:", H8.kind)

# %% The 5x5 Fourier matrix as an exponent grid, and its complex values.
F5 = ht.fourier(5)
print(F5.exps)
G = F5.to_complex()
print(np.round(G @ G.conj().T, 10).real + 0.0)

# %% Paley I matrices are skew: H + H^T = 2I.
P = ht.paley_I(7)
S = P.sign_array()
print(S + S.T)

# %% Kronecker products mix moduli: F2 (x) F3 lives over 6th roots.
K = ht.kronecker(ht.fourier(2), ht.fourier(3))
print(K.n, K.m, K.kind)

# %% Dephasing puts ones in the first row and column.
D = ht.dephase(ht.scale_row(F5, 3, ht.RootExp(2, 5)))
print(D == F5)

# %% A weighing matrix W(6, 4): zeros are tracked separately from exponents.
W = ht.weave_w64()
print(ht.format_real(W))
print(W.sign_array() @ W.sign_array().T)
