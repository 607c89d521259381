"""No trade is smaller than the order
=====================================

A depth-first search completes a new +-1 matrix row by row, staying within
a Hamming budget of the host. Rows are Python ints, so orthogonality is a
popcount.
"""

# %%
from collections import Counter

import hadtrades as ht

H4 = ht.sylvester(2)
print(ht.min_trade_search_real(H4, 3).to_text())

# %% At budget 4 every trade has size exactly 4.
rep = ht.min_trade_search_real(H4, 4)
print(rep.cert_line, "witnesses:", len(rep.witnesses))
print(Counter((p.d, p.e) for p in map(ht.trade_profile, rep.witnesses)))

# %% Order 8: nothing below 8, and 696 trades of size 8.
P = ht.example_paley8()
print(ht.min_trade_search_real(P, 7).cert_line)
rep8 = ht.min_trade_search_real(P, 8, host="paley8")
prof = Counter((p.d, p.e) for p in map(ht.trade_profile, rep8.witnesses))
print(rep8.cert_line, "nodes:", rep8.nodes)
for (d, e), k in sorted(prof.items()):
    print(f"  d={d} e={e}: {k}")

# %% Any two distinct trades differ in at least n cells.
from itertools import combinations

print(min(len(ht.symmetric_difference(a, b)) for a, b in combinations(rep.witnesses, 2)))
