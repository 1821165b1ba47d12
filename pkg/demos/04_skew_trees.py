# %% [markdown]
# # Skew-symmetric matrices on trees
#
# Odd principal permanents of a skew-symmetric matrix vanish. On a tree the
# only surviving terms come from matchings, so r_k = 1 exactly for even
# k <= 2 * (maximum matching size).

# %%
from permrank import Family, PprSequence, construct_skew_tree, max_matching_tree, ppr_sequence
from permrank.exactmat import IntMatrix
from permrank.oracles import random_tree

T = random_tree(9, seed=4)
rows = [[0] * 9 for _ in range(9)]
for u, v in T.edges():
    rows[u - 1][v - 1], rows[v - 1][u - 1] = 3, -3
A = IntMatrix.from_rows(rows)
print("edges:", T.edges())
print("mu =", max_matching_tree(T), " ppr =", ppr_sequence(A))

# %%
W = construct_skew_tree(PprSequence.parse("1010100"))
print(W)
print("roundtrip:", ppr_sequence(W))
