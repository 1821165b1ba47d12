# %% [markdown]
# # Permanents and ppr-sequences
#
# The permanent is the determinant without signs. A ppr-sequence records, for
# each size k, whether some k x k principal submatrix has a nonzero permanent;
# the leading bit r_0 flags a zero on the diagonal.

# %%
from permrank import IntMatrix, permanent_naive, permanent_ryser, ppr_sequence, perrank
from permrank.exactmat import pattern_of

A = IntMatrix.from_rows([[1, 2], [3, 4]])
print("per([[1,2],[3,4]]) =", permanent_naive(A), permanent_ryser(A))

# %% [markdown]
# Exact integers matter: signed entries can cancel, which a nonnegative
# pattern never does.

# %%
B = IntMatrix.from_rows([[1, 1], [-1, 1]])
print("ppr(B)         =", ppr_sequence(B))
print("ppr(pattern B) =", ppr_sequence(pattern_of(B)))

# %%
triangle = IntMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
print("triangle:", ppr_sequence(triangle), "perrank", perrank(triangle))
print("identity:", ppr_sequence(IntMatrix.identity(4)))
