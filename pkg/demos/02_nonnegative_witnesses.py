# %% [markdown]
# # Nonnegative matrices
#
# Any sequence starting with 1 is realizable (besides "11" at order 1), and
# so is 011...1. The witness is a directed path with a back arc to vertex 1
# from every k with r_k = 1.

# %%
from permrank import Family, PprSequence, classify, construct_nonnegative, ppr_sequence, to_dot, to_pattern
from permrank.realizer import enumerate_realizable

seq = PprSequence.parse("10010100100")
G = construct_nonnegative(seq)
print(to_dot(G))
print("roundtrip:", ppr_sequence(to_pattern(G)))

# %%
for text in ("0111", "0110", "11", "1000"):
    print(text, classify(PprSequence.parse(text), Family.NONNEGATIVE))

# %%
for n in range(1, 7):
    print(n, len(enumerate_realizable(n, Family.NONNEGATIVE)))
