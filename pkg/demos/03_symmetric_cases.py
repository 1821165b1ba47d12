# %% [markdown]
# # Symmetric nonnegative matrices
#
# Here an edge is a 2-cycle, so the even ones form a prefix 0..2m and the odd
# ones a window 2l+1..2k+1 with l <= k <= m <= l + k + 1. Each shape has its
# own witness graph.

# %%
from permrank import Family, PprSequence, classify, construct_symmetric, ppr_sequence, to_pattern
from permrank.oracles import FamilyUniverse, exhaustive_sequences
from permrank.realizer import enumerate_realizable

for text in ("0111111", "110000", "101100", "111110", "1111110", "101010", "101110101", "10111011"):
    seq = PprSequence.parse(text)
    verdict = classify(seq, Family.SYMMETRIC)
    line = f"{text:>10}  {verdict}"
    if verdict.realizable:
        G = construct_symmetric(seq)
        line += f"  loops={G.loops()} edges={G.edges()}"
        assert ppr_sequence(to_pattern(G)) == seq
    print(line)

# %% [markdown]
# The characterization against brute force over every symmetric (0,1)-matrix.

# %%
for n in range(1, 6):
    truth = exhaustive_sequences(FamilyUniverse(n, Family.SYMMETRIC))
    print(n, sorted(map(str, truth)) == sorted(map(str, enumerate_realizable(n, Family.SYMMETRIC))))
