import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permrank.exactmat import IndexSet, IntMatrix, pattern_of, permanent_naive, principal_submatrix
from permrank.graphcore import find_generalized_cycle, from_pattern
from permrank.oracles import FamilyUniverse, iter_universe, random_skew
from permrank.pprseq import (
    PprSequence,
    SequenceFormatError,
    perrank,
    ppr_sequence,
    principal_permanents,
    sequences_equal,
)
from permrank.realizer import Family, even_monotone, odd_bound_holds, odd_contiguous

TRIANGLE = IntMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def brute_ppr(A):
    """Reference ppr-sequence: permutation-sum permanent of every principal submatrix."""
    n = A.order
    bits = [int(0 in A.diagonal())]
    for k in range(1, n + 1):
        bits.append(int(any(
            permanent_naive(principal_submatrix(A, IndexSet(n, s)))
            for s in itertools.combinations(range(1, n + 1), k)
        )))
    return "".join(map(str, bits))


@st.composite
def int_matrices(draw, max_order=6, lo=-3, hi=3):
    n = draw(st.integers(1, max_order))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))
    return IntMatrix.from_rows(rows)


def test_triangle_oracle_value():
    # frozen from brute_ppr: r2 from an edge, r3 from the two directed 3-cycles
    assert brute_ppr(TRIANGLE) == "1011"


@pytest.mark.parametrize(
    "A, expected",
    [
        (IntMatrix.identity(3), "0111"),
        (IntMatrix.zeros(3), "1000"),
        (TRIANGLE, "1011"),
        (IntMatrix.from_rows([[0, 5], [-5, 0]]), "101"),
    ],
)
def test_ppr_examples(A, expected):
    assert str(ppr_sequence(A)) == expected


@pytest.mark.parametrize("A, expected", [(IntMatrix.identity(3), 3), (IntMatrix.zeros(3), 0), (TRIANGLE, 3)])
def test_perrank_examples(A, expected):
    assert perrank(A) == expected


def test_sequences_equal_examples():
    p = PprSequence.parse
    assert sequences_equal(p("0111"), p("0111"))
    assert not sequences_equal(p("0111"), p("0110"))
    assert not sequences_equal(p("10"), p("100"))


@pytest.mark.parametrize("text", ["", "012", "1 0", "abc"])
def test_sequence_parse_rejects(text):
    with pytest.raises(SequenceFormatError):
        PprSequence.parse(text)


def test_sequence_roundtrip():
    assert str(PprSequence.parse("1010100")) == "1010100"
    assert PprSequence.parse("1010100").length_n == 6


@given(int_matrices())
@settings(max_examples=200, deadline=None)
def test_ppr_matches_brute_force(A):
    assert str(ppr_sequence(A)) == brute_ppr(A)


def test_cancellation_is_respected():
    # per = 1*1 + 1*(-1) = 0 even though the pattern has a cover
    A = IntMatrix.from_rows([[1, 1], [-1, 1]])
    assert permanent_naive(A) == 0
    assert str(ppr_sequence(A)) == "010"
    assert str(ppr_sequence(pattern_of(A))) == "011"


def test_principal_permanents_lists_all_subsets():
    got = list(principal_permanents(TRIANGLE, 2))
    assert [a.members for a, _ in got] == [(1, 2), (1, 3), (2, 3)]
    assert all(v == 1 for _, v in got)


@given(int_matrices(lo=0, hi=9, max_order=7))
@settings(max_examples=100, deadline=None)
def test_pattern_invariance_nonnegative(A):
    assert ppr_sequence(A) == ppr_sequence(pattern_of(A))


@given(int_matrices(lo=0, hi=1, max_order=7))
@settings(max_examples=100, deadline=None)
def test_bits_match_generalized_cycles(B):
    seq = ppr_sequence(B)
    G = from_pattern(B)
    for k in range(1, B.order + 1):
        assert seq[k] == int(find_generalized_cycle(G, k) is not None)


@pytest.mark.parametrize("n", range(2, 10))
def test_skew_odd_permanents_vanish(n):
    for seed in range(15):
        A = random_skew(n, 5, seed)
        seq = ppr_sequence(A)
        assert not any(seq[i] for i in range(1, n + 1, 2))
        for k in range(1, n + 1, 2):
            assert all(v == 0 for _, v in principal_permanents(A, k))


@pytest.fixture(scope="module")
def symmetric_sequences():
    return {n: {ppr_sequence(A) for A in iter_universe(FamilyUniverse(n, Family.SYMMETRIC))} for n in range(1, 5)}


def test_symmetric_even_monotonicity(symmetric_sequences):
    assert all(even_monotone(s) for seqs in symmetric_sequences.values() for s in seqs)


def test_symmetric_odd_contiguity(symmetric_sequences):
    assert all(odd_contiguous(s) for seqs in symmetric_sequences.values() for s in seqs)


def test_symmetric_min_max_odd_bound(symmetric_sequences):
    assert all(odd_bound_holds(s) for seqs in symmetric_sequences.values() for s in seqs)


def test_lemma_predicates_detect_violations():
    p = PprSequence.parse
    assert not even_monotone(p("1010001"))
    assert not even_monotone(p("10001"))
    assert even_monotone(p("101010"))
    assert not odd_contiguous(p("10111011"))
    assert odd_contiguous(p("1111100"))
    # lo = hi = 1 forbids r_4
    assert not odd_bound_holds(p("111010"))
    assert odd_bound_holds(p("111000"))


def test_directed_patterns_break_symmetric_lemmas():
    # the directed 3-cycle has r_3 = 1 but r_2 = 0
    A = IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert str(ppr_sequence(A)) == "1001"
    assert not even_monotone(ppr_sequence(A))


def test_large_sparse_order_is_fast():
    rng = random.Random(0)
    n = 16
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = rng.randint(1, 5)
    rows[n - 1][0] = 1
    assert str(ppr_sequence(IntMatrix.from_rows(rows))) == "1" + "0" * (n - 1) + "1"
