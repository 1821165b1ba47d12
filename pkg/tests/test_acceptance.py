"""Exit criteria. Each test checks one criterion at its stated size and time budget.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import io
import itertools
import random
import time

import pytest

from permrank.cli import main
from permrank.exactmat import IndexSet, IntMatrix, pattern_of, permanent_naive, permanent_ryser, principal_submatrix
from permrank.graphcore import Digraph, max_matching_tree
from permrank.oracles import (
    FamilyUniverse,
    cycle_cover_exists,
    exhaustive_sequences,
    iter_universe,
    labeled_trees,
    random_int_matrix,
    random_skew,
)
from permrank.pprseq import PprSequence, ppr_sequence
from permrank.realizer import (
    Family,
    classify,
    construct_witness,
    enumerate_realizable,
    even_monotone,
    odd_bound_holds,
    odd_contiguous,
)

from test_cli import CASES, GOLDEN

pytestmark = pytest.mark.acceptance


class Clock:
    def __init__(self, item):
        self.item = item
        self.start = time.perf_counter()

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def stop(self, budget):
        elapsed = self.elapsed
        self.item.user_properties.append(("elapsed", elapsed))
        assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"


@pytest.fixture
def clock(request):
    return Clock(request.node)


@pytest.mark.criterion(1, "Ryser permanent equals permutation sum, 1000 matrices per n=1..8")
def test_permanent_oracle_equivalence(clock):
    for n in range(1, 9):
        rng = random.Random(1_000 + n)
        for _ in range(1000):
            A = random_int_matrix(n, -9, 9, rng)
            assert permanent_ryser(A) == permanent_naive(A)
    clock.stop(60)


@pytest.mark.criterion(2, "ppr(A) = ppr(pattern(A)) for nonnegative A, 500 per n=1..7")
def test_pattern_invariance(clock):
    for n in range(1, 8):
        rng = random.Random(2_000 + n)
        for _ in range(500):
            A = random_int_matrix(n, 0, 9, rng)
            assert ppr_sequence(A) == ppr_sequence(pattern_of(A))
    clock.stop(60)


def _bits_match_cycle_covers(B):
    seq = ppr_sequence(B)
    return all(seq[k] == int(cycle_cover_exists(B, k)) for k in range(1, B.order + 1))


@pytest.mark.criterion(3, "r_k = 1 iff a k-vertex cycle cover exists (all n<=4, 10^4 samples at n=6 and n=7)")
def test_generalized_cycle_equivalence(clock):
    for n in range(1, 5):
        for B in iter_universe(FamilyUniverse(n, Family.NONNEGATIVE)):
            assert _bits_match_cycle_covers(B)
    for n in (6, 7):
        rng = random.Random(3_000 + n)
        for _ in range(10_000):
            density = rng.choice((0.1, 0.2, 0.3, 0.5))
            rows = [[int(rng.random() < density) for _ in range(n)] for _ in range(n)]
            assert _bits_match_cycle_covers(IntMatrix.from_rows(rows))
    clock.stop(120)


@pytest.mark.criterion(4, "nonnegative characterization equals exhaustive sweep, n=1..4")
def test_nonnegative_completeness(clock):
    for n in range(1, 5):
        assert set(enumerate_realizable(n, Family.NONNEGATIVE)) == exhaustive_sequences(
            FamilyUniverse(n, Family.NONNEGATIVE)
        )
    clock.stop(60)


@pytest.fixture(scope="module")
def symmetric_sweep():
    start = time.perf_counter()
    sweep = {n: exhaustive_sequences(FamilyUniverse(n, Family.SYMMETRIC)) for n in range(1, 6)}
    return sweep, time.perf_counter() - start


@pytest.mark.criterion(5, "symmetric characterization equals exhaustive sweep, n=1..5")
def test_symmetric_completeness(clock, symmetric_sweep):
    sweep, sweep_time = symmetric_sweep
    for n, truth in sweep.items():
        assert set(enumerate_realizable(n, Family.SYMMETRIC)) == truth
    clock.start -= sweep_time
    clock.stop(120)


@pytest.mark.criterion(6, "every swept symmetric sequence obeys the three necessary-condition lemmas")
def test_symmetric_lemma_battery(clock, symmetric_sweep):
    sweep, _ = symmetric_sweep
    violations = [
        str(seq)
        for seqs in sweep.values()
        for seq in seqs
        if not (even_monotone(seq) and odd_contiguous(seq) and odd_bound_holds(seq))
    ]
    assert violations == []
    clock.stop(60)


@pytest.mark.criterion(7, "witness roundtrip for every realizable sequence, all families, n<=10")
def test_roundtrip_soundness(clock):
    for family in Family:
        for n in range(1, 11):
            for bits in itertools.product((0, 1), repeat=n + 1):
                seq = PprSequence(bits)
                if classify(seq, family).realizable:
                    assert ppr_sequence(construct_witness(seq, family)) == seq, (family, str(seq))
    clock.stop(300)


@pytest.mark.criterion(8, "odd-order principal permanents of skew matrices are 0, 200 per n=2..9")
def test_skew_odd_vanishing(clock):
    for n in range(2, 10):
        for seed in range(200):
            A = random_skew(n, 9, 8_000 * n + seed)
            for k in range(1, n + 1, 2):
                for alpha in itertools.combinations(range(1, n + 1), k):
                    assert permanent_ryser(principal_submatrix(A, IndexSet(n, alpha))) == 0
            assert not any(ppr_sequence(A)[k] for k in range(1, n + 1, 2))
    clock.stop(60)


@pytest.mark.criterion(9, "skew tree bits: even k is 1 iff k <= 2*mu, odd bits 0; all trees n<=7, two weightings")
def test_skew_tree_theorem(clock):
    rng = random.Random(9_000)
    weights = [w for w in range(-9, 10) if w]
    for n in range(1, 8):
        for edges in labeled_trees(n):
            mu = max_matching_tree(Digraph.from_edges(n, edges))
            expected = [int(k % 2 == 0 and k <= 2 * mu) for k in range(1, n + 1)]
            for _ in range(2):
                rows = [[0] * n for _ in range(n)]
                for u, v in edges:
                    w = rng.choice(weights)
                    rows[u - 1][v - 1] = w
                    rows[v - 1][u - 1] = -w
                seq = ppr_sequence(IntMatrix.from_rows(rows))
                assert list(seq.bits[1:]) == expected
    clock.stop(120)


@pytest.mark.criterion(10, "CLI golden files and exit codes for every documented example")
def test_cli_contract(clock):
    for name, argv, exit_code in CASES:
        out = io.StringIO()
        assert main([str(a) for a in argv], out=out) == exit_code, name
        assert out.getvalue() == (GOLDEN / f"{name}.txt").read_text(), name
    clock.stop(10)
