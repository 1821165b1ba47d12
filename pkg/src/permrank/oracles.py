"""Brute-force ground truth for the realizability results.

Nothing here calls :mod:`permrank.realizer`'s classification; the exhaustive
sweeps compute ppr-sequences of every matrix in a finite universe, and
:func:`cycle_cover_exists` decides generalized cycles by bipartite matching
without touching permanents.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exactmat import IntMatrix
from .graphcore import Digraph
from .pprseq import PprSequence, ppr_sequence
from .realizer import Family

__all__ = [
    "EXHAUSTION_CAPS",
    "CapExceededError",
    "FamilyUniverse",
    "exhaustive_sequences",
    "iter_universe",
    "cycle_cover_exists",
    "random_skew",
    "random_tree",
    "random_int_matrix",
    "prufer_decode",
    "labeled_trees",
]

# Largest orders whose full sweep stays within a couple of minutes:
# 2^(n^2) directed patterns, 2^(n(n+1)/2) symmetric patterns, n^(n-2) trees.
EXHAUSTION_CAPS = {
    Family.NONNEGATIVE: 4,
    Family.SYMMETRIC: 5,
    Family.SKEW_TREE: 7,
}


class CapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyUniverse:
    n: int
    family: Family
    seed: int = 0
    override_cap: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        cap = EXHAUSTION_CAPS[self.family]
        if self.n > cap and not self.override_cap:
            raise CapExceededError(f"n={self.n} exceeds the {self.family.value} exhaustion cap {cap}")


def prufer_decode(code: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``1..n`` encoded by a Prufer code of length ``n - 2``."""
    if n == 1:
        return []
    if len(code) != n - 2:
        raise ValueError(f"Prufer code for n={n} must have length {n - 2}")
    degree = [1] * (n + 1)
    for v in code:
        degree[v] += 1
    edges = []
    for v in code:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return edges


def labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """Edge lists of all ``n^(n-2)`` labelled trees on ``1..n``."""
    if n == 1:
        yield []
        return
    for code in itertools.product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(code, n)


def _skew_from_edges(n: int, edges, rng: random.Random) -> IntMatrix:
    rows = [[0] * n for _ in range(n)]
    for u, v in edges:
        w = rng.choice((-1, 1))
        rows[u - 1][v - 1] = w
        rows[v - 1][u - 1] = -w
    return IntMatrix.from_rows(rows)


def iter_universe(u: FamilyUniverse) -> Iterator[IntMatrix]:
    n = u.n
    if u.family is Family.NONNEGATIVE:
        for bits in itertools.product((0, 1), repeat=n * n):
            yield IntMatrix(tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(n)))
    elif u.family is Family.SYMMETRIC:
        cells = [(i, j) for i in range(n) for j in range(i, n)]
        for bits in itertools.product((0, 1), repeat=len(cells)):
            rows = [[0] * n for _ in range(n)]
            for (i, j), b in zip(cells, bits):
                rows[i][j] = rows[j][i] = b
            yield IntMatrix.from_rows(rows)
    else:
        # A tree on 1..t padded with isolated vertices t+1..n.
        rng = random.Random(u.seed)
        for t in range(1, n + 1):
            for edges in labeled_trees(t):
                yield _skew_from_edges(n, edges, rng)


def exhaustive_sequences(u: FamilyUniverse) -> set[PprSequence]:
    return {ppr_sequence(A) for A in iter_universe(u)}


def _has_perfect_matching(members: Sequence[int], rows: Sequence[Sequence[int]]) -> bool:
    """Kuhn's augmenting paths between rows and columns of ``B[members]``."""
    adj = {i: [j for j in members if rows[i][j]] for i in members}
    match_col: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in match_col or augment(match_col[j], seen):
                match_col[j] = i
                return True
        return False

    return all(augment(i, set()) for i in members)


def cycle_cover_exists(B: IntMatrix, k: int) -> bool:
    """Whether some ``k``-subset of vertices carries a cycle cover in the pattern ``B``."""
    if not B.is_binary():
        raise ValueError("cycle_cover_exists expects a (0,1)-matrix")
    n = B.order
    if not 1 <= k <= n:
        raise ValueError(f"order k={k} outside [1, {n}]")
    return any(_has_perfect_matching(members, B.rows) for members in itertools.combinations(range(n), k))


def random_skew(n: int, magnitude: int, seed: int) -> IntMatrix:
    if n < 1 or magnitude < 1:
        raise ValueError("need n >= 1 and magnitude >= 1")
    rng = random.Random(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-magnitude, magnitude)
            rows[i][j] = x
            rows[j][i] = -x
    return IntMatrix.from_rows(rows)


def random_tree(n: int, seed: int) -> Digraph:
    """Uniform labelled tree on ``1..n`` via a random Prufer code."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    code = [rng.randint(1, n) for _ in range(max(0, n - 2))]
    return Digraph.from_edges(n, prufer_decode(code, n))


def random_int_matrix(n: int, low: int, high: int, rng: random.Random) -> IntMatrix:
    return IntMatrix(tuple(tuple(rng.randint(low, high) for _ in range(n)) for _ in range(n)))
