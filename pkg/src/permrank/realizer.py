"""Realizability of ppr-sequences and witness construction.

Three matrix families are handled:

``Family.NONNEGATIVE``
    Any nonnegative matrix.  Realizable sequences are ``011...1`` and every
    sequence starting with 1 (except ``11`` at order 1).  Witness: a directed
    path ``1 -> 2 -> ... -> n`` with a back arc ``k -> 1`` for every ``r_k = 1``.

``Family.SYMMETRIC``
    Symmetric nonnegative matrices.  Besides ``011...1`` the odd ones must
    form a window ``2l+1 .. 2k+1`` and the even ones a prefix ``0 .. 2m``
    with ``l <= k <= m <= l + k + 1``.

``Family.SKEW_TREE``
    Skew-symmetric matrices whose graph is a forest (a tree plus isolated
    vertices).  Odd bits vanish and the even ones form a prefix ``0 .. 2m``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional

from .exactmat import IntMatrix
from .graphcore import Digraph, to_pattern
from .pprseq import PprSequence

__all__ = [
    "Family",
    "Shape",
    "Reason",
    "FamilyClassification",
    "NotRealizableError",
    "classify",
    "construct_nonnegative",
    "construct_symmetric",
    "construct_skew_tree",
    "construct_witness",
    "enumerate_realizable",
    "even_monotone",
    "odd_contiguous",
    "odd_bound_holds",
]


class Family(enum.Enum):
    NONNEGATIVE = "nonnegative"
    SYMMETRIC = "symmetric"
    SKEW_TREE = "skew-tree"


class Shape(enum.Enum):
    ZERO_LEADING = "zero-leading"
    ONE_LEADING = "one-leading"
    ODD_WINDOW = "odd-window"
    EVEN_ONLY = "even-only"
    NOT_REALIZABLE = "not-realizable"


class Reason(enum.Enum):
    ZERO_LEADING_GAP = "zero-leading-gap"
    ODD_GAP = "odd-gap"
    EVEN_GAP = "even-gap"
    WINDOW_BOUND = "window-bound"
    N1_CONFLICT = "n1-conflict"
    ODD_BIT_IN_SKEW = "odd-bit-in-skew"
    R0_ZERO_IN_SKEW = "r0-zero-in-skew"


class NotRealizableError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyClassification:
    family: Family
    shape: Shape
    ell: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    reason: Optional[Reason] = None

    @property
    def realizable(self) -> bool:
        return self.shape is not Shape.NOT_REALIZABLE

    def params(self) -> dict[str, int]:
        return {name: v for name, v in (("l", self.ell), ("k", self.k), ("m", self.m)) if v is not None}

    def __str__(self) -> str:
        if not self.realizable:
            return f"NOT-REALIZABLE {self.reason.value}"
        parts = ["REALIZABLE", self.shape.value]
        parts.extend(f"{name}={v}" for name, v in self.params().items())
        return " ".join(parts)


def _reject(family: Family, reason: Reason, **params) -> FamilyClassification:
    return FamilyClassification(family, Shape.NOT_REALIZABLE, reason=reason, **params)


def _even_prefix(bits: tuple[int, ...]) -> Optional[int]:
    """``m`` if the even-indexed ones are exactly ``0, 2, ..., 2m``, else None."""
    evens = [i for i in range(0, len(bits), 2) if bits[i]]
    if not evens or evens != list(range(0, evens[-1] + 1, 2)):
        return None
    return evens[-1] // 2


def _odd_ones(bits: tuple[int, ...]) -> list[int]:
    return [i for i in range(1, len(bits), 2) if bits[i]]


def even_monotone(seq: PprSequence) -> bool:
    """``r_2j = 0`` for some ``j > 0`` forces every later bit to 0."""
    bits = seq.bits
    for j in range(2, len(bits), 2):
        if not bits[j]:
            return not any(bits[j:])
    return True


def odd_contiguous(seq: PprSequence) -> bool:
    odds = _odd_ones(seq.bits)
    return not odds or odds == list(range(odds[0], odds[-1] + 1, 2))


def odd_bound_holds(seq: PprSequence) -> bool:
    """With ``lo``/``hi`` the smallest/largest odd ones, even indices past ``lo + hi`` are 0."""
    odds = _odd_ones(seq.bits)
    if not odds:
        return True
    bound = odds[0] + odds[-1]
    return not any(seq.bits[i] for i in range(bound + 2, len(seq.bits), 2))


def _classify_zero_leading(seq: PprSequence, family: Family) -> FamilyClassification:
    if all(seq.bits[1:]):
        return FamilyClassification(family, Shape.ZERO_LEADING)
    return _reject(family, Reason.ZERO_LEADING_GAP)


def classify(seq: PprSequence, family: Family) -> FamilyClassification:
    bits = seq.bits
    n = seq.length_n

    if family is Family.SKEW_TREE:
        if not bits[0]:
            return _reject(family, Reason.R0_ZERO_IN_SKEW)
        if _odd_ones(bits):
            return _reject(family, Reason.ODD_BIT_IN_SKEW)
        m = _even_prefix(bits)
        if m is None:
            return _reject(family, Reason.EVEN_GAP)
        return FamilyClassification(family, Shape.EVEN_ONLY, m=m)

    if not bits[0]:
        return _classify_zero_leading(seq, family)
    # r_0 = 1 needs a zero diagonal cell, r_1 = 1 a nonzero one.
    if n == 1 and bits[1]:
        return _reject(family, Reason.N1_CONFLICT)

    if family is Family.NONNEGATIVE:
        return FamilyClassification(family, Shape.ONE_LEADING)

    m = _even_prefix(bits)
    if m is None:
        return _reject(family, Reason.EVEN_GAP)
    odds = _odd_ones(bits)
    if not odds:
        return FamilyClassification(family, Shape.EVEN_ONLY, m=m)
    ell, k = (odds[0] - 1) // 2, (odds[-1] - 1) // 2
    if not odd_contiguous(seq):
        return _reject(family, Reason.ODD_GAP, ell=ell, k=k, m=m)
    if k > m:
        return _reject(family, Reason.EVEN_GAP, ell=ell, k=k, m=m)
    if m > ell + k + 1:
        return _reject(family, Reason.WINDOW_BOUND, ell=ell, k=k, m=m)
    return FamilyClassification(family, Shape.ODD_WINDOW, ell=ell, k=k, m=m)


def _require(seq: PprSequence, family: Family) -> FamilyClassification:
    verdict = classify(seq, family)
    if not verdict.realizable:
        raise NotRealizableError(f"{seq} is not realizable for {family.value}: {verdict.reason.value}")
    return verdict


def construct_nonnegative(seq: PprSequence) -> Digraph:
    verdict = _require(seq, Family.NONNEGATIVE)
    n = seq.length_n
    if verdict.shape is Shape.ZERO_LEADING:
        return Digraph(n, frozenset((v, v) for v in range(1, n + 1)))
    arcs = {(v, v + 1) for v in range(1, n)}
    arcs.update((k, 1) for k in range(1, n + 1) if seq.bits[k])
    return Digraph(n, frozenset(arcs))


def construct_symmetric(seq: PprSequence) -> Digraph:
    verdict = _require(seq, Family.SYMMETRIC)
    n = seq.length_n
    if verdict.shape is Shape.ZERO_LEADING:
        return Digraph.from_edges(n, (), loops=range(1, n + 1))
    if verdict.shape is Shape.EVEN_ONLY:
        m = verdict.m
        return Digraph.from_edges(n, [(2 * i + 1, 2 * i + 2) for i in range(m)])

    ell, k, m = verdict.ell, verdict.k, verdict.m
    if ell == k == m == 0:
        return Digraph.from_edges(n, (), loops=[1])
    if ell == k == m:
        size = 2 * ell + 1
        return Digraph.from_edges(n, [(i, i % size + 1) for i in range(1, size + 1)])

    loops: list[int] = []
    edges: list[tuple[int, int]] = []
    if ell == 0:
        loops.append(1)
    else:
        size = 2 * ell + 1
        edges.extend((i, i % size + 1) for i in range(1, size + 1))
    edges.extend((v, v + 1) for v in range(2 * ell + 1, 2 * k + 1))
    nxt = 2 * k + 2
    pendants = max(0, 2 * (m - k) - 1)
    for v in range(1, pendants + 1):
        edges.append((v, nxt))
        nxt += 1
    # Remaining vertices hang off vertex 1 only when it already has a pendant;
    # otherwise they would enlarge the maximum matching, so they stay isolated.
    if pendants:
        edges.extend((1, v) for v in range(nxt, n + 1))
    return Digraph.from_edges(n, edges, loops=loops)


def construct_skew_tree(seq: PprSequence) -> IntMatrix:
    verdict = _require(seq, Family.SKEW_TREE)
    n, m = seq.length_n, verdict.m
    rows = [[0] * n for _ in range(n)]
    if m:
        edges = [(v, v + 1) for v in range(1, 2 * m)]
        edges.extend((2 * m - 1, v) for v in range(2 * m + 1, n + 1))
        for u, v in edges:
            i, j = min(u, v) - 1, max(u, v) - 1
            rows[i][j] = 1
            rows[j][i] = -1
    return IntMatrix.from_rows(rows)


def construct_witness(seq: PprSequence, family: Family) -> IntMatrix:
    """Witness matrix for ``seq`` in ``family`` (a (0,1)-pattern for the nonnegative families)."""
    if family is Family.NONNEGATIVE:
        return to_pattern(construct_nonnegative(seq))
    if family is Family.SYMMETRIC:
        return to_pattern(construct_symmetric(seq))
    return construct_skew_tree(seq)


def enumerate_realizable(n: int, family: Family) -> list[PprSequence]:
    """All realizable sequences of length ``n + 1`` in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    out = []
    for bits in itertools.product((0, 1), repeat=n + 1):
        seq = PprSequence(bits)
        if classify(seq, family).realizable:
            out.append(seq)
    return out
