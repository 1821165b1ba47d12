"""Principal permanent rank (ppr) sequences.

``r_0`` is 1 exactly when the matrix has a zero on its main diagonal; for
``k >= 1``, ``r_k`` is 1 exactly when some ``k x k`` principal submatrix has a
nonzero permanent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .exactmat import IndexSet, IntMatrix

__all__ = [
    "PprSequence",
    "SequenceFormatError",
    "ppr_sequence",
    "perrank",
    "sequences_equal",
    "principal_permanents",
    "PrincipalPermanents",
]


class SequenceFormatError(ValueError):
    """Raised when a sequence literal is not a nonempty string of 0/1."""


@dataclass(frozen=True, order=True)
class PprSequence:
    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("a ppr-sequence has at least the bit r_0")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("ppr-sequence bits must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "PprSequence":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise SequenceFormatError(f"not a binary sequence: {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def length_n(self) -> int:
        return len(self.bits) - 1

    def __getitem__(self, k: int) -> int:
        return self.bits[k]

    def __len__(self) -> int:
        return len(self.bits)

    def ones(self) -> list[int]:
        return [i for i, b in enumerate(self.bits) if b]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


class PrincipalPermanents:
    """Permanents of principal submatrices of one matrix, sharing subproblems.

    ``per(A[rows, cols])`` is expanded along the lowest remaining row; the
    memo is keyed by (row mask, column mask), so overlapping principal
    submatrices reuse each other's work.  Zero entries are skipped.
    """

    def __init__(self, A: IntMatrix):
        self.order = A.order
        self._nz = [[(1 << j, x) for j, x in enumerate(row) if x] for row in A.rows]
        self._memo: dict[tuple[int, int], int] = {}

    def _per(self, rows: int, cols: int) -> int:
        if not rows:
            return 1
        key = (rows, cols)
        memo = self._memo
        if key in memo:
            return memo[key]
        low = rows & -rows
        rest = rows ^ low
        total = 0
        for bit, x in self._nz[low.bit_length() - 1]:
            if cols & bit:
                sub = self._per(rest, cols ^ bit)
                if sub:
                    total += x * sub
        memo[key] = total
        return total

    def of_mask(self, mask: int) -> int:
        return self._per(mask, mask)

    def of(self, alpha: IndexSet) -> int:
        if alpha.universe != self.order:
            raise ValueError("index set universe does not match matrix order")
        mask = 0
        for a in alpha.members:
            mask |= 1 << (a - 1)
        return self._per(mask, mask)


def _mask(members: tuple[int, ...]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def principal_permanents(A: IntMatrix, k: int) -> Iterator[tuple[IndexSet, int]]:
    """Yield ``(alpha, per(A[alpha]))`` for every ``k``-subset, lexicographically."""
    engine = PrincipalPermanents(A)
    n = A.order
    for members in itertools.combinations(range(n), k):
        yield IndexSet(n, tuple(i + 1 for i in members)), engine.of_mask(_mask(members))


def ppr_sequence(A: IntMatrix) -> PprSequence:
    n = A.order
    engine = PrincipalPermanents(A)
    bits = [int(any(d == 0 for d in A.diagonal()))]
    for k in range(1, n + 1):
        hit = 0
        for members in itertools.combinations(range(n), k):
            if engine.of_mask(_mask(members)):
                hit = 1
                break
        bits.append(hit)
    return PprSequence(tuple(bits))


def perrank(A: IntMatrix) -> int:
    """Largest order of a principal submatrix with nonzero permanent (0 if none)."""
    bits = ppr_sequence(A).bits
    return max((k for k in range(1, len(bits)) if bits[k]), default=0)


def sequences_equal(p: PprSequence, q: PprSequence) -> bool:
    return p.bits == q.bits
