"""Exact dense integer matrices and their permanents.

Entries are Python ints, so every permanent is exact and zero tests never
suffer from rounding.  Three evaluators are provided:

* :func:`permanent_naive` sums over all ``n!`` permutations (reference).
* :func:`permanent_ryser` is the inclusion-exclusion formula over column
  subsets, walked in Gray-code order so each step updates the running row
  sums by a single column.
* :func:`permanent_sparse` expands along rows over column bitmasks and skips
  zero entries; it is the fast path for the sparse patterns that graphs give.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "IntMatrix",
    "IndexSet",
    "MatrixFormatError",
    "permanent",
    "permanent_naive",
    "permanent_ryser",
    "permanent_sparse",
    "principal_submatrix",
    "pattern_of",
    "parse_matrix",
    "format_matrix",
]


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed."""


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of arbitrary-precision integers (immutable)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n < 1:
            raise ValueError("matrix order must be at least 1")
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in order {n}")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def ones(cls, n: int) -> "IntMatrix":
        return cls(tuple((1,) * n for _ in range(n)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.order))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def permute(self, perm: Sequence[int]) -> "IntMatrix":
        """Return ``P A P^T`` where ``P`` sends index ``perm[i]`` to ``i`` (0-based)."""
        return IntMatrix(tuple(tuple(self.rows[p][q] for q in perm) for p in perm))

    def is_symmetric(self) -> bool:
        n = self.order
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def is_skew_symmetric(self) -> bool:
        n = self.order
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i, n))

    def is_binary(self) -> bool:
        return all(x in (0, 1) for row in self.rows for x in row)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)

    def __str__(self) -> str:
        return format_matrix(self)


@dataclass(frozen=True)
class IndexSet:
    """A subset of ``[1, universe]`` with members kept sorted (1-based, as in the math)."""

    universe: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.universe < 1:
            raise ValueError("index set universe must be at least 1")
        if any(b <= a for a, b in zip(self.members, self.members[1:])):
            raise ValueError("index set members must be strictly increasing")
        if self.members and (self.members[0] < 1 or self.members[-1] > self.universe):
            raise ValueError(f"index set members must lie in [1, {self.universe}]")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> "IndexSet":
        return cls(universe, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


# Orders up to this use a cached n! x n permutation table (40320 x 8 at most).
_TABLE_MAX_ORDER = 8


@functools.lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def permanent_naive(A: IntMatrix) -> int:
    """Sum of all diagonal products, one per permutation. O(n! n)."""
    n = A.order
    if n <= _TABLE_MAX_ORDER:
        # object dtype keeps Python ints, so products stay exact
        entries = np.array(A.rows, dtype=object)
        return int(entries[np.arange(n), _permutation_table(n)].prod(axis=1).sum())
    rows = A.rows
    return sum(math.prod(map(tuple.__getitem__, rows, sigma)) for sigma in itertools.permutations(range(n)))


def permanent_ryser(A: IntMatrix) -> int:
    """Ryser's inclusion-exclusion permanent in Gray-code order, O(2^n n)."""
    n = A.order
    cols = [tuple(A.rows[i][j] for i in range(n)) for j in range(n)]
    rowsums = [0] * n
    in_set = [False] * n
    total = 0
    size = 0
    for t in range(1, 1 << n):
        # Gray code flips the lowest set bit position of t.
        j = (t & -t).bit_length() - 1
        col = cols[j]
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i in range(n):
                rowsums[i] -= col[i]
        else:
            in_set[j] = True
            size += 1
            for i in range(n):
                rowsums[i] += col[i]
        prod = math.prod(rowsums)
        if prod:
            total += -prod if size & 1 else prod
    return -total if n & 1 else total


def permanent_sparse(A: IntMatrix) -> int:
    """Row expansion over column bitmasks, skipping zero entries.

    Exact for any integer matrix; cost tracks the number of reachable
    partial assignments, which is tiny for graph-like patterns.
    """
    n = A.order
    row_nz = [[(j, x) for j, x in enumerate(row) if x] for row in A.rows]
    layer = {0: 1}
    for i in range(n):
        nxt: dict[int, int] = {}
        for mask, val in layer.items():
            for j, x in row_nz[i]:
                bit = 1 << j
                if not mask & bit:
                    nxt[mask | bit] = nxt.get(mask | bit, 0) + val * x
        layer = {m: v for m, v in nxt.items() if v}
        if not layer:
            return 0
    return layer.get((1 << n) - 1, 0)


def permanent(A: IntMatrix) -> int:
    """Default exact permanent (Ryser)."""
    return permanent_ryser(A)


def principal_submatrix(A: IntMatrix, alpha: IndexSet) -> IntMatrix:
    if alpha.universe != A.order:
        raise ValueError(f"index set universe {alpha.universe} does not match matrix order {A.order}")
    if not alpha.members:
        raise ValueError("principal submatrix of an empty index set is not a matrix")
    idx = [a - 1 for a in alpha.members]
    return IntMatrix(tuple(tuple(A.rows[i][j] for j in idx) for i in idx))


def pattern_of(A: IntMatrix) -> IntMatrix:
    """Zero-nonzero pattern: 1 where ``A`` is nonzero, 0 elsewhere."""
    return IntMatrix(tuple(tuple(int(x != 0) for x in row) for row in A.rows))


def parse_matrix(text: str) -> IntMatrix:
    """Parse the matrix text format: order on the first line, then ``n`` rows of ``n`` ints."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MatrixFormatError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError:
        raise MatrixFormatError(f"first line must be the matrix order, got {lines[0]!r}") from None
    if n < 1:
        raise MatrixFormatError(f"matrix order must be at least 1, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} rows, found {len(body)}")
    rows = []
    for lineno, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFormatError(f"line {lineno}: expected {n} entries, found {len(tokens)}")
        try:
            rows.append(tuple(int(tok) for tok in tokens))
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: non-integer entry in {line!r}") from None
    return IntMatrix(tuple(rows))


def format_matrix(A: IntMatrix) -> str:
    lines = [str(A.order)]
    lines.extend(" ".join(str(x) for x in row) for row in A.rows)
    return "\n".join(lines) + "\n"
