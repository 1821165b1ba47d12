"""Directed graphs with loops, generalized cycles, and tree matchings.

Vertices are labelled ``1..n``.  An undirected edge ``{u, v}`` is stored as
the two arcs ``(u, v)`` and ``(v, u)``; a loop is the arc ``(v, v)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .exactmat import IndexSet, IntMatrix

__all__ = [
    "Digraph",
    "GeneralizedCycle",
    "from_pattern",
    "to_pattern",
    "find_generalized_cycle",
    "is_symmetric",
    "is_tree",
    "is_forest",
    "max_matching_tree",
    "to_dot",
]


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a digraph needs at least one vertex")
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        n = self.vertex_count
        for u, v in self.arcs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside [1, {n}]")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset(arcs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], loops: Iterable[int] = ()) -> "Digraph":
        """Undirected graph: each edge becomes a symmetric arc pair."""
        arcs = set()
        for u, v in edges:
            arcs.add((u, v))
            arcs.add((v, u))
        arcs.update((v, v) for v in loops)
        return cls(n, frozenset(arcs))

    def loops(self) -> list[int]:
        return sorted(u for u, v in self.arcs if u == v)

    def edges(self) -> list[tuple[int, int]]:
        """Undirected non-loop edges ``(u, v)`` with ``u < v`` (either arc direction counts)."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.arcs if u != v})

    def successors(self, u: int) -> list[int]:
        return sorted(v for a, v in self.arcs if a == u)

    def neighbours(self) -> dict[int, set[int]]:
        """Undirected adjacency ignoring loops."""
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.arcs:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj


@dataclass(frozen=True)
class GeneralizedCycle:
    """A permutation of ``support`` whose arcs ``i -> successor[i]`` all lie in a graph."""

    support: IndexSet
    successor: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return len(self.support)

    def as_dict(self) -> dict[int, int]:
        return dict(self.successor)

    def is_valid_in(self, G: Digraph) -> bool:
        succ = self.as_dict()
        members = set(self.support.members)
        if set(succ) != members or set(succ.values()) != members:
            return False
        return all((i, j) in G.arcs for i, j in succ.items())

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition; loops appear as 1-tuples."""
        succ = self.as_dict()
        seen: set[int] = set()
        out = []
        for start in self.support.members:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            v = succ[start]
            while v != start:
                cyc.append(v)
                seen.add(v)
                v = succ[v]
            out.append(tuple(cyc))
        return out


def from_pattern(B: IntMatrix) -> Digraph:
    if not B.is_binary():
        raise ValueError("from_pattern expects a (0,1)-matrix")
    n = B.order
    return Digraph(n, frozenset((i + 1, j + 1) for i in range(n) for j in range(n) if B.rows[i][j]))


def to_pattern(G: Digraph) -> IntMatrix:
    n = G.vertex_count
    return IntMatrix(tuple(tuple(int((i, j) in G.arcs) for j in range(1, n + 1)) for i in range(1, n + 1)))


def _cover(members: tuple[int, ...], succ_lists: Mapping[int, list[int]]) -> Optional[dict[int, int]]:
    """Backtracking perfect matching of ``members`` onto itself along arcs."""
    allowed = {u: [v for v in succ_lists[u] if v in members] for u in members}
    if any(not allowed[u] for u in members):
        return None
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def place(pos: int) -> bool:
        if pos == len(members):
            return True
        u = members[pos]
        for v in allowed[u]:
            if v not in used:
                used.add(v)
                assignment[u] = v
                if place(pos + 1):
                    return True
                used.discard(v)
                del assignment[u]
        return False

    return assignment if place(0) else None


def find_generalized_cycle(G: Digraph, k: int) -> Optional[GeneralizedCycle]:
    """First generalized cycle of order ``k``, supports taken in lexicographic order.

    Does not evaluate any permanent; each candidate support is tested by a
    backtracking search for a cycle cover of the induced subgraph.
    """
    n = G.vertex_count
    if not 1 <= k <= n:
        raise ValueError(f"order k={k} outside [1, {n}]")
    succ_lists = {u: G.successors(u) for u in range(1, n + 1)}
    for members in itertools.combinations(range(1, n + 1), k):
        found = _cover(members, succ_lists)
        if found is not None:
            return GeneralizedCycle(IndexSet(n, members), tuple(sorted(found.items())))
    return None


def is_symmetric(G: Digraph) -> bool:
    return all((v, u) in G.arcs for u, v in G.arcs)


def _components(G: Digraph) -> int:
    adj = G.neighbours()
    seen: set[int] = set()
    count = 0
    for s in adj:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def is_forest(G: Digraph) -> bool:
    if not is_symmetric(G) or G.loops():
        return False
    return len(G.edges()) == G.vertex_count - _components(G)


def is_tree(G: Digraph) -> bool:
    """Symmetric, loop-free, connected, with exactly ``n - 1`` edges."""
    if not is_symmetric(G) or G.loops():
        return False
    return len(G.edges()) == G.vertex_count - 1 and _components(G) == 1


def max_matching_tree(G: Digraph) -> int:
    """Maximum matching size of a forest by repeated leaf matching.

    Matching a leaf to its unique neighbour is always safe in a forest, so
    the greedy count is optimal.
    """
    if not is_forest(G):
        raise ValueError("max_matching_tree requires a symmetric loop-free forest")
    adj = G.neighbours()
    alive = set(adj)
    size = 0
    leaves = [v for v in sorted(alive) if len(adj[v]) == 1]
    while leaves:
        leaf = leaves.pop()
        if leaf not in alive or len(adj[leaf]) != 1:
            continue
        (mate,) = adj[leaf]
        size += 1
        for v in (leaf, mate):
            alive.discard(v)
            for w in adj[v]:
                adj[w].discard(v)
                if w in alive and len(adj[w]) == 1:
                    leaves.append(w)
            adj[v] = set()
    return size


def to_dot(G: Digraph, name: str = "G", collapse_symmetric: bool = True) -> str:
    """DOT text; a symmetric graph is written as an undirected ``graph``."""
    undirected = collapse_symmetric and is_symmetric(G)
    lines = [f"{'graph' if undirected else 'digraph'} {name} {{"]
    lines.extend(f"  {v};" for v in range(1, G.vertex_count + 1))
    if undirected:
        lines.extend(f"  {v} -- {v};" for v in G.loops())
        lines.extend(f"  {u} -- {v};" for u, v in G.edges())
    else:
        lines.extend(f"  {u} -> {v};" for u, v in sorted(G.arcs))
    lines.append("}")
    return "\n".join(lines) + "\n"
