"""Finite simple undirected graphs on dense 0-based vertex indices.

Adjacency is kept two ways: sorted neighbor tuples (the public view) and
Python-int bitsets (``masks``), which the clique, dimension and validator
code use for set intersection.  A vertex set inside a graph is likewise
passed around internally as an int bitmask.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, InvalidSubset, SelfLoop

__all__ = [
    "Graph",
    "VertexSubset",
    "from_edge_list",
    "unit_sphere",
    "induced_subgraph",
    "is_connected",
    "bfs_diameter",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable finite simple graph.

    Build one with :func:`from_edge_list` (or ``Graph.from_edges``); the
    constructor expects already-normalized adjacency and only checks it.
    """

    __slots__ = ("_adj", "_masks")

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        n = len(adj)
        for v, nb in enumerate(adj):
            for u in nb:
                if not 0 <= u < n:
                    raise IndexOutOfRange(f"neighbor {u} of vertex {v} outside [0, {n})")
                if u == v:
                    raise SelfLoop(f"self-loop at vertex {v}")
        for v, nb in enumerate(adj):
            for u in nb:
                if v not in adj[u]:
                    raise ValueError(f"adjacency not symmetric: {v}->{u} but not {u}->{v}")
        self._adj = adj
        self._masks = tuple(mask_of(nb) for nb in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return from_edge_list(n, edges)

    @property
    def n(self) -> int:
        return len(self._adj)

    vertex_count = n  # alias

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbor bitsets, ``masks[v] >> u & 1`` iff u ~ v."""
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self._adj) for v in nb if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class VertexSubset:
    """Strictly increasing list of vertices of ``parent``."""

    parent: Graph
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = self.parent.n
        for i, v in enumerate(vs):
            if not 0 <= v < n:
                raise InvalidSubset(f"vertex {v} outside [0, {n})")
            if i and vs[i - 1] >= v:
                raise InvalidSubset("subset indices must be strictly increasing")

    @classmethod
    def of(cls, parent: Graph, vertices: Iterable[int]) -> "VertexSubset":
        return cls(parent, tuple(sorted(set(vertices))))

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices, deduplicating symmetric pairs."""
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop ({u}, {u})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def subgraph_from_mask(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on a bitmask, plus the new-index -> parent map."""
    verts = tuple(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    masks = g.masks
    adj = [[index[u] for u in iter_bits(masks[v] & mask)] for v in verts]
    return Graph(adj), verts


def induced_subgraph(g: Graph, s: VertexSubset | Iterable[int]) -> Graph:
    if isinstance(s, VertexSubset):
        if s.parent is not g and s.parent != g:
            raise InvalidSubset("subset belongs to a different graph")
    else:
        s = VertexSubset(g, tuple(s))
    return subgraph_from_mask(g, s.mask)[0]


def unit_sphere(g: Graph, p: int) -> tuple[Graph, VertexSubset]:
    """The graph induced on the neighbors of ``p``, in ascending parent order."""
    g._check(p)
    sub, verts = subgraph_from_mask(g, g.masks[p])
    return sub, VertexSubset(g, verts)


def mask_is_connected(masks: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= masks[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def mask_components(masks: Sequence[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= masks[v]
            frontier = reach & rest & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    """True for exactly one component; the empty graph counts as connected."""
    return mask_is_connected(g.masks, g.full_mask)


def bfs_diameter(g: Graph) -> int | float:
    """Largest shortest-path distance, ``math.inf`` if disconnected."""
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best
