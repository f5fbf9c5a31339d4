"""Clique complex counts: f-vectors, Euler characteristic, sphere profiles.

Counting is an ordered DFS over bitset candidate sets.  Each DFS node is
exactly one clique (its vertices in the order they were picked), so the
work is linear in the number of cliques and no clique is ever stored.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph

__all__ = [
    "FVector",
    "f_vector",
    "euler_characteristic",
    "sphere_profiles",
    "verify_transfer",
    "verify_hyper",
    "TransferReport",
    "HyperReport",
]


@dataclass(frozen=True)
class FVector:
    """``counts[k]`` is the number of complete subgraphs on k+1 vertices."""

    counts: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.counts)
        while c and c[-1] == 0:
            c.pop()
        if any(x < 0 for x in c):
            raise ValueError("negative simplex count")
        object.__setattr__(self, "counts", tuple(c))

    @property
    def max_dim(self) -> int:
        return len(self.counts) - 1

    def count(self, k: int) -> int:
        """v_k with the conventions v_{-1} = 1 and v_k = 0 past ``max_dim``."""
        if k == -1:
            return 1
        if k < -1:
            return 0
        return self.counts[k] if k < len(self.counts) else 0

    def __getitem__(self, k):
        return self.counts[k]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    @property
    def euler_characteristic(self) -> int:
        return euler_characteristic(self)


def _count(masks: Sequence[int], cand: int, depth: int, counts: list[int], cap: int) -> None:
    if depth == len(counts):
        counts.append(0)
    counts[depth] += cand.bit_count()
    if depth >= cap:
        return
    while cand:
        low = cand & -cand
        cand ^= low
        nxt = cand & masks[low.bit_length() - 1]
        if nxt:
            _count(masks, nxt, depth + 1, counts, cap)


def count_cliques(masks: Sequence[int], mask: int, cap: int | None = None) -> tuple[int, ...]:
    """Clique counts of the subgraph induced on ``mask``, through size cap+1."""
    counts: list[int] = []
    if mask:
        _count(masks, mask, 0, counts, len(masks) if cap is None else cap)
    return tuple(counts)


def f_vector(g: Graph, cap: int | None = None) -> FVector:
    """Simplex counts of the clique complex of ``g``.

    ``cap`` limits the largest simplex dimension counted.
    """
    if cap is not None and cap < 0:
        raise ValueError("cap must be non-negative")
    return FVector(count_cliques(g.masks, g.full_mask, cap))


def euler_characteristic(f: FVector | Graph) -> int:
    if isinstance(f, Graph):
        f = f_vector(f)
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(f.counts))


def _profile_chunk(args):
    masks, vertices = args
    return [count_cliques(masks, masks[p]) for p in vertices]


def _worker_count(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("CURV_THREADS", "1") or 1)
    if workers == 0:
        workers = os.cpu_count() or 1
    return max(1, workers)


def sphere_profiles(g: Graph, workers: int | None = None) -> list[FVector]:
    """f-vector of every unit sphere, indexed by vertex.

    With ``workers > 1`` the vertices are split across processes; the
    merged list is identical to the sequential one.  ``None`` reads
    ``CURV_THREADS`` (0 means one worker per CPU).
    """
    masks = g.masks
    workers = _worker_count(workers)
    if workers == 1 or g.n < 64:
        return [FVector(count_cliques(masks, masks[p])) for p in range(g.n)]
    step = -(-g.n // (4 * workers))
    chunks = [(masks, range(i, min(i + step, g.n))) for i in range(0, g.n, step)]
    out: list[FVector] = []
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_profile_chunk, chunks):
            out.extend(FVector(c) for c in part)
    return out


@dataclass(frozen=True)
class TransferReport:
    """Rows ``(k, sum_p V_{k-1}(p), (k+1) v_k)`` for k = 1..max_dim."""

    rows: tuple[tuple[int, int, int], ...]

    @property
    def holds(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.rows)

    @property
    def failures(self) -> list[int]:
        return [k for k, lhs, rhs in self.rows if lhs != rhs]


def verify_transfer(g: Graph, profiles: list[FVector] | None = None) -> TransferReport:
    f = f_vector(g)
    if profiles is None:
        profiles = sphere_profiles(g)
    top = max([1, f.max_dim] + [pr.max_dim + 1 for pr in profiles])
    rows = []
    for k in range(1, top + 1):
        lhs = sum(pr.count(k - 1) for pr in profiles)
        rows.append((k, lhs, (k + 1) * f.count(k)))
    return TransferReport(tuple(rows))


@dataclass(frozen=True)
class HyperReport:
    d: int
    graph_lhs: int
    graph_rhs: int
    failing_vertex: int | None
    sphere_lhs: int | None = None
    sphere_rhs: int | None = None

    @property
    def graph_holds(self) -> bool:
        return self.graph_lhs == self.graph_rhs

    @property
    def holds(self) -> bool:
        return self.graph_holds and self.failing_vertex is None


def verify_hyper(g: Graph, d: int, profiles: list[FVector] | None = None) -> HyperReport:
    """Check (d+1) v_d == 2 v_{d-1} on ``g`` and d V_{d-1} == 2 V_{d-2} on its spheres.

    The first vertex whose sphere breaks the relation is reported.
    """
    if d < 1:
        raise ValueError("hyper relation needs d >= 1")
    f = f_vector(g)
    if profiles is None:
        profiles = sphere_profiles(g)
    for p, pr in enumerate(profiles):
        lhs, rhs = d * pr.count(d - 1), 2 * pr.count(d - 2)
        if lhs != rhs:
            return HyperReport(d, (d + 1) * f.count(d), 2 * f.count(d - 1), p, lhs, rhs)
    return HyperReport(d, (d + 1) * f.count(d), 2 * f.count(d - 1), None)
