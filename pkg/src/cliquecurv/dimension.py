"""Inductive graph dimension and the d-graph validator.

dim(empty) = -1, the dimension of a vertex is 1 + dim of its unit sphere,
and the dimension of a graph is the mean over its vertices.  Spheres of
spheres are induced subgraphs of the original graph, so both the dimension
recursion and the validator key their memo tables by the parent-vertex
bitmask of the nested sphere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complex import count_cliques
from .errors import AmbiguousDimension
from .graph import Graph, iter_bits, mask_is_connected

__all__ = [
    "vertex_dimension",
    "vertex_dimensions",
    "graph_dimension",
    "Violation",
    "ValidationCertificate",
    "validate_d_graph",
    "detect_dimension",
    "DimensionValue",
    "dimension_value",
    "RULES",
]

RULES = ("sphere-connected", "sphere-dimension", "sphere-euler-char", "hyper-relation", "base-case")

_MINUS_ONE = Fraction(-1)


def _dim(masks: Sequence[int], mask: int, memo: dict[int, Fraction] | None) -> Fraction:
    if not mask:
        return _MINUS_ONE
    if memo is not None:
        hit = memo.get(mask)
        if hit is not None:
            return hit
    total = Fraction(0)
    size = 0
    for v in iter_bits(mask):
        total += 1 + _dim(masks, mask & masks[v], memo)
        size += 1
    value = total / size
    if memo is not None:
        memo[mask] = value
    return value


def vertex_dimension(g: Graph, p: int, memo: dict[int, Fraction] | None = None) -> Fraction:
    """1 + dimension of the unit sphere at ``p``.

    ``memo`` maps vertex bitmasks of ``g`` to dimensions and may be shared
    between calls on the same graph; pass ``memo=None`` to get a fresh one.
    """
    g._check(p)
    if memo is None:
        memo = {}
    return 1 + _dim(g.masks, g.masks[p], memo)


def vertex_dimensions(g: Graph, memo: dict[int, Fraction] | None = None) -> list[Fraction]:
    if memo is None:
        memo = {}
    return [1 + _dim(g.masks, g.masks[p], memo) for p in range(g.n)]


def graph_dimension(g: Graph, memo: dict[int, Fraction] | None = None) -> Fraction:
    """Average vertex dimension; -1 for the empty graph."""
    if memo is None:
        memo = {}
    return _dim(g.masks, g.full_mask, memo)


@dataclass(frozen=True)
class Violation:
    path: tuple[int, ...]
    rule: str
    detail: str

    def __str__(self) -> str:
        where = "/".join(map(str, self.path)) or "G"
        return f"{self.rule} at {where}: {self.detail}"


@dataclass(frozen=True)
class ValidationCertificate:
    claimed_d: int
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    @property
    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}


class _Validator:
    def __init__(self, g: Graph):
        self.masks = g.masks
        self.memo: dict[tuple[int, int], tuple[Violation, ...]] = {}
        self.counts: dict[int, tuple[int, ...]] = {}

    def f(self, mask: int) -> tuple[int, ...]:
        c = self.counts.get(mask)
        if c is None:
            c = self.counts[mask] = count_cliques(self.masks, mask)
        return c

    def check(self, mask: int, d: int) -> tuple[Violation, ...]:
        key = (mask, d)
        hit = self.memo.get(key)
        if hit is None:
            hit = self.memo[key] = tuple(self._check(mask, d))
        return hit

    def _check(self, mask: int, d: int) -> list[Violation]:
        masks = self.masks
        if not mask:
            return [Violation((), "base-case", "graph is empty")]
        if d == 0:
            if any(masks[v] & mask for v in iter_bits(mask)):
                return [Violation((), "base-case", "a 0-dimensional graph has no edges")]
            return []
        out: list[Violation] = []
        expected_chi = 1 + (-1) ** (d - 1)
        for p in iter_bits(mask):
            s = mask & masks[p]
            if d == 1:
                size = s.bit_count()
                has_edge = any(masks[v] & s for v in iter_bits(s))
                if size != 2 or has_edge:
                    out.append(Violation((p,), "sphere-dimension",
                                         f"S({p}) has {size} vertices{' and edges' if has_edge else ''}, "
                                         "expected 2 isolated vertices"))
                continue
            if not mask_is_connected(masks, s):
                out.append(Violation((p,), "sphere-connected", f"S({p}) is not connected"))
            fs = self.f(s)
            chi = sum(c if k % 2 == 0 else -c for k, c in enumerate(fs))
            if chi != expected_chi:
                out.append(Violation((p,), "sphere-euler-char",
                                     f"χ(S({p}))={chi}, expected {expected_chi}"))
            inner = self.check(s, d - 1)
            if inner:
                first = inner[0]
                out.append(Violation((p,), "sphere-dimension",
                                     f"S({p}) is not a {d - 1}-graph without boundary "
                                     f"({len(inner)} violations; first: {first.rule} at "
                                     f"{'/'.join(map(str, (p,) + first.path))}: {first.detail})"))
        fv = self.f(mask)
        top = fv[d] if d < len(fv) else 0
        below = fv[d - 1] if d - 1 < len(fv) else 0
        if (d + 1) * top != 2 * below:
            out.append(Violation((), "hyper-relation",
                                 f"{d + 1}*v_{d}={(d + 1) * top} != 2*v_{d - 1}={2 * below}"))
        return out


def validate_d_graph(g: Graph, d: int) -> ValidationCertificate:
    """Check that ``g`` is a d-dimensional graph without boundary.

    Every violation at the top level is collected; a sphere that fails its
    own recursive check contributes one ``sphere-dimension`` record whose
    detail names the first nested failure.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    return ValidationCertificate(d, _Validator(g).check(g.full_mask, d))


def detect_dimension(g: Graph, d_max: int = 10) -> int | None:
    """The unique d <= d_max for which ``g`` validates, or None."""
    if d_max < 0:
        raise ValueError("d_max must be non-negative")
    validator = _Validator(g)
    hits = [d for d in range(d_max + 1) if not validator.check(g.full_mask, d)]
    if len(hits) > 1:
        raise AmbiguousDimension(f"graph validates for several dimensions: {hits}")
    return hits[0] if hits else None


@dataclass(frozen=True)
class DimensionValue:
    """Graph dimension, optionally with the per-vertex values it averages."""

    value: Fraction
    per_vertex: tuple[Fraction, ...] | None = None


def dimension_value(g: Graph, per_vertex: bool = False) -> DimensionValue:
    memo: dict[int, Fraction] = {}
    value = graph_dimension(g, memo)
    if not per_vertex:
        return DimensionValue(value)
    return DimensionValue(value, tuple(vertex_dimensions(g, memo)))
