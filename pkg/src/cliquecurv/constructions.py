"""Deterministic graph generators and combinators.

Random generators draw from numpy's PCG64 bit generator seeded with the
caller's integer seed, so a (parameters, seed) pair names one graph on
every platform.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import OverlappingCorrespondence, ParamOutOfRange, UnknownName
from .graph import Graph, from_edge_list
from .qfield import INV_PHI, ONE, PHI, ZERO, QSqrt5

__all__ = [
    "complete",
    "cyclic",
    "discrete",
    "wheel",
    "path",
    "tree_random",
    "hypercube",
    "platonic",
    "cross_polytope",
    "pyramid",
    "bipyramid",
    "cube_face_descriptors",
    "stellated_cube_boundary",
    "rectified_hexeract",
    "cell_600",
    "torus",
    "glue",
    "self_glue",
    "delete_vertices",
    "erdos_renyi",
    "from_recipe",
    "PLATONIC",
]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamOutOfRange(msg)


def complete(n: int) -> Graph:
    _need(n >= 0, f"complete graph needs n >= 0, got {n}")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def discrete(n: int) -> Graph:
    _need(n >= 0, f"discrete graph needs n >= 0, got {n}")
    return from_edge_list(n, [])


def cyclic(n: int) -> Graph:
    _need(n >= 3, f"cyclic graph needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 0, f"path graph needs n >= 0, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    """C_n on vertices 0..n-1 plus the hub n joined to all of them."""
    _need(n >= 3, f"wheel needs n >= 3, got {n}")
    return pyramid(cyclic(n))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def tree_random(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex i > 0 hangs off a uniform earlier vertex."""
    _need(n >= 0, f"tree needs n >= 0, got {n}")
    rng = _rng(seed)
    return from_edge_list(n, [(i, int(rng.integers(0, i))) for i in range(1, n)])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pair (i, j), i < j in lexicographic order, kept when a uniform draw is < p."""
    _need(n >= 0, f"n must be >= 0, got {n}")
    _need(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    pairs = list(itertools.combinations(range(n), 2))
    draws = _rng(seed).random(len(pairs))
    return from_edge_list(n, [e for e, x in zip(pairs, draws) if x < p])


def hypercube(n: int) -> Graph:
    """1-skeleton of the n-cube; vertex bits are coordinates."""
    _need(n >= 0, f"hypercube needs n >= 0, got {n}")
    return from_edge_list(1 << n, [(v, v ^ (1 << i)) for v in range(1 << n) for i in range(n) if v < v ^ (1 << i)])


def cross_polytope(n: int) -> Graph:
    """Vertices 2i, 2i+1 are +e_i, -e_i; everything but antipodes is adjacent."""
    _need(n >= 1, f"cross polytope needs n >= 1, got {n}")
    return from_edge_list(2 * n, [(u, v) for u, v in itertools.combinations(range(2 * n), 2) if u // 2 != v // 2])


def _sqdist(x, y):
    total = 0
    for a, b in zip(x, y):
        total = (a - b) * (a - b) + total
    return total


def _nearest_neighbor_graph(points: Sequence[Sequence]) -> Graph:
    """Join points at the minimal nonzero squared distance, compared exactly."""
    pairs = list(itertools.combinations(range(len(points)), 2))
    d2 = [_sqdist(points[i], points[j]) for i, j in pairs]
    best = min(d2)
    return from_edge_list(len(points), [e for e, d in zip(pairs, d2) if d == best])


def _cyclic_shifts(v):
    return [tuple(v[i:] + v[:i]) for i in range(len(v))]


def _signed(values):
    """All sign choices on the nonzero entries of ``values``."""
    out = []
    slots = [i for i, x in enumerate(values) if x != ZERO]
    for signs in itertools.product((1, -1), repeat=len(slots)):
        w = list(values)
        for i, s in zip(slots, signs):
            w[i] = w[i] * s
        out.append(tuple(w))
    return out


def _icosahedron_points():
    pts = []
    for base in _signed((ZERO, ONE, PHI)):
        pts.extend(_cyclic_shifts(list(base)))
    return pts


def _dodecahedron_points():
    pts = [tuple(QSqrt5(s) for s in signs) for signs in itertools.product((1, -1), repeat=3)]
    for base in _signed((ZERO, INV_PHI, PHI)):
        pts.extend(_cyclic_shifts(list(base)))
    return pts


PLATONIC = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def platonic(name: str) -> Graph:
    if name == "tetrahedron":
        return complete(4)
    if name == "cube":
        return hypercube(3)
    if name == "octahedron":
        return cross_polytope(3)
    if name == "icosahedron":
        return _nearest_neighbor_graph(_icosahedron_points())
    if name == "dodecahedron":
        return _nearest_neighbor_graph(_dodecahedron_points())
    raise UnknownName(f"unknown platonic solid {name!r}; expected one of {', '.join(PLATONIC)}")


def _even_permutations(k: int):
    for perm in itertools.permutations(range(k)):
        inversions = sum(perm[i] > perm[j] for i in range(k) for j in range(i + 1, k))
        if inversions % 2 == 0:
            yield perm


def cell_600() -> Graph:
    """The 600-cell on the 120 unit icosians, coordinates doubled.

    Order: 8 points (+-2,0,0,0) and permutations, 16 points (+-1,+-1,+-1,+-1),
    then 96 even permutations of (+-phi, +-1, +-1/phi, 0).
    """
    pts = []
    for i in range(4):
        for s in (2, -2):
            v = [ZERO] * 4
            v[i] = QSqrt5(s)
            pts.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=4):
        pts.append(tuple(QSqrt5(s) for s in signs))
    base = (PHI, ONE, INV_PHI, ZERO)
    for perm in _even_permutations(4):
        for signed in _signed(base):
            pts.append(tuple(signed[perm[i]] for i in range(4)))
    return _nearest_neighbor_graph(pts)


def rectified_hexeract() -> Graph:
    """Points with one zero and five +-1 entries in R^6, adjacent at squared distance 2."""
    pts = []
    for zero in range(6):
        for signs in itertools.product((1, -1), repeat=5):
            v = list(signs)
            v.insert(zero, 0)
            pts.append(tuple(v))
    pairs = itertools.combinations(range(len(pts)), 2)
    return from_edge_list(len(pts), [(i, j) for i, j in pairs if _sqdist(pts[i], pts[j]) == 2])


def cube_face_descriptors(n: int, include_dims: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Face descriptors kept by :func:`stellated_cube_boundary`, in vertex order.

    A descriptor lists -1/+1 for fixed coordinates and 0 for free ones;
    vertices come first, then face centers by increasing face dimension.
    """
    _need(n >= 3, f"stellated cube needs n >= 3, got {n}")
    dims = set(range(2, n)) if include_dims is None else set(include_dims)
    _need(all(1 <= k <= n - 1 for k in dims), f"face dimensions must lie in 1..{n - 1}")
    out = []
    for k in [0] + sorted(dims):
        for zeros in itertools.combinations(range(n), k):
            fixed = [i for i in range(n) if i not in zeros]
            for signs in itertools.product((1, -1), repeat=len(fixed)):
                v = [0] * n
                for i, s in zip(fixed, signs):
                    v[i] = s
                out.append(tuple(v))
    return out


def _contains(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    return all(b == 0 or b == s for b, s in zip(big, small))


def stellated_cube_boundary(n: int, include_dims: Iterable[int] | None = None) -> Graph:
    """Boundary of the n-cube with a cone vertex over each face of the chosen dimensions.

    Two vertices are adjacent when one face strictly contains the other, or
    when both are cube vertices joined by a cube edge (unless edges are
    themselves stellated).  The default stellates faces of dimension 2..n-1.
    """
    faces = cube_face_descriptors(n, include_dims)
    keep_edges = include_dims is None or 1 not in set(include_dims)
    edges = []
    for i, j in itertools.combinations(range(len(faces)), 2):
        a, b = faces[i], faces[j]
        if a.count(0) == b.count(0):
            if keep_edges and a.count(0) == 0 and sum(x != y for x, y in zip(a, b)) == 1:
                edges.append((i, j))
        elif _contains(a, b) or _contains(b, a):
            edges.append((i, j))
    return from_edge_list(len(faces), edges)


def torus(m: int, n: int) -> Graph:
    """Triangulated m x n torus: grid edges plus one diagonal per square."""
    _need(m >= 4 and n >= 4, f"torus needs m, n >= 4, got {m}, {n}")

    def idx(i, j):
        return (i % m) * n + (j % n)

    edges = []
    for i in range(m):
        for j in range(n):
            edges += [(idx(i, j), idx(i + 1, j)), (idx(i, j), idx(i, j + 1)), (idx(i, j), idx(i + 1, j + 1))]
    return from_edge_list(m * n, edges)


def pyramid(g: Graph) -> Graph:
    """Add apex ``g.n`` joined to every vertex."""
    n = g.n
    return from_edge_list(n + 1, g.edges() + [(v, n) for v in range(n)])


def bipyramid(g: Graph) -> Graph:
    """Add two non-adjacent apexes ``g.n`` and ``g.n + 1`` joined to every vertex."""
    n = g.n
    return from_edge_list(n + 2, g.edges() + [(v, a) for a in (n, n + 1) for v in range(n)])


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices, renumbered in ascending order."""
    drop = set(vertices)
    for v in drop:
        g._check(v)
    keep = [v for v in range(g.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    return from_edge_list(len(keep), [(index[u], index[v]) for u, v in g.edges() if u in index and v in index])


def _check_injective(pairs, what):
    left = [a for a, _ in pairs]
    right = [b for _, b in pairs]
    if len(set(left)) != len(left) or len(set(right)) != len(right):
        raise OverlappingCorrespondence(f"{what} correspondence is not injective")


def glue(g: Graph, h: Graph, correspondence: Sequence[tuple[int, int]]) -> Graph:
    """Disjoint union of ``g`` and ``h`` with each pair (u in g, w in h) identified.

    ``g`` keeps its numbering; unmatched vertices of ``h`` follow in order.
    """
    pairs = [tuple(p) for p in correspondence]
    _check_injective(pairs, "glue")
    for u, w in pairs:
        g._check(u)
        h._check(w)
    image = {w: u for u, w in pairs}
    nxt = g.n
    for w in range(h.n):
        if w not in image:
            image[w] = nxt
            nxt += 1
    edges = g.edges() + [(image[a], image[b]) for a, b in h.edges()]
    return from_edge_list(nxt, edges)


def self_glue(g: Graph, correspondence: Sequence[tuple[int, int]]) -> Graph:
    """Identify each pair (a, b) of ``g`` into a; the b's are removed.

    Edges between identified partners would become loops and are dropped.
    """
    pairs = [tuple(p) for p in correspondence]
    _check_injective(pairs, "self-glue")
    targets = {a for a, _ in pairs}
    sources = {b for _, b in pairs}
    if targets & sources:
        raise OverlappingCorrespondence("identified vertex sets must be disjoint")
    for a, b in pairs:
        g._check(a)
        g._check(b)
    merge = {b: a for a, b in pairs}
    keep = [v for v in range(g.n) if v not in sources]
    index = {v: i for i, v in enumerate(keep)}

    def img(v):
        return index[merge.get(v, v)]

    edges = {(min(img(u), img(v)), max(img(u), img(v))) for u, v in g.edges()}
    return from_edge_list(len(keep), [e for e in sorted(edges) if e[0] != e[1]])


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParamOutOfRange(f"{what} must be an integer, got {text!r}") from None


def from_recipe(recipe: str) -> Graph:
    """Build a graph from a generator recipe such as ``cross:4`` or ``bipyramid:cyclic:5``."""
    recipe = recipe.strip()
    family, _, rest = recipe.partition(":")
    args = rest.split(":") if rest else []

    def nargs(k):
        if len(args) != k:
            raise ParamOutOfRange(f"{family!r} takes {k} parameter(s), got {len(args)} in {recipe!r}")

    if family in ("pyramid", "bipyramid"):
        if not rest:
            raise ParamOutOfRange(f"{family} needs an inner recipe")
        inner = from_recipe(rest)
        return pyramid(inner) if family == "pyramid" else bipyramid(inner)
    simple = {"complete": complete, "cyclic": cyclic, "discrete": discrete, "wheel": wheel,
              "path": path, "cross": cross_polytope, "stellated-cube": stellated_cube_boundary,
              "hypercube": hypercube}
    if family in simple:
        nargs(1)
        return simple[family](_int(args[0], "n"))
    if family == "tree":
        nargs(2)
        return tree_random(_int(args[0], "n"), _int(args[1], "seed"))
    if family == "torus":
        nargs(2)
        return torus(_int(args[0], "m"), _int(args[1], "n"))
    if family == "platonic":
        nargs(1)
        return platonic(args[0])
    if family == "rect-hexeract":
        nargs(0)
        return rectified_hexeract()
    if family == "600-cell":
        nargs(0)
        return cell_600()
    if family == "er":
        nargs(3)
        try:
            p = float(Fraction(args[1]))
        except (ValueError, ZeroDivisionError):
            raise ParamOutOfRange(f"edge probability must be a number, got {args[1]!r}") from None
        return erdos_renyi(_int(args[0], "n"), p, _int(args[2], "seed"))
    raise UnknownName(f"unknown generator family {family!r}")
