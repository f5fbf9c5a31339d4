from fractions import Fraction as F

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquecurv import constructions as C
from cliquecurv.complex import euler_characteristic
from cliquecurv.dimension import (
    detect_dimension,
    dimension_value,
    graph_dimension,
    validate_d_graph,
    vertex_dimension,
    vertex_dimensions,
)
from cliquecurv.graph import from_edge_list, unit_sphere


def naive_dimension(g):
    """The recursion written over explicit sphere graphs, no memo, no bitsets."""
    if g.n == 0:
        return F(-1)
    return sum((1 + naive_dimension(unit_sphere(g, p)[0]) for p in range(g.n)), F(0)) / g.n


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def relabel(g, perm):
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_vertex_dimension_examples():
    for n in range(1, 8):
        assert vertex_dimension(C.complete(n), 0) == n - 1
    for n in (4, 5, 9):
        assert set(vertex_dimensions(C.cyclic(n))) == {1}
    cube = C.platonic("cube")
    assert all(vertex_dimension(cube, p) == 1 for p in range(cube.n))
    assert vertex_dimension(C.discrete(2), 0) == 0


@pytest.mark.parametrize(
    "recipe, expected",
    [
        ("platonic:tetrahedron", 3),
        ("platonic:icosahedron", 2),
        ("platonic:dodecahedron", 1),
        ("platonic:octahedron", 2),
        ("platonic:cube", 1),
        ("stellated-cube:3", 2),
        ("wheel:6", 2),
        ("discrete:4", 0),
        ("discrete:0", -1),
    ],
)
def test_graph_dimension_examples(recipe, expected):
    assert graph_dimension(C.from_recipe(recipe)) == expected


def test_fractional_dimension():
    # triangle with a pendant vertex: (2 + 2 + 5/3 + 1) / 4
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert vertex_dimension(g, 2) == F(5, 3)
    assert graph_dimension(g) == naive_dimension(g) == F(5, 3)


def test_dimension_value():
    dv = dimension_value(C.wheel(6), per_vertex=True)
    assert dv.value == 2 and dv.per_vertex == (2,) * 7
    assert dimension_value(C.discrete(0)).value == -1


def test_memo_matches_naive_recursion(graph_corpus):
    small = [g for _, g in graph_corpus if g.n <= 10]
    assert len(small) > 100
    for g in small:
        assert graph_dimension(g) == naive_dimension(g)
        assert vertex_dimensions(g) == [1 + naive_dimension(unit_sphere(g, p)[0]) for p in range(g.n)]


@given(st.integers(1, 10), st.floats(0, 1), st.integers(0, 2**32), st.randoms())
@settings(max_examples=60, deadline=None)
def test_dimension_isomorphism_invariant(n, p, seed, rnd):
    g = C.erdos_renyi(n, p, seed)
    perm = list(range(n))
    rnd.shuffle(perm)
    assert graph_dimension(relabel(g, perm)) == graph_dimension(g)


def test_validate_octahedron():
    assert validate_d_graph(C.platonic("octahedron"), 2).valid


def test_validate_k4_rejected():
    cert = validate_d_graph(C.complete(4), 3)
    assert not cert.valid
    assert "sphere-euler-char" in cert.rules
    v = next(v for v in cert.violations if v.rule == "sphere-euler-char")
    assert "=1, expected 2" in v.detail


def test_validate_cube_rejected_at_two():
    cert = validate_d_graph(C.platonic("cube"), 2)
    assert "sphere-dimension" in cert.rules
    assert validate_d_graph(C.platonic("cube"), 1).valid is False


def test_validate_rectified_hexeract_rejected():
    g = C.rectified_hexeract()
    s, _ = unit_sphere(g, 0)
    comps = [sorted(c) for c in nx.connected_components(to_nx(s))]
    assert len(comps) == 2 and all(len(c) == 5 for c in comps)
    assert all(s.degree(v) == 4 for v in range(s.n))
    cert = validate_d_graph(g, 5)
    assert "sphere-connected" in cert.rules
    assert euler_characteristic(s) == 2


@pytest.mark.slow
def test_validate_600_cell():
    g = C.cell_600()
    assert validate_d_graph(g, 3).valid
    ico = to_nx(C.platonic("icosahedron"))
    for p in range(0, g.n, 7):
        assert nx.is_isomorphic(to_nx(unit_sphere(g, p)[0]), ico)


def test_validate_empty_and_base_case():
    assert validate_d_graph(C.discrete(0), 2).rules == {"base-case"}
    assert validate_d_graph(C.discrete(3), 0).valid
    assert not validate_d_graph(C.complete(2), 0).valid
    assert validate_d_graph(C.cyclic(5), 1).valid
    assert not validate_d_graph(C.path(4), 1).valid


def test_detect_dimension_examples():
    assert detect_dimension(C.cross_polytope(4), 5) == 3
    assert detect_dimension(C.cross_polytope(5), 6) == 4
    assert detect_dimension(C.cyclic(9), 3) == 1
    assert detect_dimension(C.complete(4), 5) is None


@pytest.mark.parametrize("n", [3, 4, 5])
def test_stellated_cubes_validate(n):
    assert validate_d_graph(C.stellated_cube_boundary(n), n - 1).valid


@pytest.mark.slow
def test_stellated_six_cube_validates():
    assert validate_d_graph(C.stellated_cube_boundary(6), 5).valid


def test_valid_graphs_have_integer_dimension(graph_corpus):
    checked = 0
    for recipe, g in graph_corpus:
        if g.n > 200:
            continue
        d = detect_dimension(g, 7)
        if d is None:
            continue
        checked += 1
        assert graph_dimension(g) == d, recipe
        if d % 2 == 1:
            assert euler_characteristic(g) == 0, recipe
    assert checked >= 8
