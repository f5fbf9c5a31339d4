"""
Dimension is an average, validity is a certificate
==================================================
"""
from cliquecurv import constructions as C
from cliquecurv import detect_dimension, graph_dimension, validate_d_graph, vertex_dimension
from cliquecurv.graph import from_edge_list

# The inductive dimension of a vertex is one more than the dimension of its
# unit sphere, and a graph's dimension is the mean over its vertices.  The
# empty graph sits at -1, which makes isolated vertices 0-dimensional.
g = from_edge_list(4, [(0, 1), (1, 2), (2, 0), (2, 3)])  # triangle with a tail
for p in range(g.n):
    print(f"vertex {p}: dim {vertex_dimension(g, p)}")
print("graph:", graph_dimension(g))

for name in ("tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"):
    print(f"{name:>13}: {graph_dimension(C.platonic(name))}")

# Having integer dimension does not make a graph a manifold-like d-graph.
# The validator checks the recursive conditions and says which one failed.
for label, graph, d in [
    ("K_4", C.complete(4), 3),
    ("cube", C.platonic("cube"), 2),
    ("rectified 6-cube", C.rectified_hexeract(), 5),
    ("16-cell", C.cross_polytope(4), 3),
]:
    cert = validate_d_graph(graph, d)
    print(f"\n{label} as a {d}-graph: {'valid' if cert.valid else 'invalid'}")
    for v in cert.violations[:3]:
        print("   ", v)

# detect_dimension tries every d up to a bound.
print("\ndetected:", detect_dimension(C.cross_polytope(6), 7), "for the 6-cross-polytope")
