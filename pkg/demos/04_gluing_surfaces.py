"""
Cutting and gluing surfaces
===========================

Removing a vertex from a triangulated surface leaves a hole bounded by the
vertex's unit sphere.  Gluing two punctured copies along that circle is a
connected sum, so the Euler characteristic obeys chi = chi_1 + chi_2 - 2.
"""
from cliquecurv import constructions as C
from cliquecurv import euler_characteristic, validate_d_graph


def double(g, p):
    punctured = C.delete_vertices(g, [p])
    rim = [v - (v > p) for v in g.neighbors(p)]
    return C.glue(punctured, punctured, [(v, v) for v in rim])


for label, surface in [("icosahedron", C.platonic("icosahedron")), ("6x6 torus", C.torus(6, 6))]:
    joined = double(surface, 0)
    print(f"{label}: chi {euler_characteristic(surface)} -> two copies joined: "
          f"chi {euler_characteristic(joined)}, {joined.n} vertices, "
          f"still a 2-graph: {validate_d_graph(joined, 2).valid}")

# A handle can also be attached to a single surface.  Drop two far-apart
# vertices of a torus and identify the two hexagonal rims with each other.
m = 8
t = C.torus(m, m)


def idx(i, j):
    return (i % m) * m + (j % m)


p, q = idx(0, 0), idx(4, 4)
holed = C.delete_vertices(t, [p, q])
shift = lambda v: v - (v > p) - (v > q)  # noqa: E731
offsets = [(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)]
handle = C.self_glue(holed, [(shift(idx(i, j)), shift(idx(4 + i, 4 + j))) for i, j in offsets])
print(f"\ntorus with an extra handle: chi {euler_characteristic(handle)}, "
      f"2-graph: {validate_d_graph(handle, 2).valid}")
