"""
Curvature that always adds up
=============================

Every vertex p of a finite simple graph gets a curvature K(p) computed from
the clique counts of its unit sphere S(p).  Summed over all vertices, the
curvatures give back the Euler characteristic of the clique complex.  This
script walks through a few graphs and shows the bookkeeping exactly.
"""
from fractions import Fraction

from cliquecurv import constructions as C
from cliquecurv import curvature_report, euler_characteristic, f_vector, sphere_profiles

# A complete graph K_n is a single (n-1)-simplex, so chi = 1.  By symmetry
# each vertex must carry curvature 1/n.
for n in (3, 5, 7):
    rep = curvature_report(C.complete(n))
    print(f"K_{n}: every vertex {rep.per_vertex[0]}, total {rep.total}")

# The cube graph has no triangles.  Each vertex has three neighbors and
# nothing else, so K = 1 - 3/2 = -1/2 and the total is -4.
cube = C.platonic("cube")
rep = curvature_report(cube)
print("\ncube f-vector", f_vector(cube).counts, "curvatures", {str(k) for k in rep.per_vertex}, "total", rep.total)

# The octahedron is a genuine 2-sphere.  Each unit sphere is a 4-cycle,
# so V_0 = V_1 = 4 and K = 1 - 4/2 + 4/3 = 1/3; six of them make 2.
octa = C.platonic("octahedron")
print("octahedron sphere profile", sphere_profiles(octa)[0].counts,
      "K =", curvature_report(octa).per_vertex[0])

# Nothing here depends on the graph being nice.  A random graph has
# fractional curvatures all over the place but the sum is still an integer.
g = C.erdos_renyi(12, 0.5, 42)
rep = curvature_report(g)
print("\nrandom graph, 12 vertices and", g.edge_count, "edges")
for p, k in enumerate(rep.per_vertex):
    print(f"  vertex {p:2d}  degree {g.degree(p):2d}  K = {k}")
print("sum of curvatures:", rep.total, " Euler characteristic:", euler_characteristic(g))
assert rep.total == euler_characteristic(g)

# The values are Fractions, never floats.
assert all(isinstance(k, Fraction) for k in rep.per_vertex)
