"""
Stellated cube boundaries
=========================

Take the boundary of the n-cube and put a cone vertex over every face of
dimension 2..n-1.  Adjacency follows face containment, and the cube's own
edges are kept.  The result is an (n-1)-dimensional discrete sphere, which
makes it a good test bed for the dimension-specific Euler curvature form.
"""
from collections import Counter

from cliquecurv import constructions as C
from cliquecurv import curvature_report, euler_characteristic, f_vector, sphere_profiles, validate_d_graph

for n in (3, 4, 5):
    g = C.stellated_cube_boundary(n)
    print(f"n={n}: f-vector {f_vector(g).counts}, chi {euler_characteristic(g)}, "
          f"valid {n - 1}-graph: {validate_d_graph(g, n - 1).valid}")

# In dimension 4 the Euler form takes four different values, one per
# vertex type (cube vertex, square center, cube center, facet center).
g = C.stellated_cube_boundary(5)
rep = curvature_report(g, "euler-form", 4)
print("\n162-vertex sphere, Euler form with d=4")
for value, count in rep.class_multiplicities.items():
    print(f"  {count:3d} vertices with K = {value}")
print("  total", rep.total)

# One dimension up there are five vertex types.  Grouping the unit sphere
# f-vectors by how often they occur reproduces the classic table.
g = C.stellated_cube_boundary(6)
print(f"\n{g.n} vertices, {g.edge_count} edges")
rows = Counter(pr.counts for pr in sphere_profiles(g))
print(f"{'count':>6} {'V':>5} {'E':>5} {'F':>5} {'C':>5} {'H':>5}")
for row, mult in sorted(rows.items(), key=lambda kv: -kv[1]):
    print(f"{mult:6d} " + " ".join(f"{x:5d}" for x in row))

# In odd dimension the Euler form vanishes at every single vertex here.
rep = curvature_report(g, "euler-form", 5)
print("distinct d=5 Euler-form values:", [str(k) for k in sorted(set(rep.per_vertex))])
