"""Exact ground truth: triangle counts, per-edge counts and degeneracy.

Everything the sampling code is judged against comes from here, so the demo
just builds a few graphs and prints what the exact routines say about them.
"""

from arbotri import clique, count_triangles_exact, degeneracy, forest_union, planted, triangles_per_edge
from arbotri.graph import edge_degree_sum, heavy_triangle_count

graphs = {
    "K6": clique(6),
    "forest_union(500, 3)": forest_union(500, 3, rng=0),
    "planted(2000, 4, 20000)": planted(2000, 4, 20000, rng=1)[0],
}

for name, g in graphs.items():
    T = count_triangles_exact(g)
    d = degeneracy(g)
    te = triangles_per_edge(g)
    print(f"{name:>24}: n={g.n:5d} m={g.m:6d} T={T:6d} kappa={d.kappa:2d} "
          f"density bound={d.density_bound} max T_e={max(te.values(), default=0)}")

# Low arboricity caps both the edge-degree sum and the number of triangles
# on heavy edges.  Check it on the planted graph with kappa as the bound.
g = graphs["planted(2000, 4, 20000)"]
k = degeneracy(g).kappa
T = count_triangles_exact(g)
print()
print(f"sum of edge degrees {edge_degree_sum(g)} <= 2 m kappa = {2 * g.m * k}")
for tau in (k, 4 * k, 16 * k):
    print(f"triangles with all edges in > {tau:3d} triangles: {heavy_triangle_count(g, tau):6d}"
          f"  (bound 3 T kappa / tau = {3 * T * k / tau:.0f})")
