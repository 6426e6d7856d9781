"""One estimator pass, given a guess for T.

First with an exact heavy/light oracle (so the estimate is unbiased for the
light-triangle count), then with the randomized oracle used in practice.
"""

import statistics

from arbotri import EstimatorConfig, GraphBackend, Stream, estimate, estimate_with_oracle, planted, threshold_oracle
from arbotri.graph import count_triangles_exact, degeneracy, light_triangle_count, triangles_per_edge

g, T = planted(600, 3, 1500, rng=4)
kappa = degeneracy(g).kappa
print(f"graph: n={g.n} m={g.m} T={T} kappa={kappa}")

# exact oracle with a deliberately low threshold, so some triangles are heavy
tau = 4
te = triangles_per_edge(g)
light = light_triangle_count(g, tau, te)
oracle = threshold_oracle(g, tau, te)
cfg = EstimatorConfig(sample_scale=0.002)
vals = [estimate_with_oracle(GraphBackend(g), T, kappa, cfg, oracle, Stream(i)).t_hat for i in range(300)]
print(f"exact oracle, tau={tau}: light triangles {light}, mean of 300 estimates {statistics.fmean(vals):.1f}")

# randomized heavy oracle, the full single-pass estimator
b = GraphBackend(g)
rep = estimate(b, T, kappa, EstimatorConfig(sample_scale=0.01), Stream(0))
print(f"full estimator: t_hat={rep.t_hat:.0f} from s={rep.s} samples")
print(f"queries: {rep.counters.to_json()}  (graph has {g.m} edges)")
