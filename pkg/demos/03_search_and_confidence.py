"""No guess needed: geometric search over T, then the median trick."""

from arbotri import EstimatorConfig, GraphBackend, Stream, estimate_with_confidence, planted, search
from arbotri.graph import degeneracy

g, T = planted(2000, 4, 20000, rng=1)
kappa = degeneracy(g).kappa
cfg = EstimatorConfig(sample_scale=1e-3)

x, trace = search(GraphBackend(g), kappa, cfg, Stream(0))
last = trace.records[-1]
print(f"T={T}; search returned {x:.0f} after {len(trace.records)} estimator calls")
print(f"stopped at t_bar={last.t_bar:.0f}, guess {last.t_tilde:.0f}; queries {trace.counters.total}")

# delta >= 1/6 needs a single search; smaller delta takes the median of
# ceil(18 ln(1/delta)) independent searches (42 of them at delta = 0.1)
res = estimate_with_confidence(GraphBackend(g), kappa, 0.25, 1 / 6, cfg, Stream(1))
print(f"delta=1/6: {len(res.runs)} run, estimate {res.estimate:.0f}, relative error {(res.estimate - T) / T:+.3f}")
