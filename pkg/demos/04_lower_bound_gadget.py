"""The popcount gadget: a bit string becomes a graph with T = popcount * a.

The implicit backend answers graph queries by reading single bits, so the
number of bit reads a triangle estimator makes is visible directly.
"""

import warnings

import numpy as np

from arbotri import EstimatorConfig, GadgetBackend, GadgetSpec, Stream, build_explicit_gadget, ptp_distinguish, sample_ptp
from arbotri.graph import count_triangles_exact

spec = GadgetSpec(64, 8)
x = (np.random.default_rng(2).random(64) < 0.3).astype(np.uint8)
g = build_explicit_gadget(x, 8)
print(f"M=64, a=8: popcount {int(x.sum())}, explicit graph has m={g.m}, T={count_triangles_exact(g)}")

b = GadgetBackend(x, spec)
b.edge(spec.ranges()["S"][0], 0)
print(f"Edge(s, a_0) answered with {b.counter.bit_reads} bit reads")
b.neighbour(0, 9)
print(f"Neighbour(a_0, 9) needed {b.counter.bit_reads} bit read in total")

# distinguish the two popcount distributions through the estimator
M, a, k, gamma = 6000, 20, 600, 0.25
spec = GadgetSpec(M, a)
cfg = EstimatorConfig(sample_scale=5e-5)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for dist in ("D0", "D1"):
        inst = sample_ptp(M, k, gamma, dist, Stream(7))
        v = ptp_distinguish(inst.x, spec, k, gamma, cfg, Stream(8))
        print(f"{dist}: popcount {inst.popcount}, estimate {v.estimate:.0f} vs threshold {v.threshold:.0f}"
              f" -> {v.label}; {v.counters.bit_reads} bit reads (string length {M})")
