"""Randomized heavy/light edge classifier.

Samples ``r`` uniform neighbours of the low-degree endpoint and counts how
many close a triangle with the other endpoint.  With probability at least
``1 - delta`` it returns 1 for edges in >= 2*alpha/eps triangles and 0 for
edges in <= alpha/(2*eps) triangles; in between there is no guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import EdgeRef
from .queries import QueryBackend


@dataclass(frozen=True)
class HeavyDecision:
    bit: int
    r: int
    y_hat: float


def sample_count(edge_degree: int, alpha: float, eps: float, delta: float) -> int:
    """r = ceil(16 * eps * deg(e) / alpha * ln(1/delta)), at least 1."""
    return max(1, math.ceil(16.0 * eps * edge_degree / alpha * math.log(1.0 / delta)))


def heavy(b: QueryBackend, e: EdgeRef, alpha: float, eps: float, delta: float, rng) -> HeavyDecision:
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    du = b.degree(e.u)
    dv = b.degree(e.v)
    if du <= dv:
        low, other, d = e.u, e.v, du
    else:
        low, other, d = e.v, e.u, dv
    r = sample_count(d, alpha, eps, delta)
    hits = 0
    for _ in range(r):
        w = b.neighbour(low, rng.index(d) + 1)
        # drawing the other endpoint itself cannot close a triangle
        if w != other and b.edge(w, other):
            hits += 1
    y = hits / r
    return HeavyDecision(1 if y >= alpha / (eps * d) else 0, r, y)
