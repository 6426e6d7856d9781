"""Edge-sampling triangle estimator with a heavy-edge oracle.

``estimate_with_oracle`` samples ``s`` uniform edges, skips edges the oracle
flags as heavy, and for every light edge samples neighbours of its
low-degree endpoint to find triangles.  Each light triangle is charged to
one of its light edges; the estimate is ``m/s`` times the summed per-edge
weights.  ``estimate`` plugs in the randomized :func:`arbotri.heavy.heavy`
classifier with the constants of the full algorithm.

Charging modes
--------------
``canonical`` (default)
    a triangle found through ``e`` counts only if ``e`` is the first of the
    triangle's edges, in lexicographic order, that the oracle calls light.
    The charge is fixed in advance of sampling, so with a deterministic
    oracle the estimate is exactly unbiased for the light-triangle count.
    Every check is a fresh oracle call; a randomized oracle that answers
    inconsistently can make a triangle claimable by two edges, in which case
    the registry keeps the first and suppresses the other.
``first_found``
    a triangle counts for whichever edge found it first; later finds via a
    different edge are discarded.  This only behaves like a weight function
    once every triangle is found many times.  With sparse sampling the
    estimate drifts towards the sum of T_e over light edges (up to 3x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import EdgeRef, Graph, TriangleKey, triangles_per_edge
from .heavy import heavy
from .queries import QueryBackend, QueryCounter

CHARGING_MODES = ("canonical", "first_found")


@dataclass
class EstimatorConfig:
    eps: float = 0.25
    c: float = 1.0
    l: float = 6.0
    h: float = 24.0
    oracle_delta: float | None = None  # None -> 1/(m*n)
    sample_scale: float = 1.0
    seed: int | None = None
    charging: str = "canonical"
    median_constant: float = 18.0

    def __post_init__(self):
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")
        if not self.h > self.l > 0:
            raise ValueError("thresholds must satisfy h > l > 0")
        if self.c <= 0:
            raise ValueError("c must be positive")
        if self.sample_scale <= 0:
            raise ValueError("sample_scale must be positive")
        if self.oracle_delta is not None and not 0 < self.oracle_delta < 1:
            raise ValueError("oracle_delta must lie in (0, 1)")
        if self.charging not in CHARGING_MODES:
            raise ValueError(f"charging must be one of {CHARGING_MODES}")

    def to_json(self) -> dict:
        return {
            "eps": self.eps, "c": self.c, "l": self.l, "h": self.h,
            "oracle_delta": self.oracle_delta, "sample_scale": self.sample_scale,
            "seed": self.seed, "charging": self.charging,
            "median_constant": self.median_constant,
        }


class TriangleRegistry:
    """TriangleKey -> the edge it is charged to."""

    def __init__(self):
        self.owner: dict[TriangleKey, EdgeRef] = {}

    def __len__(self):
        return len(self.owner)

    def claim(self, key: TriangleKey, e: EdgeRef) -> bool:
        """Charge ``key`` to ``e`` unless another edge already owns it."""
        prev = self.owner.setdefault(key, e)
        return prev == e


@dataclass
class EdgeRecord:
    edge: EdgeRef
    heavy: int
    r: int
    charged: int
    w_hat: float


@dataclass
class EstimateReport:
    t_hat: float
    s: int
    t_tilde: float
    alpha: float
    eps: float
    counters: QueryCounter
    oracle_calls: int = 0
    duplicates_suppressed: int = 0
    records: list[EdgeRecord] | None = None
    registry: TriangleRegistry | None = field(default=None, repr=False)

    def to_json(self, verbose: bool = False) -> dict:
        out = {
            "t_hat": self.t_hat, "s": self.s, "t_tilde": self.t_tilde,
            "alpha": self.alpha, "eps": self.eps,
            "counters": self.counters.to_json(),
            "oracle_calls": self.oracle_calls,
            "duplicates_suppressed": self.duplicates_suppressed,
        }
        if verbose and self.records is not None:
            out["records"] = [
                {"edge": list(r.edge), "heavy": r.heavy, "r": r.r, "charged": r.charged, "w_hat": r.w_hat}
                for r in self.records
            ]
        return out


def sample_size(m: int, n: int, alpha: float, t_tilde: float, eps: float,
                c: float = 1.0, h: float = 24.0, scale: float = 1.0) -> int:
    """s = ceil(scale * 4c(1+h) eps^-3 (m alpha / t_tilde) ln n)."""
    if m == 0 or n < 2:
        return 0
    return math.ceil(scale * 4.0 * c * (1.0 + h) * eps ** -3 * (m * alpha / t_tilde) * math.log(n))


def _check_inputs(b: QueryBackend, t_tilde: float, alpha: float) -> None:
    if t_tilde < 1:
        raise ValueError("t_tilde must be at least 1")
    if b.n > 0 and t_tilde > float(b.n) ** 3:
        raise ValueError("t_tilde exceeds n^3, no graph has that many triangles")
    if alpha <= 0:
        raise ValueError("alpha must be positive")


def _run(b: QueryBackend, t_tilde: float, alpha: float, eps: float, cfg: EstimatorConfig,
         oracle, rng, record: bool) -> EstimateReport:
    _check_inputs(b, t_tilde, alpha)
    start = b.counter.snapshot()
    n, m = b.n, b.m
    s = sample_size(m, n, alpha, t_tilde, eps, cfg.c, cfg.h, cfg.sample_scale)
    if s == 0:
        if m > 0:
            raise ValueError("sample size is zero after scaling")
        # no edges: nothing to sample and no triangles
        return EstimateReport(0.0, 0, t_tilde, alpha, eps, QueryCounter(), registry=TriangleRegistry(),
                              records=[] if record else None)

    canonical = cfg.charging == "canonical"
    registry = TriangleRegistry()
    owner = registry.owner
    records = [] if record else None
    calls = 0
    suppressed = 0

    def decide(e):
        nonlocal calls
        calls += 1
        return oracle(e)

    degree, neighbour, edge = b.degree, b.neighbour, b.edge
    uniform, index = rng.uniform, rng.index
    total_w = 0.0
    for _ in range(s):
        e = b.random_edge(rng)
        du = degree(e.u)
        dv = degree(e.v)
        if du <= dv:
            low, x, d = e.u, e.v, du
        else:
            low, x, d = e.v, e.u, dv
        flagged = decide(e)
        # one draw per sample keeps streams aligned whichever branch runs
        u01 = uniform()
        if flagged:
            r = 0
        elif d <= alpha:
            r = 1 if u01 < d / alpha else 0
        else:
            r = math.ceil(d / alpha)
        charged = 0
        for _ in range(r):
            w = neighbour(low, index(d) + 1)
            if w == x or not edge(w, x):
                continue
            key = TriangleKey.of(low, x, w)
            prev = owner.get(key)
            if prev is not None:
                if prev == e:
                    charged += 1
                else:
                    suppressed += 1
                continue
            if canonical:
                for f in key.edges():
                    if f == e:
                        owner[key] = e
                        charged += 1
                        break
                    if decide(f) == 0:
                        suppressed += 1
                        break
            else:
                owner[key] = e
                charged += 1
        w_hat = charged * max(alpha, d) / r if r > 0 else 0.0
        total_w += w_hat
        if records is not None:
            records.append(EdgeRecord(e, flagged, r, charged, w_hat))

    return EstimateReport(
        t_hat=m / s * total_w, s=s, t_tilde=t_tilde, alpha=alpha, eps=eps,
        counters=b.counter.snapshot() - start, oracle_calls=calls,
        duplicates_suppressed=suppressed, records=records, registry=registry,
    )


def estimate_with_oracle(b: QueryBackend, t_tilde: float, alpha: float, cfg: EstimatorConfig,
                         oracle, rng, record: bool = False) -> EstimateReport:
    """One pass with an injected ``oracle(edge) -> 1 (heavy) | 0 (light)``.

    E[t_hat] equals the number of triangles having at least one edge the
    oracle calls light (canonical charging).
    """
    return _run(b, t_tilde, alpha, cfg.eps, cfg, oracle, rng, record)


def estimate(b: QueryBackend, t_tilde: float, alpha: float, cfg: EstimatorConfig, rng,
             record: bool = False) -> EstimateReport:
    """Full estimator: sample size at eps/2, oracle = heavy(., alpha, eps/6, delta).

    The heavy classifier at eps/6 accepts edges in <= 3*alpha/eps triangles
    and rejects edges in >= 12*alpha/eps triangles (each w.p. >= 1 - delta).
    """
    delta = cfg.oracle_delta
    if delta is None:
        delta = 1.0 / max(b.m * b.n, 2)
    eps6 = cfg.eps / 6.0

    def oracle(e):
        return heavy(b, e, alpha, eps6, delta, rng).bit

    return _run(b, t_tilde, alpha, cfg.eps / 2.0, cfg, oracle, rng, record)


def threshold_oracle(g: Graph, tau: float, per_edge: dict | None = None):
    """Exact oracle: 1 iff the edge lies in more than ``tau`` triangles."""
    te = triangles_per_edge(g) if per_edge is None else per_edge

    def oracle(e: EdgeRef) -> int:
        return 1 if te[e] > tau else 0

    return oracle
