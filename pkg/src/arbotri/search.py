"""Geometric search over the triangle-count guess, plus median amplification.

``search`` removes the need for a guess ``t_tilde`` with t_tilde <= 2T: for
each floor ``t_bar`` in n^3, n^3/2, ..., 1 it retries every guess from n^3
down to ``t_bar``, taking the minimum of a few independent estimates and
stopping at the first guess the minimum reaches.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field

from .estimator import EstimatorConfig, estimate
from .queries import QueryBackend, QueryCounter
from .rng import make_stream


@dataclass(frozen=True)
class TraceRecord:
    t_bar: float
    t_tilde: float
    rep: int
    x_i: float
    terminated: bool


@dataclass
class SearchTrace:
    records: list[TraceRecord] = field(default_factory=list)
    final: float = 0.0
    terminated: bool = False
    counters: QueryCounter = field(default_factory=QueryCounter)

    def to_json(self) -> dict:
        return {
            "final": self.final,
            "terminated": self.terminated,
            "counters": self.counters.to_json(),
            "records": [[r.t_bar, r.t_tilde, r.rep, r.x_i, r.terminated] for r in self.records],
        }


def repetitions(n: int, c: float) -> int:
    """ceil(2 ln(c ln n)), at least 1."""
    inner = c * math.log(n) if n > 1 else 0.0
    if inner <= 1.0:
        return 1
    return max(1, math.ceil(2.0 * math.log(inner)))


def halving_schedule(n: int) -> list[float]:
    """n^3, n^3/2, ... down to the last value >= 1."""
    top = float(n) ** 3
    out = []
    t = top
    while t >= 1.0:
        out.append(t)
        t /= 2.0
    return out


def search(b: QueryBackend, alpha: float, cfg: EstimatorConfig, rng) -> tuple[float, SearchTrace]:
    if b.n < 2:
        raise ValueError("search needs at least two vertices")
    rng = make_stream(rng)
    start = b.counter.snapshot()
    reps = repetitions(b.n, cfg.c)
    schedule = halving_schedule(b.n)
    trace = SearchTrace()
    for j, t_bar in enumerate(schedule):
        for t_tilde in schedule[: j + 1]:
            xs = []
            for i in range(reps):
                xs.append(estimate(b, t_tilde, alpha, cfg, rng).t_hat)
                trace.records.append(TraceRecord(t_bar, t_tilde, i, xs[-1], False))
            x = min(xs)
            if x >= t_tilde:
                last = trace.records[-1]
                trace.records[-1] = TraceRecord(last.t_bar, last.t_tilde, last.rep, last.x_i, True)
                trace.final, trace.terminated = x, True
                trace.counters = b.counter.snapshot() - start
                return x, trace
    # only reachable when every estimate stays below every guess, i.e. T = 0
    trace.counters = b.counter.snapshot() - start
    return 0.0, trace


def median_runs(delta: float, constant: float = 18.0) -> int:
    """Number of independent searches for confidence 1 - delta.

    One search already succeeds with probability 5/6, so delta >= 1/6 needs
    a single run; otherwise ceil(constant * ln(1/delta)).
    """
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if delta >= 1.0 / 6.0:
        return 1
    return max(1, math.ceil(constant * math.log(1.0 / delta)))


@dataclass
class ConfidentEstimate:
    estimate: float
    runs: list[float]
    traces: list[SearchTrace]
    counters: QueryCounter

    def to_json(self, verbose: bool = False) -> dict:
        out = {"estimate": self.estimate, "runs": self.runs, "counters": self.counters.to_json()}
        if verbose:
            out["traces"] = [t.to_json() for t in self.traces]
        return out


def estimate_with_confidence(b: QueryBackend, alpha: float, eps: float, delta: float,
                             cfg: EstimatorConfig, rng) -> ConfidentEstimate:
    """Median of independent :func:`search` runs, each on its own stream."""
    if eps != cfg.eps:
        cfg = EstimatorConfig(**{**cfg.__dict__, "eps": eps})
    k = median_runs(delta, cfg.median_constant)
    streams = make_stream(rng).spawn(k)
    start = b.counter.snapshot()
    runs, traces = [], []
    for st in streams:
        x, tr = search(b, alpha, cfg, st)
        runs.append(x)
        traces.append(tr)
    return ConfidentEstimate(statistics.median(runs), runs, traces, b.counter.snapshot() - start)
