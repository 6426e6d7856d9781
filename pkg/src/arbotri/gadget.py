"""Popcount-thresholding instances and the triangle gadget graph G_x.

A bit string x of length M is laid out as M/a rows of a = alpha_star bits.
G_x has five vertex groups, stored contiguously as

    A = [0, R)   A' = [R, 2R)   B = [2R, 3R)   B' = [3R, 4R)   S = [4R, 4R + a)

with R = M / a.  Every vertex of A and B is joined to every vertex of S.
Bit (i, j) (0-based row i, offset j) targets row t = (i + j + 1) mod R:

    x_ij = 0  ->  edges (a_i, a'_t) and (b_i, b'_t)
    x_ij = 1  ->  edges (a_i, b_t)  and (a'_i, b'_t)

so m = 4M and each A-B edge closes exactly ``a`` triangles through S,
giving T = a * popcount(x).  (The 1-based (i, j) -> i + j indexing maps to
this 0-based form by i0 = i - 1, j0 = j - 1.)

:class:`GadgetBackend` answers the four graph queries straight from bit
reads without materializing the graph.
"""

from __future__ import annotations

import bisect
import json
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .estimator import EstimatorConfig
from .graph import EdgeRef, Graph
from .queries import QueryBackend, QueryCounter, QueryError
from .rng import make_stream
from .search import estimate_with_confidence

MAX_EXPLICIT_M = 10**6


@dataclass
class PtpInstance:
    M: int
    k: float
    gamma: float
    x: np.ndarray
    source: str = "external"

    @property
    def popcount(self) -> int:
        return int(self.x.sum())

    def to_text(self) -> str:
        header = {"M": self.M, "k": self.k, "gamma": self.gamma, "source": self.source}
        bits = np.packbits(self.x.astype(np.uint8)).tobytes().hex()
        return json.dumps(header, sort_keys=True) + "\n" + bits + "\n"

    @classmethod
    def from_text(cls, text: str) -> PtpInstance:
        lines = text.strip().splitlines()
        if len(lines) not in (1, 2):
            raise ValueError("instance file must hold a JSON header and a hex line")
        header = json.loads(lines[0])
        M = int(header["M"])
        raw = bytes.fromhex(lines[1]) if len(lines) == 2 else b""
        x = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))[:M]
        if x.size != M:
            raise ValueError(f"hex payload holds {x.size} bits, header says {M}")
        return cls(M, header["k"], header["gamma"], x.astype(np.uint8), header.get("source", "external"))


def deviation_window(M: int, k: float, gamma: float, delta: float) -> bool:
    """12 ln(1/delta) / gamma^2 <= k <= M/6."""
    return 12.0 * math.log(1.0 / delta) / gamma**2 <= k <= M / 6.0


def sample_ptp(M: int, k: float, gamma: float, dist: str, rng=None, delta: float = 0.01) -> PtpInstance:
    """i.i.d. bits with P[1] = (1 - 2 gamma) k / M (D0) or (1 + 2 gamma) k / M (D1)."""
    if dist not in ("D0", "D1"):
        raise ValueError("dist must be 'D0' or 'D1'")
    sign = -1.0 if dist == "D0" else 1.0
    p = (1.0 + sign * 2.0 * gamma) * k / M
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"bit probability {p} outside [0, 1]")
    if k > 0 and gamma > 0 and not deviation_window(M, k, gamma, delta):
        warnings.warn(f"PTP parameters M={M}, k={k}, gamma={gamma} lie outside the deviation window",
                      stacklevel=2)
    gen = make_stream(rng).generator
    x = (gen.random(M) < p).astype(np.uint8)
    return PtpInstance(M, k, gamma, x, dist)


@dataclass(frozen=True)
class GadgetSpec:
    M: int
    alpha_star: int

    def __post_init__(self):
        if self.alpha_star < 1 or self.M < 1:
            raise ValueError("M and alpha_star must be positive")
        if self.M % self.alpha_star:
            raise ValueError(f"alpha_star={self.alpha_star} does not divide M={self.M}")
        if self.alpha_star > self.M // self.alpha_star:
            # offsets 1..a must be distinct modulo R or edges collide
            raise ValueError("alpha_star^2 must not exceed M")

    @property
    def rows(self) -> int:
        return self.M // self.alpha_star

    @property
    def n(self) -> int:
        return 4 * self.rows + self.alpha_star

    @property
    def m(self) -> int:
        return 4 * self.M

    def ranges(self) -> dict[str, tuple[int, int]]:
        R = self.rows
        return {"A": (0, R), "A'": (R, 2 * R), "B": (2 * R, 3 * R), "B'": (3 * R, 4 * R),
                "S": (4 * R, 4 * R + self.alpha_star)}

    def to_json(self) -> dict:
        return {"M": self.M, "alpha_star": self.alpha_star, "rows": self.rows, "n": self.n, "m": self.m,
                "ranges": {k: list(v) for k, v in self.ranges().items()}}


def gadget_edges(bits, spec: GadgetSpec) -> list[EdgeRef]:
    x = np.asarray(bits, dtype=np.uint8)
    if x.size != spec.M:
        raise ValueError(f"bit string has length {x.size}, expected {spec.M}")
    R, a = spec.rows, spec.alpha_star
    A, Ap, B, Bp, S = 0, R, 2 * R, 3 * R, 4 * R
    edges = []
    for s in range(a):
        for i in range(R):
            edges.append(EdgeRef(A + i, S + s))
            edges.append(EdgeRef(B + i, S + s))
    for flat, bit in enumerate(x.tolist()):
        i, j = divmod(flat, a)
        t = (i + j + 1) % R
        if bit:
            edges.append(EdgeRef(A + i, B + t))
            edges.append(EdgeRef(Ap + i, Bp + t))
        else:
            edges.append(EdgeRef(A + i, Ap + t))
            edges.append(EdgeRef(B + i, Bp + t))
    return edges


def build_explicit_gadget(bits, alpha_star: int) -> Graph:
    x = np.asarray(bits, dtype=np.uint8)
    if x.size > MAX_EXPLICIT_M:
        raise ValueError(f"M={x.size} too large to materialize (limit {MAX_EXPLICIT_M})")
    spec = GadgetSpec(int(x.size), alpha_star)
    return Graph(spec.n, gadget_edges(x, spec))


# vertex groups
_A, _AP, _B, _BP, _S = range(5)


class GadgetBackend(QueryBackend):
    """Implicit G_x answering queries from bit reads.

    ``bits`` is a sequence or a callable ``flat_index -> bit``.  Every read
    goes through :meth:`read` and increments ``counter.bit_reads``.

    Vertices of A, B' and S have fixed degrees (2a, a and 2R); their
    Neighbour and Edge answers need at most one bit.  Degrees of A' and B
    vertices depend on x: the first access to such a vertex reads the 2a
    bits of its row and incoming diagonal and memoizes its neighbour list.

    ``random_edge_mode``:
      ``"bits"`` (default) picks one of the 4M edge slots uniformly: one of
      the 2M S-edges (no read) or one of the two edges encoded by a random
      bit (one read).  Exactly uniform over E.
      ``"degree"`` picks a vertex with probability deg(v)/2m, then a uniform
      neighbour.  Needs every degree, so the first call reads the whole
      string (charged once).
    """

    def __init__(self, bits, spec: GadgetSpec, random_edge_mode: str = "bits"):
        super().__init__()
        if random_edge_mode not in ("bits", "degree"):
            raise ValueError("random_edge_mode must be 'bits' or 'degree'")
        self.spec = spec
        self.n = spec.n
        self.m = spec.m
        self.random_edge_mode = random_edge_mode
        if callable(bits):
            self._get = bits
        else:
            arr = np.asarray(bits, dtype=np.uint8)
            if arr.size != spec.M:
                raise ValueError(f"bit string has length {arr.size}, expected {spec.M}")
            data = arr.tolist()
            self._get = data.__getitem__
        self._R = spec.rows
        self._a = spec.alpha_star
        self._lists: dict[int, list[int]] = {}
        self._cum: list[int] | None = None

    def read(self, flat: int) -> int:
        self.counter.bit_reads += 1
        return self._get(flat)

    def _split(self, v: int) -> tuple[int, int]:
        R = self._R
        g = v // R
        if g >= 4:
            return _S, v - 4 * R
        return g, v - g * R

    def _memo_list(self, v: int, group: int, row: int) -> list[int]:
        lst = self._lists.get(v)
        if lst is not None:
            return lst
        R, a = self._R, self._a
        out = []
        if group == _B:
            out.extend(range(4 * R, 4 * R + a))
        emit, recv = [], []
        for j in range(a):
            bit = self.read(row * a + j)
            t = (row + j + 1) % R
            if group == _AP and bit:
                emit.append(3 * R + t)
            elif group == _B and not bit:
                emit.append(3 * R + t)
        for j in range(a):
            src = (row - j - 1) % R
            bit = self.read(src * a + j)
            if group == _AP and not bit:
                recv.append(src)
            elif group == _B and bit:
                recv.append(src)
        out.extend(emit)
        out.extend(recv)
        self._lists[v] = out
        return out

    def _degree(self, v: int) -> int:
        group, row = self._split(v)
        if group == _A:
            return 2 * self._a
        if group == _BP:
            return self._a
        if group == _S:
            return 2 * self._R
        return len(self._memo_list(v, group, row))

    def _neighbour(self, v: int, i: int) -> int:
        R, a = self._R, self._a
        group, row = self._split(v)
        if group == _S:
            return i - 1 if i <= R else 2 * R + (i - R - 1)
        if group == _A:
            if i <= a:
                return 4 * R + i - 1
            j = i - a - 1
            t = (row + j + 1) % R
            return 2 * R + t if self.read(row * a + j) else R + t
        if group == _BP:
            j = i - 1
            src = (row - j - 1) % R
            return R + src if self.read(src * a + j) else 2 * R + src
        return self._memo_list(v, group, row)[i - 1]

    def _edge(self, u: int, v: int) -> int:
        gu, ru = self._split(u)
        gv, rv = self._split(v)
        if gu > gv:
            gu, ru, gv, rv = gv, rv, gu, ru
        if gv == _S:
            return 1 if gu in (_A, _B) else 0
        # remaining pairs are encoded by the bit at (source row, offset)
        want = {(_A, _AP): 0, (_A, _B): 1, (_AP, _BP): 1, (_B, _BP): 0}.get((gu, gv))
        if want is None:
            return 0
        j = (rv - ru - 1) % self._R
        if j >= self._a:
            return 0
        return 1 if self.read(ru * self._a + j) == want else 0

    def _random_edge(self, rng) -> EdgeRef:
        if self.random_edge_mode == "degree":
            return self._random_edge_by_degree(rng)
        R, a, M = self._R, self._a, self.spec.M
        slot = rng.index(4 * M)
        if slot < 2 * M:
            s, k = divmod(slot, 2 * R)
            other = k if k < R else 2 * R + (k - R)
            return EdgeRef(other, 4 * R + s)
        flat, side = divmod(slot - 2 * M, 2)
        i, j = divmod(flat, a)
        t = (i + j + 1) % R
        if self.read(flat):
            return EdgeRef(i, 2 * R + t) if side == 0 else EdgeRef(R + i, 3 * R + t)
        return EdgeRef(i, R + t) if side == 0 else EdgeRef(2 * R + i, 3 * R + t)

    def _random_edge_by_degree(self, rng) -> EdgeRef:
        if self._cum is None:
            cum, acc = [], 0
            for v in range(self.n):
                acc += self._degree(v)
                cum.append(acc)
            self._cum = cum
        v = bisect.bisect_right(self._cum, rng.index(2 * self.m))
        d = self._degree(v)
        u = self._neighbour(v, rng.index(d) + 1)
        return EdgeRef.of(u, v)


def gadget_backend(bits, spec: GadgetSpec, random_edge_mode: str = "bits") -> GadgetBackend:
    return GadgetBackend(bits, spec, random_edge_mode)


class Verdict(NamedTuple):
    label: str
    estimate: float
    threshold: float
    counters: QueryCounter


def ptp_distinguish(bits, spec: GadgetSpec, k: float, gamma: float, cfg: EstimatorConfig, rng,
                    delta: float = 1.0 / 6.0) -> Verdict:
    """Estimate T(G_x) with eps = gamma and answer D0 iff T_hat < (1 - gamma^2) k a."""
    b = GadgetBackend(bits, spec)
    res = estimate_with_confidence(b, spec.alpha_star, gamma, delta, cfg, rng)
    threshold = (1.0 - gamma**2) * k * spec.alpha_star
    label = "D0" if res.estimate < threshold else "D1"
    return Verdict(label, res.estimate, threshold, b.counter.snapshot())
