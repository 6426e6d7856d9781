"""Materialized simple undirected graphs and exact (brute-force) oracles.

Everything here has full access to the graph.  The estimators never touch
these objects directly; they go through :mod:`arbotri.queries`.  The exact
routines serve as ground truth for tests and for the CLI ``exact`` command.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Iterator, NamedTuple


class EdgeListError(ValueError):
    """Malformed edge-list document; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EdgeRef(NamedTuple):
    """Undirected edge, canonical orientation ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> EdgeRef:
        return cls(a, b) if a < b else cls(b, a)

    def low_deg_endpoint(self, degree) -> int:
        """Endpoint of smaller degree; ties go to the smaller id.

        ``degree`` is any callable vertex -> degree (a Graph method or a
        counting backend query).
        """
        return self.u if degree(self.u) <= degree(self.v) else self.v


class TriangleKey(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> TriangleKey:
        a, b, c = sorted((x, y, z))
        return cls(a, b, c)

    def edges(self) -> tuple[EdgeRef, EdgeRef, EdgeRef]:
        """The three edges in canonical (lexicographic) order."""
        return (EdgeRef(self.a, self.b), EdgeRef(self.a, self.c), EdgeRef(self.b, self.c))


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Neighbour lists are sorted ascending, so ``adjacency[v][i-1]`` is the
    deterministic answer to a 1-based ``Neighbour(v, i)`` query.
    """

    __slots__ = ("n", "m", "adjacency", "edges", "_nbr_sets", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"vertex id out of range in edge ({a}, {b})")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            e = EdgeRef.of(a, b)
            if e in seen:
                raise ValueError(f"duplicate edge {tuple(e)}")
            seen.add(e)
            adj[a].append(b)
            adj[b].append(a)
        self.n = n
        self.m = len(seen)
        self.adjacency = tuple(tuple(sorted(x)) for x in adj)
        self.edges = tuple(sorted(seen))
        self._nbr_sets = tuple(frozenset(x) for x in self.adjacency)
        self._degrees = tuple(len(x) for x in self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbour_set(self, v: int) -> frozenset:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edge_degree(self, e: EdgeRef) -> int:
        """deg(e) = min(deg(u), deg(v))."""
        return min(self._degrees[e.u], self._degrees[e.v])

    def low_endpoint(self, e: EdgeRef) -> int:
        return e.low_deg_endpoint(self.degree)


def load_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format.

    Duplicates, self-loops, out-of-range ids and malformed lines raise
    :class:`EdgeListError` carrying the offending line number.
    """
    lines = text.splitlines()
    # trailing blank lines are tolerated, nothing else is
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListError("empty document", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListError("header must be 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError("header must be two integers", 1) from None
    if n < 0 or m < 0:
        raise EdgeListError("negative size in header", 1)
    if len(lines) - 1 != m:
        raise EdgeListError(f"header declares {m} edges, found {len(lines) - 1}", len(lines))
    seen = set()
    pairs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex id in {raw!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex id out of range [0, {n})", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        e = EdgeRef.of(u, v)
        if e in seen:
            raise EdgeListError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
        pairs.append(e)
    return Graph(n, pairs)


def dump_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def triangles_per_edge(g: Graph) -> dict[EdgeRef, int]:
    """T_e = |N(u) & N(v)| for every edge, scanning the lower-degree side."""
    deg = g.degrees
    nbrs = g.adjacency
    sets = g._nbr_sets
    out = {}
    for e in g.edges:
        u, v = e
        if deg[u] > deg[v]:
            u, v = v, u
        sv = sets[v]
        out[e] = sum(1 for w in nbrs[u] if w in sv)
    return out


def count_triangles_exact(g: Graph) -> int:
    return sum(triangles_per_edge(g).values()) // 3


def iter_triangles(g: Graph) -> Iterator[TriangleKey]:
    """Each triangle exactly once, as a sorted triple."""
    sets = g._nbr_sets
    for u, v in g.edges:
        sv = sets[v]
        for w in g.adjacency[u]:
            if w > v and w in sv:
                yield TriangleKey(u, v, w)


def heavy_triangle_count(g: Graph, tau: float, per_edge: dict | None = None) -> int:
    """Triangles whose three edges all have T_e > tau."""
    te = triangles_per_edge(g) if per_edge is None else per_edge
    count = 0
    for t in iter_triangles(g):
        if all(te[e] > tau for e in t.edges()):
            count += 1
    return count


def light_triangle_count(g: Graph, tau: float, per_edge: dict | None = None) -> int:
    """Triangles with at least one edge of T_e <= tau."""
    te = triangles_per_edge(g) if per_edge is None else per_edge
    return sum(1 for t in iter_triangles(g) if any(te[e] <= tau for e in t.edges()))


class Degeneracy(NamedTuple):
    kappa: int
    density_bound: int  # ceil(m / (n - 1)), a lower bound on arboricity


def degeneracy(g: Graph) -> Degeneracy:
    """Min-degree peeling with a bucket queue, O(n + m)."""
    n = g.n
    if n == 0 or g.m == 0:
        return Degeneracy(0, 0)
    deg = list(g.degrees)
    maxd = max(deg)
    buckets: list[set[int]] = [set() for _ in range(maxd + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * n
    kappa = 0
    lo = 0
    for _ in range(n):
        while not buckets[lo]:
            lo += 1
        v = buckets[lo].pop()
        kappa = max(kappa, lo)
        removed[v] = True
        for w in g.adjacency[v]:
            if not removed[w]:
                d = deg[w]
                buckets[d].discard(w)
                deg[w] = d - 1
                buckets[d - 1].add(w)
        lo = max(lo - 1, 0)
    density = math.ceil(g.m / (n - 1)) if n > 1 else 0
    return Degeneracy(kappa, density)


def edge_degree_sum(g: Graph) -> int:
    """Sum over edges of min endpoint degree."""
    deg = g.degrees
    return sum(min(deg[u], deg[v]) for u, v in g.edges)


def degree_histogram(g: Graph) -> Counter:
    return Counter(g.degrees)
