"""Query access: Degree, Neighbour, Edge and RandomEdge with accounting.

Estimators see a graph only through a :class:`QueryBackend`.  Each public
query bumps exactly one counter by one.  ``bit_reads`` is reserved for
backends that simulate the graph from an underlying bit string.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields

from .graph import EdgeRef, Graph


class QueryError(ValueError):
    pass


@dataclass
class QueryCounter:
    degree: int = 0
    neighbour: int = 0
    edge: int = 0
    random_edge: int = 0
    bit_reads: int = 0

    @property
    def total(self) -> int:
        """Graph queries of all four kinds (bit reads are not graph queries)."""
        return self.degree + self.neighbour + self.edge + self.random_edge

    def snapshot(self) -> QueryCounter:
        return QueryCounter(**asdict(self))

    def __sub__(self, other: QueryCounter) -> QueryCounter:
        return QueryCounter(**{f.name: getattr(self, f.name) - getattr(other, f.name) for f in fields(self)})

    def __add__(self, other: QueryCounter) -> QueryCounter:
        return QueryCounter(**{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)})

    def to_json(self) -> dict:
        return asdict(self)


class QueryBackend:
    """Four-query access contract.

    Subclasses implement the ``_``-prefixed primitives; the public methods
    validate arguments and do the accounting.  ``neighbour`` is 1-based.
    """

    n: int
    m: int

    def __init__(self):
        self.counter = QueryCounter()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise QueryError(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        self.counter.degree += 1
        return self._degree(v)

    def neighbour(self, v: int, i: int) -> int:
        self._check_vertex(v)
        if not 1 <= i <= self._degree(v):
            raise QueryError(f"neighbour index {i} out of range for vertex {v}")
        self.counter.neighbour += 1
        return self._neighbour(v, i)

    def edge(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise QueryError("Edge query on identical endpoints")
        self.counter.edge += 1
        return self._edge(u, v)

    def random_edge(self, rng) -> EdgeRef:
        if self.m == 0:
            raise QueryError("RandomEdge on a graph without edges")
        self.counter.random_edge += 1
        return self._random_edge(rng)

    def _degree(self, v: int) -> int:
        raise NotImplementedError

    def _neighbour(self, v: int, i: int) -> int:
        raise NotImplementedError

    def _edge(self, u: int, v: int) -> int:
        raise NotImplementedError

    def _random_edge(self, rng) -> EdgeRef:
        raise NotImplementedError


class GraphBackend(QueryBackend):
    """Backend over a materialized :class:`Graph`; neighbours ascending by id."""

    def __init__(self, graph: Graph):
        super().__init__()
        self.graph = graph
        self.n = graph.n
        self.m = graph.m
        self._adj = graph.adjacency
        self._deg = graph.degrees
        self._sets = graph._nbr_sets
        self._edges = graph.edges

    # The hot paths are inlined rather than routed through the validating
    # base-class wrappers; behaviour and accounting are identical.
    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise QueryError(f"vertex {v} out of range [0, {self.n})")
        self.counter.degree += 1
        return self._deg[v]

    def neighbour(self, v: int, i: int) -> int:
        if not 0 <= v < self.n:
            raise QueryError(f"vertex {v} out of range [0, {self.n})")
        if not 1 <= i <= self._deg[v]:
            raise QueryError(f"neighbour index {i} out of range for vertex {v}")
        self.counter.neighbour += 1
        return self._adj[v][i - 1]

    def edge(self, u: int, v: int) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise QueryError(f"vertex pair ({u}, {v}) out of range")
        if u == v:
            raise QueryError("Edge query on identical endpoints")
        self.counter.edge += 1
        return 1 if v in self._sets[u] else 0

    def _degree(self, v):
        return self._deg[v]

    def _neighbour(self, v, i):
        return self._adj[v][i - 1]

    def _edge(self, u, v):
        return 1 if v in self._sets[u] else 0

    def _random_edge(self, rng) -> EdgeRef:
        return self._edges[rng.index(self.m)]
