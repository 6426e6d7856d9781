"""Seeded test-graph generators.

Generator specs are strings of the form ``name:key=value,...``, e.g.
``forest_union:n=100,alpha=3`` or ``planted:n=2000,alpha=4,t=20000``.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import EdgeRef, Graph
from .rng import make_stream


class InfeasibleSpec(ValueError):
    pass


def _gen(rng) -> np.random.Generator:
    return make_stream(rng).generator


def clique(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def erdos_renyi(n: int, p: float, rng=None) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise InfeasibleSpec(f"edge probability {p} outside [0, 1]")
    gen = _gen(rng)
    mask = np.triu(gen.random((n, n)) < p, k=1)
    us, vs = np.nonzero(mask)
    return Graph(n, zip(us.tolist(), vs.tolist()))


def _forest_edges(n: int, alpha: int, gen: np.random.Generator) -> set[EdgeRef]:
    edges: set[EdgeRef] = set()
    if n < 2:
        return edges
    for _ in range(alpha):
        perm = gen.permutation(n)
        # random recursive tree over a random vertex order
        parents = (gen.random(n - 1) * np.arange(1, n)).astype(np.int64)
        for i, j in enumerate(parents.tolist(), start=1):
            edges.add(EdgeRef.of(int(perm[i]), int(perm[j])))
    return edges


def forest_union(n: int, alpha: int, rng=None) -> Graph:
    """Union of ``alpha`` random spanning trees; repeated edges are dropped,
    so the arboricity is at most ``alpha``."""
    if alpha < 0:
        raise InfeasibleSpec("alpha must be non-negative")
    return Graph(n, _forest_edges(n, alpha, _gen(rng)))


def planted(n: int, alpha: int, t_target: int, rng=None) -> tuple[Graph, int]:
    """forest_union(n, alpha) plus vertex-disjoint planted cliques.

    Cliques have the smallest size q >= 3 for which disjoint copies fit in
    ``n`` vertices and reach the target (q = 3 means planted triangles).
    Edges are added one at a time while the exact count is maintained, and
    planting stops as soon as the count reaches ``t_target``.  Returns the
    graph and its exact triangle count.
    """
    if t_target < 0:
        raise InfeasibleSpec("negative triangle target")
    if n >= 3 and t_target > math.comb(n, 3):
        raise InfeasibleSpec(f"{t_target} triangles exceed C({n}, 3)")
    gen = _gen(rng)
    base = _forest_edges(n, alpha, gen)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in base:
        nbrs[u].add(v)
        nbrs[v].add(u)
    total = sum(len(nbrs[u] & nbrs[v]) for u, v in base) // 3
    if total >= t_target:
        return Graph(n, base), total

    need = t_target - total
    q = 3
    while q <= n and (n // q) * math.comb(q, 3) < need:
        q += 1
    if q > n:
        raise InfeasibleSpec(f"cannot plant {t_target} triangles on {n} vertices")

    edges = set(base)
    perm = gen.permutation(n).tolist()
    for g0 in range(0, (n // q) * q, q):
        group = perm[g0:g0 + q]
        for i in range(q):
            for j in range(i + 1, q):
                a, b = group[i], group[j]
                if b in nbrs[a]:
                    continue
                total += len(nbrs[a] & nbrs[b])
                nbrs[a].add(b)
                nbrs[b].add(a)
                edges.add(EdgeRef.of(a, b))
                if total >= t_target:
                    return Graph(n, edges), total
    # unreachable given the choice of q, kept as a guard
    raise InfeasibleSpec(f"planting stopped at {total} < {t_target} triangles")


def clique_family(n: int, q: int, cliques: int, m: int, rng=None) -> Graph:
    """``cliques`` disjoint K_q plus bipartite (triangle-free) padding so the
    graph has exactly ``m`` edges.  T = cliques * C(q, 3) exactly.

    Holding n, q and m fixed while doubling ``cliques`` doubles T at fixed m
    and bounded degeneracy, which is what the query-scaling benchmark needs.
    """
    used = cliques * q
    clique_edges = cliques * math.comb(q, 2)
    pad = m - clique_edges
    pool = n - used
    half = pool // 2
    if pad < 0 or used > n:
        raise InfeasibleSpec("cliques do not fit in n vertices / m edges")
    if pad > half * (pool - half):
        raise InfeasibleSpec("not enough spare vertices for the padding edges")
    gen = _gen(rng)
    edges = set()
    for c in range(cliques):
        base = c * q
        for i in range(q):
            for j in range(i + 1, q):
                edges.add(EdgeRef(base + i, base + j))
    left = np.arange(used, used + half)
    right = np.arange(used + half, n)
    while len(edges) < m:
        k = m - len(edges)
        ls = gen.choice(left, size=k)
        rs = gen.choice(right, size=k)
        for a, b in zip(ls.tolist(), rs.tolist()):
            if len(edges) == m:
                break
            edges.add(EdgeRef(a, b))
    return Graph(n, edges)


def parse_spec(spec: str) -> tuple[str, dict[str, str]]:
    name, _, rest = spec.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            k, sep, v = item.partition("=")
            if not sep:
                raise ValueError(f"bad generator parameter {item!r} in {spec!r}")
            params[k.strip()] = v.strip()
    return name.strip(), params


def gen_graph(spec: str, seed=None) -> Graph:
    """Build a graph from a generator spec string.

    Supported: ``clique:n``, ``path:n``, ``er:n,p``, ``forest_union:n,alpha``,
    ``planted:n,alpha,t``, ``cliques:n,q,count,m`` and
    ``gadget:M,alpha,k,gamma,dist`` (explicit lower-bound gadget).
    """
    name, p = parse_spec(spec)
    try:
        if name == "clique":
            return clique(int(p["n"]))
        if name == "path":
            return path(int(p["n"]))
        if name == "er":
            return erdos_renyi(int(p["n"]), float(p["p"]), seed)
        if name == "forest_union":
            return forest_union(int(p["n"]), int(p["alpha"]), seed)
        if name == "planted":
            return planted(int(p["n"]), int(p["alpha"]), int(p["t"]), seed)[0]
        if name == "cliques":
            return clique_family(int(p["n"]), int(p["q"]), int(p["count"]), int(p["m"]), seed)
        if name == "gadget":
            from .gadget import build_explicit_gadget, sample_ptp

            inst = sample_ptp(int(p["M"]), float(p["k"]), float(p["gamma"]), p.get("dist", "D0"), seed)
            return build_explicit_gadget(inst.x, int(p["alpha"]))
    except KeyError as exc:
        raise ValueError(f"generator {name!r} needs parameter {exc.args[0]!r}") from None
    raise ValueError(f"unknown generator {name!r}")
