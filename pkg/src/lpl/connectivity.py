"""Exact edge-connectivity, vertex-connectivity and restricted edge-connectivity.

The restricted edge-connectivity ``lambda'`` is computed by the edge-pair
contraction scheme: for vertex-disjoint edges ``e`` and ``f`` a minimum cut
separating ``e`` from ``f`` never leaves an isolated vertex (moving one
across would shrink the cut), so ``lambda'`` is the minimum of these cut
values. Contracting ``e`` and ``f`` is done implicitly by running the flow
between the two endpoint sets.

Every cut value met is at most ``xi(G)``, so augmenting-path flows with an
early exit at the running best stay cheap.
"""

from __future__ import annotations

import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .graph import (
    CutCertificate,
    CutKind,
    Edge,
    Graph,
    GraphError,
    MultiGraph,
    components,
    is_connected,
    max_degree,
    min_degree,
    min_edge_degree,
    norm_edge,
    validate_certificate,
)

log = logging.getLogger(__name__)

# below this many flows a process pool costs more than it saves
PARALLEL_MIN_PAIRS = 2048


# -- flow engines ------------------------------------------------------------


@dataclass(frozen=True)
class CutResult:
    """Outcome of a source/sink cut computation.

    ``pruned`` means the flow reached ``prune_at`` and ``value`` is only a
    lower bound; no cut is reported then.
    """

    value: int
    source_side: frozenset[int] | None
    cut_edges: tuple[Edge, ...] = ()
    pruned: bool = False


def min_cut_between(
    g: MultiGraph, source: int, sink: int, prune_at: int | None = None
) -> CutResult:
    """Minimum ``source``-``sink`` edge cut of a capacitated multigraph."""
    if source == sink:
        raise GraphError("source and sink must differ")
    nbrs = g.neighbors()
    flow: dict[tuple[int, int], int] = {}
    value = 0
    limit = prune_at if prune_at is not None else float("inf")
    while True:
        if value >= limit:
            return CutResult(value, None, (), True)
        par = {source: source}
        queue = deque([source])
        while queue and sink not in par:
            u = queue.popleft()
            for v, c in nbrs[u].items():
                if v not in par and c - flow.get((u, v), 0) > 0:
                    par[v] = u
                    queue.append(v)
        if sink not in par:
            side = frozenset(par)
            cut = tuple(sorted(e for e in g.capacity if (e[0] in side) != (e[1] in side)))
            return CutResult(value, side, cut)
        path = []
        v = sink
        while v != source:
            path.append((par[v], v))
            v = par[v]
        push = min(nbrs[u][v] - flow.get((u, v), 0) for u, v in path)
        push = min(push, limit - value)
        for u, v in path:
            flow[(u, v)] = flow.get((u, v), 0) + push
            flow[(v, u)] = flow.get((v, u), 0) - push
        value += push


def unit_set_flow(
    adj: Sequence[Sequence[int]],
    sources: Sequence[int],
    sinks: Sequence[int],
    cap: int,
    *,
    sink_side: bool = False,
) -> tuple[int, frozenset[int] | None, frozenset[int] | None]:
    """Max flow between two vertex sets of a unit-capacity simple graph.

    Equivalent to contracting each set and running a max-flow between the two
    super-vertices. Stops once the flow reaches ``cap`` and returns
    ``(cap, None, None)``. Otherwise returns the value, the smallest source
    side of a minimum cut and, when asked, the smallest sink side.
    """
    n = len(adj)
    flow: dict[int, int] = {}
    is_src = bytearray(n)
    is_snk = bytearray(n)
    for s in sources:
        is_src[s] = 1
    for t in sinks:
        is_snk[t] = 1
    value = 0
    while value < cap:
        par = [-1] * n
        for s in sources:
            par[s] = s
        queue = list(sources)
        found = -1
        for u in queue:
            base = u * n
            for v in adj[u]:
                if par[v] == -1 and flow.get(base + v, 0) < 1:
                    par[v] = u
                    if is_snk[v]:
                        found = v
                        break
                    queue.append(v)
            if found >= 0:
                break
        if found < 0:
            src_side = frozenset(queue)
            snk_side = _residual_sink_side(adj, flow, sinks) if sink_side else None
            return value, src_side, snk_side
        v = found
        while not is_src[v]:
            u = par[v]
            k = u * n + v
            flow[k] = flow.get(k, 0) + 1
            k = v * n + u
            flow[k] = flow.get(k, 0) - 1
            v = u
        value += 1
    return value, None, None


def _residual_sink_side(adj, flow, sinks) -> frozenset[int]:
    n = len(adj)
    seen = set(sinks)
    queue = list(sinks)
    for w in queue:
        for u in adj[w]:
            if u not in seen and flow.get(u * n + w, 0) < 1:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def _local_vertex_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Internally disjoint ``s``-``t`` paths (``s``, ``t`` non-adjacent), capped."""
    # node 2v is v_in, 2v+1 is v_out; every arc has capacity 1
    n = g.n
    out: list[list[int]] = [[] for _ in range(2 * n)]
    inc: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b):
        out[a].append(b)
        inc[b].append(a)

    for v in range(n):
        arc(2 * v, 2 * v + 1)
        for w in g.adj[v]:
            arc(2 * v + 1, 2 * w)
    src, snk = 2 * s + 1, 2 * t
    used: set[tuple[int, int]] = set()
    value = 0
    while value < cap:
        par = {src: None}
        queue = deque([src])
        while queue and snk not in par:
            u = queue.popleft()
            for v in out[u]:
                if v not in par and (u, v) not in used:
                    par[v] = (u, v, True)
                    queue.append(v)
            for v in inc[u]:
                if v not in par and (v, u) in used:
                    par[v] = (v, u, False)
                    queue.append(v)
        if snk not in par:
            return value
        x = snk
        while par[x] is not None:
            a, b, forward = par[x]
            if forward:
                used.add((a, b))
                x = a
            else:
                used.discard((a, b))
                x = b
        value += 1
    return value


# -- lambda and kappa ----------------------------------------------------------


def edge_connectivity(g: Graph) -> tuple[int, CutCertificate]:
    """``lambda(G)`` with a certificate whose fragment is one side of a minimum cut.

    Vertices are merged into the source one at a time: if ``v_i`` is the
    first vertex outside some minimum cut side containing ``v_0``, the flow
    from ``{v_0..v_(i-1)}`` to ``v_i`` finds that cut.
    """
    if g.n < 2:
        raise GraphError("edge-connectivity needs at least two vertices")
    comps = components(g)
    if len(comps) > 1:
        return 0, CutCertificate.from_fragment(g, comps[0], CutKind.EDGE)
    deg = g.degrees()
    v_min = deg.index(min(deg))
    best = deg[v_min]
    frag: frozenset[int] = frozenset({v_min})
    for i in range(1, g.n):
        # flow runs from the single new vertex towards the merged set
        value, side, _ = unit_set_flow(g.adj, [i], list(range(i)), best)
        if value < best:
            best, frag = value, side
    return best, CutCertificate.from_fragment(g, frag, CutKind.EDGE)


def vertex_connectivity(g: Graph) -> int:
    """``kappa(G)``; ``n-1`` for complete graphs.

    Even's scheme: some vertex among the first ``kappa+1`` lies outside a
    minimum separator, and pairing it with every later non-neighbour finds it.
    """
    if not is_connected(g):
        return 0
    n = g.n
    if all(g.degree(v) == n - 1 for v in range(n)):
        return n - 1
    best = min_degree(g)
    i = 0
    while i <= best and i < n:
        nbrs = set(g.adj[i])
        for j in range(i + 1, n):
            if j not in nbrs:
                best = min(best, _local_vertex_connectivity(g, i, j, best))
        i += 1
    return best


# -- lambda' ---------------------------------------------------------------------


@dataclass
class LambdaPrimeOptions:
    """Search knobs for ``lambda'``.

    ``use_vertex_transitivity`` only narrows the atom search (to fragments
    through the base vertex); the value search always fixes one contracted
    edge at the base vertex, which is exact for every graph because both
    sides of a restricted cut are restricted-cut sides.
    ``exhaustive_pairs`` switches the value search back to all edge pairs.
    ``backend="scipy"`` runs the value search on scipy's compiled max-flow;
    the certificate is then recomputed for the winning pair in Python.
    """

    use_vertex_transitivity: bool = False
    prune_at: int | None = None
    brute_force_threshold: int = 16
    exhaustive_pairs: bool = False
    base_vertex: int = 0
    jobs: int = 1
    backend: str = "python"
    progress: Callable[[int, int, int], None] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.brute_force_threshold < 1 or self.jobs < 1:
            raise ValueError("thresholds and job counts must be positive")
        if self.prune_at is not None and self.prune_at < 1:
            raise ValueError("prune_at must be positive")
        if self.backend not in ("python", "scipy"):
            raise ValueError(f"unknown flow backend {self.backend!r}")


def is_star(g: Graph) -> bool:
    deg = g.degrees()
    return g.n >= 2 and g.m == g.n - 1 and max(deg) == g.n - 1


def lambda_prime_defined(g: Graph) -> bool:
    return g.n >= 4 and is_connected(g) and not is_star(g)


def is_restricted_side(g: Graph, side: Iterable[int]) -> bool:
    xs = set(side)
    if len(xs) < 2 or g.n - len(xs) < 2:
        return False
    return all(any((w in xs) == (v in xs) for w in g.adj[v]) for v in range(g.n))


def _pairs(g: Graph, opts: LambdaPrimeOptions, for_atoms: bool) -> list[tuple[Edge, Edge]]:
    edges = g.edges()
    if opts.exhaustive_pairs or (for_atoms and not opts.use_vertex_transitivity):
        return [
            (e, f)
            for i, e in enumerate(edges)
            for f in edges[i + 1 :]
            if e[0] not in f and e[1] not in f
        ]
    v0 = opts.base_vertex
    first = [norm_edge(v0, w) for w in g.adj[v0]]
    return [(e, f) for e in first for f in edges if e[0] not in f and e[1] not in f]


def _edge_isolation_bound(g: Graph) -> tuple[int, frozenset[int] | None]:
    """Smallest valid cut of the form ``[{x, y}, rest]``; seeds the pruning bound."""
    deg = g.degrees()
    for u, v in sorted(g.edges(), key=lambda e: (deg[e[0]] + deg[e[1]], e)):
        if is_restricted_side(g, (u, v)):
            return deg[u] + deg[v] - 2, frozenset((u, v))
    return g.m + 1, None


def _scan_pairs(adj, pairs, best, frag, progress=None):
    total = len(pairs)
    for k, (e, f) in enumerate(pairs):
        value, side, _ = unit_set_flow(adj, e, f, best)
        if value < best:
            best, frag = value, side
        if progress is not None and k % 256 == 0:
            progress(k, total, best)
    return best, frag


class _ScipyPairFlow:
    """Edge-pair flows on one prebuilt CSR network with a super source and sink.

    Only the four terminal arcs change between pairs, so each flow costs one
    copy of the capacity array plus scipy's Dinic run.
    """

    def __init__(self, g: Graph):
        from scipy.sparse import csr_matrix

        n = g.n
        self.S, self.T = n, n + 1
        rows = [u for u in range(n) for _ in g.adj[u]] + [self.S] * n + list(range(n))
        cols = [v for u in range(n) for v in g.adj[u]] + list(range(n)) + [self.T] * n
        m = csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n + 2, n + 2))
        m.sort_indices()
        self.matrix = m
        lo = m.indptr[self.S]
        self.src_pos = lo + np.arange(n)
        # row v ends with its arc to T because T has the largest column index
        self.snk_pos = m.indptr[1 : n + 1] - 1
        self.base = m.data.copy()
        self.base[self.src_pos] = 0
        self.base[self.snk_pos] = 0
        self.big = 2 * max(g.degrees()) + 2

    def value(self, e: Edge, f: Edge) -> int:
        from scipy.sparse.csgraph import maximum_flow

        data = self.base.copy()
        data[self.src_pos[list(e)]] = self.big
        data[self.snk_pos[list(f)]] = self.big
        self.matrix.data = data
        return int(maximum_flow(self.matrix, self.S, self.T, method="dinic").flow_value)


def _scan_pairs_scipy(g: Graph, pairs, best, progress=None):
    engine = _ScipyPairFlow(g)
    winner = None
    for k, (e, f) in enumerate(pairs):
        value = engine.value(e, f)
        if value < best:
            best, winner = value, (e, f)
        if progress is not None and k % 256 == 0:
            progress(k, len(pairs), best)
    return best, winner


def _scan_chunk(args):
    adj, pairs, best, frag = args
    return _scan_pairs(adj, pairs, best, frag)


@dataclass(frozen=True)
class LambdaPrimeResult:
    value: int | None
    certificate: CutCertificate | None
    flows: int = 0

    @property
    def defined(self) -> bool:
        return self.value is not None


def restricted_edge_connectivity(
    g: Graph, opts: LambdaPrimeOptions | None = None
) -> LambdaPrimeResult:
    """Exact ``lambda'(G)`` with a restricted-cut certificate.

    Returns ``value=None`` when ``lambda'`` is undefined (disconnected graphs,
    fewer than four vertices, stars).
    """
    opts = opts or LambdaPrimeOptions()
    if not lambda_prime_defined(g):
        return LambdaPrimeResult(None, None)
    best, frag = _edge_isolation_bound(g)
    if opts.prune_at is not None and opts.prune_at < best:
        best, frag = opts.prune_at, None
    pairs = _pairs(g, opts, for_atoms=False)
    adj = [list(a) for a in g.adj]
    if opts.backend == "scipy":
        value, winner = _scan_pairs_scipy(g, pairs, best, opts.progress)
        if winner is not None:
            best, frag, _ = unit_set_flow(adj, winner[0], winner[1], value + 1)
    elif opts.jobs > 1 and len(pairs) > PARALLEL_MIN_PAIRS:
        chunks = [pairs[i :: opts.jobs] for i in range(opts.jobs)]
        with ProcessPoolExecutor(opts.jobs) as pool:
            results = list(pool.map(_scan_chunk, [(adj, c, best, frag) for c in chunks]))
        for value, side in results:
            if value < best or (value == best and frag is None):
                best, frag = value, side
    else:
        best, frag = _scan_pairs(adj, pairs, best, frag, opts.progress)
    if frag is None:
        # only reachable when prune_at cut the search below the true value
        return LambdaPrimeResult(best, None, len(pairs))
    cert = CutCertificate.from_fragment(g, frag, CutKind.RESTRICTED)
    return LambdaPrimeResult(best, cert, len(pairs))


def lambda_prime_atom(g: Graph, opts: LambdaPrimeOptions | None = None) -> frozenset[int]:
    """A minimum-cardinality ``lambda'``-fragment (lexicographically first among ties)."""
    opts = opts or LambdaPrimeOptions()
    res = restricted_edge_connectivity(g, opts)
    if not res.defined:
        raise GraphError("lambda' is undefined for this graph")
    target = res.value
    adj = [list(a) for a in g.adj]
    best_key = (len(res.certificate.fragment), sorted(res.certificate.fragment))
    best_key = min(best_key, (g.n - best_key[0], sorted(set(range(g.n)) - res.certificate.fragment)))
    for e, f in _pairs(g, opts, for_atoms=True):
        value, src, snk = unit_set_flow(adj, e, f, target + 1, sink_side=True)
        if value != target:
            continue
        for side in (src, snk):
            side = _connected_part(g, side, e if side is src else f)
            key = (len(side), sorted(side))
            if key < best_key and is_restricted_side(g, side):
                best_key = key
    return frozenset(best_key[1])


def _connected_part(g: Graph, side: frozenset[int], edge: Edge) -> frozenset[int]:
    """Component of ``G[side]`` holding ``edge``; the side itself when connected."""
    seen = {edge[0]}
    queue = [edge[0]]
    for u in queue:
        for v in g.adj[u]:
            if v in side and v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


# -- brute-force oracle ----------------------------------------------------------


def restricted_cut_table(g: Graph, threshold: int = 16) -> tuple[int | None, list[int]]:
    """Evaluate the definition over every vertex subset.

    Returns ``lambda'`` (``None`` when no restricted cut exists) and every
    minimising side ``X`` as a bitmask (both ``X`` and its complement).
    """
    n = g.n
    if n > threshold:
        raise GraphError(f"brute force limited to {threshold} vertices, graph has {n}")
    if n < 4 or n > 62:
        return None, []
    nb = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    best = None
    winners: list[int] = []
    chunk = 1 << 18
    total = 1 << (n - 1)
    for start in range(0, total, chunk):
        # vertex 0 always on the X side; complements cover the rest
        xs = (np.arange(start, min(start + chunk, total), dtype=np.int64) << 1) | 1
        comp = ~xs & full
        ok = xs != full
        cut = np.zeros(len(xs), dtype=np.int64)
        for v in range(n):
            inside = ((xs >> v) & 1).astype(bool)
            has_in = (xs & nb[v]) != 0
            has_out = (comp & nb[v]) != 0
            ok &= np.where(inside, has_in, has_out)
            cut += np.where(inside, np.bitwise_count(comp & nb[v]), 0)
        if not ok.any():
            continue
        low = int(cut[ok].min())
        if best is None or low < best:
            best, winners = low, []
        if low == best:
            winners.extend(int(x) for x in xs[ok & (cut == low)])
    winners = sorted(set(winners) | {full ^ x for x in winners})
    return best, winners


def restricted_edge_connectivity_bruteforce(g: Graph, threshold: int = 16) -> int | None:
    if not is_connected(g):
        raise GraphError("brute force expects a connected graph")
    return restricted_cut_table(g, threshold)[0]


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


# -- reports -------------------------------------------------------------------


@dataclass
class ConnectivityReport:
    n: int
    m: int
    delta: int
    Delta: int
    xi: int
    kappa: int
    lam: int
    lam_certificate: CutCertificate
    lam_prime: int | None
    lam_prime_certificate: CutCertificate | None
    super_lambda: bool | None
    lambda_prime_optimal: bool | None

    def violations(self, g: Graph | None = None) -> list[str]:
        out = []
        if not self.kappa <= self.lam <= self.delta:
            out.append(f"kappa <= lambda <= delta fails: {self.kappa}, {self.lam}, {self.delta}")
        if self.lam_prime is not None:
            if not self.lam <= self.lam_prime <= self.xi:
                out.append(f"lambda <= lambda' <= xi fails: {self.lam}, {self.lam_prime}, {self.xi}")
            if self.super_lambda != (self.lam_prime > self.lam):
                out.append("super-lambda flag disagrees with lambda' > lambda")
            if self.lambda_prime_optimal != (self.lam_prime == self.xi):
                out.append("lambda'-optimal flag disagrees with lambda' == xi")
        if g is not None:
            for cert in (self.lam_certificate, self.lam_prime_certificate):
                if cert is not None:
                    chk = validate_certificate(g, cert)
                    if not chk:
                        out.append(f"{cert.kind.value} certificate invalid: {chk.reason}")
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "max_degree": self.Delta,
            "xi": self.xi,
            "kappa": self.kappa,
            "lambda": self.lam,
            "lambda_certificate": self.lam_certificate.to_json(),
            "lambda_prime": self.lam_prime if self.lam_prime is not None else "undefined",
            "lambda_prime_certificate": (
                self.lam_prime_certificate.to_json() if self.lam_prime_certificate else None
            ),
            "super_lambda": self.super_lambda,
            "lambda_prime_optimal": self.lambda_prime_optimal,
        }


def classify(g: Graph, opts: LambdaPrimeOptions | None = None) -> ConnectivityReport:
    if not is_connected(g):
        raise GraphError("classify expects a connected graph")
    lam, lam_cert = edge_connectivity(g)
    lp = restricted_edge_connectivity(g, opts)
    xi = min_edge_degree(g) if g.m else 0
    return ConnectivityReport(
        n=g.n,
        m=g.m,
        delta=min_degree(g),
        Delta=max_degree(g),
        xi=xi,
        kappa=vertex_connectivity(g),
        lam=lam,
        lam_certificate=lam_cert,
        lam_prime=lp.value,
        lam_prime_certificate=lp.certificate,
        super_lambda=None if lp.value is None else lp.value > lam,
        lambda_prime_optimal=None if lp.value is None else lp.value == xi,
    )
