"""Undirected simple graphs, contraction multigraphs and cut certificates.

Vertices are dense integer ids ``0..n-1``. Graphs are immutable; every
operation returns a new object.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when an input violates a graph precondition."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RotationMap:
    """Port labeling of a regular graph.

    ``table[x][i] == (y, j)`` means port ``i`` at ``x`` and port ``j`` at
    ``y`` name the same edge ``xy``. Ports are 0-based.
    """

    table: tuple[tuple[Edge, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.table[0]) if self.table else 0

    def __call__(self, x: int, i: int) -> Edge:
        return self.table[x][i]

    def port_of(self, x: int, y: int) -> int:
        for i, (z, _) in enumerate(self.table[x]):
            if z == y:
                return i
        raise KeyError(f"{y} is not a neighbour of {x}")

    def problems(self, g: "Graph") -> list[str]:
        """Return every way this map disagrees with ``g`` (empty when valid)."""
        out = []
        if len(self.table) != g.n:
            return [f"table covers {len(self.table)} vertices, graph has {g.n}"]
        for x in range(g.n):
            ports = self.table[x]
            if len(ports) != g.degree(x):
                out.append(f"vertex {x}: {len(ports)} ports for degree {g.degree(x)}")
                continue
            if sorted(y for y, _ in ports) != list(g.adj[x]):
                out.append(f"vertex {x}: ports do not biject onto its neighbours")
            for i, (y, j) in enumerate(ports):
                if not (0 <= y < g.n) or not (0 <= j < len(self.table[y])):
                    out.append(f"rot({x},{i}) = ({y},{j}) out of range")
                elif self.table[y][j] != (x, i):
                    out.append(f"rot(rot({x},{i})) = {self.table[y][j]} != ({x},{i})")
        return out

    def is_valid_for(self, g: "Graph") -> bool:
        return not self.problems(g)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    rotation: RotationMap | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency tuples are short; linear scan beats building sets
        return v in a

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbor_sets(self) -> list[frozenset[int]]:
        return [frozenset(a) for a in self.adj]

    def is_regular(self) -> bool:
        return self.n > 0 and len(set(self.degrees())) == 1

    def with_rotation(self, rot: RotationMap | None) -> "Graph":
        if rot is not None:
            bad = rot.problems(self)
            if bad:
                raise GraphError("rotation map inconsistent with adjacency: " + bad[0])
        return Graph(self.n, self.adj, rot, self.name)

    def renamed(self, name: str) -> "Graph":
        return Graph(self.n, self.adj, self.rotation, name)

    def __repr__(self) -> str:
        label = self.name or "Graph"
        return f"<{label} n={self.n} m={self.m}>"


def make_graph(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    *,
    strict: bool = False,
    name: str = "",
) -> Graph:
    """Build a simple graph; duplicate pairs collapse unless ``strict``."""
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        if v in nbrs[u]:
            if strict:
                raise GraphError(f"duplicate edge {(u, v)}")
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in nbrs), name=name)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(g.degrees())


def min_edge_degree(g: Graph) -> int:
    """Minimum of ``d(x) + d(y) - 2`` over all edges ``xy``."""
    deg = g.degrees()
    vals = [deg[u] + deg[v] - 2 for u, v in g.edges()]
    if not vals:
        raise GraphError("minimum edge-degree needs at least one edge")
    return min(vals)


def components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    out = []
    for r in range(g.n):
        if seen[r]:
            continue
        seen[r] = True
        comp = [r]
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``vertices`` relabelled ``0..k-1`` in sorted order.

    Returns the subgraph and the list mapping new ids back to old ones.
    """
    order = sorted(set(vertices))
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v]) for u in order for v in g.adj[u] if v in index and u < v
    ]
    return make_graph(len(order), edges), order


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    gone = {norm_edge(u, v) for u, v in edges}
    return make_graph(g.n, [e for e in g.edges() if e not in gone])


def boundary(g: Graph, side: Iterable[int]) -> list[Edge]:
    """The edge set ``[X, complement of X]`` as normalised pairs, sorted."""
    xs = set(side)
    return sorted(norm_edge(u, v) for u in xs for v in g.adj[u] if v not in xs)


def has_cut_vertex(g: Graph) -> bool:
    """Articulation-point test (iterative Tarjan lowpoint)."""
    if g.n < 3:
        return False
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(g.adj[v])))
                    advanced = True
                    break
                if v != parent:
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= disc[p]:
                    return True
        if root_children > 1:
            return True
    return False


def has_triangle(g: Graph) -> bool:
    nbrs = g.neighbor_sets()
    return any(nbrs[u] & nbrs[v] for u, v in g.edges())


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph given by integer capacities on vertex pairs."""

    n: int
    capacity: dict[Edge, int]

    def __post_init__(self):
        for (u, v), c in self.capacity.items():
            if not (0 <= u < v < self.n):
                raise GraphError(f"capacity key {(u, v)} must be an ordered in-range pair")
            if c < 1:
                raise GraphError(f"capacity of {(u, v)} must be positive, got {c}")

    def cap(self, u: int, v: int) -> int:
        return self.capacity.get(norm_edge(u, v), 0)

    def neighbors(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.n)]
        for (u, v), c in self.capacity.items():
            out[u][v] = c
            out[v][u] = c
        return out

    @classmethod
    def from_graph(cls, g: Graph) -> "MultiGraph":
        return cls(g.n, {e: 1 for e in g.edges()})


def contract(g: Graph, blocks: Sequence[Iterable[int]]) -> tuple[MultiGraph, list[int]]:
    """Merge each block into one super-vertex.

    Block ``k`` becomes vertex ``k``; vertices outside every block follow in
    increasing order. Returns the multigraph and the old-to-new vertex map.
    """
    where = [-1] * g.n
    for k, block in enumerate(blocks):
        for v in block:
            if where[v] != -1:
                raise GraphError(f"vertex {v} appears in blocks {where[v]} and {k}")
            where[v] = k
    nxt = len(blocks)
    for v in range(g.n):
        if where[v] == -1:
            where[v] = nxt
            nxt += 1
    cap: dict[Edge, int] = {}
    for u, v in g.edges():
        a, b = where[u], where[v]
        if a != b:
            key = norm_edge(a, b)
            cap[key] = cap.get(key, 0) + 1
    return MultiGraph(nxt, cap), where


class CutKind(str, Enum):
    EDGE = "edge-cut"
    RESTRICTED = "restricted-edge-cut"


@dataclass(frozen=True)
class CutCertificate:
    fragment: frozenset[int]
    cut_edges: frozenset[Edge]
    claimed_value: int
    kind: CutKind = CutKind.EDGE

    @classmethod
    def from_fragment(cls, g: Graph, fragment: Iterable[int], kind: CutKind) -> "CutCertificate":
        xs = frozenset(fragment)
        cut = frozenset(boundary(g, xs))
        return cls(xs, cut, len(cut), kind)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "value": self.claimed_value,
            "fragment": sorted(self.fragment),
            "cut_edges": [list(e) for e in sorted(self.cut_edges)],
        }


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def validate_certificate(g: Graph, cert: CutCertificate) -> CertificateCheck:
    xs = cert.fragment
    if any(not (0 <= v < g.n) for v in xs):
        return CertificateCheck(False, "fragment-out-of-range")
    if not xs or len(xs) == g.n:
        return CertificateCheck(False, "trivial-fragment")
    if frozenset(boundary(g, xs)) != cert.cut_edges:
        return CertificateCheck(False, "cut-edges-differ-from-boundary")
    if len(cert.cut_edges) != cert.claimed_value:
        return CertificateCheck(False, "value-mismatch")
    if cert.kind is CutKind.RESTRICTED:
        if len(xs) < 2 or g.n - len(xs) < 2:
            return CertificateCheck(False, "side-too-small")
        for v in range(g.n):
            inside = v in xs
            if not any((w in xs) == inside for w in g.adj[v]):
                return CertificateCheck(False, f"isolated-vertex-{v}")
    rest = remove_edges(g, cert.cut_edges)
    if len(components(rest)) < 2:
        return CertificateCheck(False, "not-disconnecting")
    return CertificateCheck(True)
