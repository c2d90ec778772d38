"""Replacement products ``G1 (R) G2`` and rotation-map strategies.

Product vertex ``(x, i)`` has id ``x * d1 + i`` where ``d1`` is the degree
of ``G1`` (equivalently ``|V(G2)|``). Port ``i`` at ``x`` is wired to vertex
``i`` of the copy of ``G2`` sitting at ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .families import circulant_steps
from .graph import Graph, GraphError, RotationMap, make_graph
from .groups import (
    Action,
    CayleySpec,
    Group,
    semidirect_connection_set,
    cayley_graph,
)

STRATEGIES = ("sorted-neighbors", "hypercube-dims", "circulant-gens")


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[frozenset[int], ...]

    def block_of(self, v: int) -> int:
        return v // len(self.blocks[0])


def default_rotation_map(g: Graph, strategy: str = "sorted-neighbors") -> RotationMap:
    if not g.is_regular():
        raise GraphError("rotation maps are only defined here for regular graphs")
    if strategy == "sorted-neighbors":
        table = tuple(
            tuple((y, g.adj[y].index(x)) for y in g.adj[x]) for x in range(g.n)
        )
        return RotationMap(table)
    if strategy == "hypercube-dims":
        d = g.degree(0)
        if g.n != 1 << d or any(
            g.adj[v] != tuple(sorted(v ^ (1 << i) for i in range(d))) for v in range(g.n)
        ):
            raise GraphError("hypercube-dims needs a hypercube in canonical numbering")
        return RotationMap(tuple(tuple((v ^ (1 << i), i) for i in range(d)) for v in range(g.n)))
    if strategy == "circulant-gens":
        n = g.n
        gens = sorted({min(v, n - v) for v in g.adj[0]})
        steps = circulant_steps(n, gens)
        if any(g.adj[x] != tuple(sorted((x + st) % n for st in steps)) for x in range(n)):
            raise GraphError("circulant-gens needs a circulant graph in canonical numbering")
        port = {st: p for p, st in enumerate(steps)}
        return RotationMap(
            tuple(tuple(((x + st) % n, port[-st % n]) for st in steps) for x in range(n))
        )
    raise GraphError(f"unknown rotation strategy {strategy!r}; expected one of {STRATEGIES}")


def _check_factors(g1: Graph, rot: RotationMap, g2: Graph) -> int:
    if not g1.is_regular():
        raise GraphError("G1 must be regular")
    d1 = g1.degree(0)
    if g2.n != d1:
        raise GraphError(f"G2 must have exactly deg(G1) = {d1} vertices, has {g2.n}")
    if g2.n and not g2.is_regular():
        raise GraphError("G2 must be regular")
    bad = rot.problems(g1)
    if bad:
        raise GraphError("rotation map invalid for G1: " + bad[0])
    return d1


def replacement_product(g1: Graph, rot: RotationMap, g2: Graph) -> tuple[Graph, BlockPartition]:
    d1 = _check_factors(g1, rot, g2)
    edges = []
    for x in range(g1.n):
        base = x * d1
        edges.extend((base + i, base + j) for i, j in g2.edges())
        for i, (y, j) in enumerate(rot.table[x]):
            if x < y:
                edges.append((base + i, y * d1 + j))
    g = make_graph(g1.n * d1, edges, name=f"{g1.name or 'G1'}(R){g2.name or 'G2'}")
    blocks = tuple(frozenset(range(x * d1, (x + 1) * d1)) for x in range(g1.n))
    return g, BlockPartition(blocks)


def cross_edge_count(g1: Graph, rot: RotationMap, g2: Graph) -> int:
    g, part = replacement_product(g1, rot, g2)
    d1 = g1.degree(0)
    return sum(1 for u, v in g.edges() if u // d1 != v // d1)


def ccc(n: int) -> Graph:
    """Cube-connected cycles ``Q_n (R) C_n`` with the bit-flip rotation map."""
    from .families import cycle, hypercube

    q = hypercube(n)
    g, _ = replacement_product(q, q.rotation, cycle(n))
    return g.renamed(f"CCC{n}")


def inflation(g: Graph, rot: RotationMap | None = None) -> Graph:
    """``G (R) K_d`` for a ``d``-regular ``G``."""
    from .families import complete

    rot = rot or g.rotation or default_rotation_map(g)
    out, _ = replacement_product(g, rot, complete(g.degree(0)))
    return out


@dataclass
class CorrespondenceResult:
    equal: bool
    cayley: Graph
    product: Graph
    witness: tuple | None = None

    def __bool__(self):
        return self.equal


def induced_rotation(A: Group, act: Action, x: int, n_ports: int) -> RotationMap:
    """``rot(y, i) = (y * phi_i(x), i)`` on ``C_A(S_A)``; ports are ``B``'s elements."""
    table = []
    for y in A.elements():
        row = []
        for i in range(n_ports):
            row.append((A.mul(y, act.apply(i, x)), i))
        table.append(tuple(row))
    return RotationMap(tuple(table))


def cayley_replacement_correspondence(
    A: Group, S_A: Iterable[int], B: Group, S_B: Iterable[int], act: Action, x: int
) -> CorrespondenceResult:
    """Compare ``C_{A x| B}(S)`` with ``C_A(S_A) (R) C_B(S_B)`` edge for edge."""
    S_A, S_B = frozenset(S_A), frozenset(S_B)
    spec, _ = semidirect_connection_set(A, S_A, B, S_B, act, x)
    cay = cayley_graph(spec)
    ga = cayley_graph(CayleySpec(A, S_A))
    gb = cayley_graph(CayleySpec(B, S_B))
    rot = induced_rotation(A, act, x, B.order)
    bad = rot.problems(ga)
    if bad:
        raise GraphError("induced rotation map is not a valid rotation map: " + bad[0])
    prod, _ = replacement_product(ga, rot, gb)
    e1, e2 = set(cay.edges()), set(prod.edges())
    witness = None
    if e1 != e2:
        diff = sorted(e1 ^ e2)[0]
        witness = (diff, "cayley-only" if diff in e1 else "product-only")
    return CorrespondenceResult(e1 == e2, cay, prod, witness)
