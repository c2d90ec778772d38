"""Canonical graph families.

Numbering conventions (stable across releases, golden tests rely on them):

* ``circulant(n, S)``: vertex ``i`` is the residue ``i``. The attached
  rotation map gives port ``2t`` to step ``+s_{t+1}`` and ``2t+1`` to
  ``-s_{t+1}`` (sorted generators); a generator equal to ``n/2`` gets a
  single port, so later ports shift down by one.
* ``hypercube(n)``: vertex id is the integer whose bit ``p`` is position
  ``p+1`` of the binary string; port ``i`` flips bit ``i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, GraphError, RotationMap, make_graph


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    gens: tuple[int, ...] = ()
    degree: int = 0
    seed: int = 0
    extra: dict = field(default_factory=dict, compare=False)

    def build(self) -> Graph:
        if self.kind == "circulant":
            return circulant(self.n, self.gens)
        if self.kind == "hypercube":
            return hypercube(self.n)
        if self.kind == "complete":
            return complete(self.n)
        if self.kind == "cycle":
            return cycle(self.n)
        if self.kind == "star":
            return star(self.n)
        if self.kind == "random_regular":
            return random_regular(self.n, self.degree, self.seed)
        raise GraphError(f"unknown family {self.kind!r}")


def circulant_steps(n: int, gens: Iterable[int]) -> list[int]:
    """Signed steps in port order, as residues mod ``n``."""
    steps = []
    for s in sorted(set(gens)):
        steps.append(s % n)
        if 2 * s != n:
            steps.append(-s % n)
    return steps


def circulant(n: int, gens: Iterable[int]) -> Graph:
    gens = sorted(set(int(s) for s in gens))
    if n < 3:
        raise GraphError(f"circulant needs n >= 3, got {n}")
    if not gens:
        raise GraphError("circulant needs a nonempty generator set")
    bad = [s for s in gens if not 1 <= s <= n // 2]
    if bad:
        raise GraphError(f"generators {bad} outside 1..{n // 2}")
    steps = circulant_steps(n, gens)
    port = {st: p for p, st in enumerate(steps)}
    edges = [(i, (i + st) % n) for i in range(n) for st in steps]
    g = make_graph(n, edges, name=f"G({n};±{{{','.join(map(str, gens))}}})")
    table = tuple(
        tuple(((x + st) % n, port[-st % n]) for st in steps) for x in range(n)
    )
    return g.with_rotation(RotationMap(table))


def hypercube(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"hypercube needs n >= 1, got {n}")
    size = 1 << n
    edges = [(v, v ^ (1 << i)) for v in range(size) for i in range(n)]
    g = make_graph(size, edges, name=f"Q{n}")
    table = tuple(tuple((v ^ (1 << i), i) for i in range(n)) for v in range(size))
    return g.with_rotation(RotationMap(table))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)], name=f"K{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star(n: int) -> Graph:
    """``K_{1,n-1}``: centre 0 joined to ``1..n-1``."""
    if n < 2:
        raise GraphError(f"star needs n >= 2 vertices, got {n}")
    return make_graph(n, [(0, i) for i in range(1, n)], name=f"K1,{n - 1}")


def random_regular(n: int, d: int, seed: int, *, max_restarts: int = 2000) -> Graph:
    """Simple ``d``-regular graph from the pairing model.

    Points are matched one pair at a time, each pick uniform among pairs that
    keep the graph simple; a dead end restarts the whole pairing.
    """
    if n < 1 or d < 0 or d >= n:
        raise GraphError(f"random_regular needs 0 <= d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise GraphError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    for _ in range(max_restarts):
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            return make_graph(n, edges, strict=True, name=f"RR({n},{d};{seed})")
    raise GraphError(
        f"no simple {d}-regular graph on {n} vertices after {max_restarts} restarts; "
        "try another seed or smaller degree"
    )


def _try_pairing(n: int, d: int, rng: random.Random) -> list[tuple[int, int]] | None:
    points = [v for v in range(n) for _ in range(d)]
    nbrs: list[set[int]] = [set() for _ in range(n)]
    edges = []
    while points:
        candidates = [
            (i, j)
            for i in range(len(points))
            for j in range(i + 1, len(points))
            if points[i] != points[j] and points[j] not in nbrs[points[i]]
        ]
        if not candidates:
            return None
        i, j = rng.choice(candidates)
        u, v = points[i], points[j]
        nbrs[u].add(v)
        nbrs[v].add(u)
        edges.append((u, v))
        del points[j]
        del points[i]
    return edges
