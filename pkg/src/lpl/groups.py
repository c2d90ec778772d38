"""Finite groups, group actions, semidirect products and Cayley graphs.

Group elements are integer ids ``0..order-1``. Cyclic groups use residues,
``(Z_2)^n`` uses ``n``-bit words (bit ``p`` is string position ``p+1``),
and a semidirect product ``A x| B`` packs ``(a, b)`` as ``a * |B| + b``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .graph import Graph, make_graph

EXHAUSTIVE_LIMIT = 1 << 20


class GroupError(ValueError):
    pass


class Group:
    """A finite group on ``0..order-1``; subclasses supply ``mul``/``inv``."""

    order: int
    identity: int = 0
    name: str = "G"

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return str(a)

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def __repr__(self) -> str:
        return f"<{self.name} order={self.order}>"


class CyclicGroup(Group):
    def __init__(self, n: int):
        if n <= 0:
            raise GroupError(f"cyclic group order must be positive, got {n}")
        self.order = n
        self.name = f"Z{n}"

    def mul(self, a, b):
        return (a + b) % self.order

    def inv(self, a):
        return -a % self.order


class BooleanVectorGroup(Group):
    """``(Z_2)^n`` under XOR."""

    def __init__(self, n: int):
        if not 1 <= n <= 24:
            raise GroupError(f"(Z2)^n needs 1 <= n <= 24, got {n}")
        self.bits = n
        self.order = 1 << n
        self.name = f"Z2^{n}"

    def mul(self, a, b):
        return a ^ b

    def inv(self, a):
        return a

    def unit(self, i: int) -> int:
        """The element ``e_i`` (1-based, as in the usual notation)."""
        return 1 << (i - 1)

    def label(self, a):
        return "".join("1" if a >> p & 1 else "0" for p in range(self.bits))


class TableGroup(Group):
    """Group given by an explicit multiplication table (used for small tests)."""

    def __init__(self, table: list[list[int]], identity: int = 0, name: str = "T"):
        self.table = [list(r) for r in table]
        self.order = len(table)
        self.identity = identity
        self.name = name
        self._inv = {}
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == identity:
                    self._inv[a] = b
                    break

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]


def cyclic_group(n: int) -> CyclicGroup:
    return CyclicGroup(n)


def boolean_vector_group(n: int) -> BooleanVectorGroup:
    return BooleanVectorGroup(n)


@dataclass
class ValidationReport:
    ok: bool
    mode: str
    checks: int
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate_group(g: Group, *, samples: int = 20000, seed: int = 0) -> ValidationReport:
    """Identity, inverse and associativity checks; exhaustive up to order 512."""
    els = list(g.elements())
    fails = []
    for a in els:
        if g.mul(g.identity, a) != a or g.mul(a, g.identity) != a:
            fails.append(f"identity fails at {a}")
        if g.mul(a, g.inv(a)) != g.identity or g.mul(g.inv(a), a) != g.identity:
            fails.append(f"inverse fails at {a}")
    if g.order <= 512 and g.order ** 3 <= 1 << 27:
        mode = "exhaustive"
        triples: Iterable = product(els, repeat=3)
    else:
        mode = "sampled"
        rng = random.Random(seed)
        triples = ((rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(samples))
    n = 0
    for a, b, c in triples:
        n += 1
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)):
            fails.append(f"associativity fails at {(a, b, c)}")
            break
    return ValidationReport(not fails, mode, n, fails)


class Action:
    """Action of ``acting`` (B) on ``target`` (A): ``apply(b, a) = phi_b(a)``."""

    def __init__(self, acting: Group, target: Group, fn: Callable[[int, int], int], name: str = "phi"):
        self.acting = acting
        self.target = target
        self._fn = fn
        self.name = name

    def apply(self, b: int, a: int) -> int:
        return self._fn(b, a)

    def __repr__(self):
        return f"<Action {self.name}: {self.acting.name} on {self.target.name}>"


def shift_action(n: int) -> Action:
    """``Z_n`` acting on ``(Z_2)^n`` by cyclic shift: bit ``p`` moves to ``p+i mod n``.

    So ``phi_i(e_1) = e_{i+1}``.
    """
    if n < 2:
        raise GroupError(f"shift action needs n >= 2, got {n}")
    mask = (1 << n) - 1

    def rotate(i: int, a: int) -> int:
        i %= n
        return ((a << i) | (a >> (n - i))) & mask

    return Action(CyclicGroup(n), BooleanVectorGroup(n), rotate, name=f"shift{n}")


def trivial_action(acting: Group, target: Group) -> Action:
    return Action(acting, target, lambda b, a: a, name="trivial")


def inversion_action(n: int) -> Action:
    """``Z_2`` acting on ``Z_n`` by negation; the semidirect product is dihedral."""
    return Action(CyclicGroup(2), CyclicGroup(n), lambda b, a: a if b == 0 else -a % n, name=f"inv{n}")


def table_action(acting: Group, target: Group, table: list[list[int]]) -> Action:
    """Action given by ``table[b][a] = phi_b(a)``."""
    rows = [list(r) for r in table]
    return Action(acting, target, lambda b, a: rows[b][a], name="table")


def validate_action(act: Action, *, samples: int = 50000, seed: int = 0) -> ValidationReport:
    A, B = act.target, act.acting
    fails: list[str] = []
    for b in B.elements():
        image = [act.apply(b, a) for a in A.elements()]
        if sorted(image) != list(A.elements()):
            fails.append(f"phi_{b} is not a bijection")
        if act.apply(b, A.identity) != A.identity:
            fails.append(f"phi_{b}(e_A) = {act.apply(b, A.identity)} != e_A")
    if any(act.apply(B.identity, a) != a for a in A.elements()):
        fails.append("phi_{e_B} is not the identity map")
    pairs = A.order * A.order * B.order + A.order * B.order * B.order
    if pairs <= EXHAUSTIVE_LIMIT:
        mode = "exhaustive"
        hom = product(B.elements(), A.elements(), A.elements())
        comp = product(B.elements(), B.elements(), A.elements())
    else:
        mode = "sampled"
        rng = random.Random(seed)
        pick = lambda G: rng.randrange(G.order)  # noqa: E731
        hom = [(pick(B), pick(A), pick(A)) for _ in range(samples)]
        comp = [(pick(B), pick(B), pick(A)) for _ in range(samples)]
    n = 0
    for b, a1, a2 in hom:
        n += 1
        lhs = act.apply(b, A.mul(a1, a2))
        if lhs != A.mul(act.apply(b, a1), act.apply(b, a2)):
            fails.append(f"phi_{b}(a1 a2) != phi_{b}(a1) phi_{b}(a2) at a1={a1}, a2={a2}")
            break
    for b1, b2, a in comp:
        n += 1
        if act.apply(B.mul(b1, b2), a) != act.apply(b1, act.apply(b2, a)):
            fails.append(f"phi_(b1 b2) != phi_b1 o phi_b2 at b1={b1}, b2={b2}, a={a}")
            break
    for b in B.elements():
        for a in A.elements():
            if act.apply(b, A.inv(a)) != A.inv(act.apply(b, a)):
                fails.append(f"phi_{b}(a^-1) != phi_{b}(a)^-1 at a={a}")
                break
    return ValidationReport(not fails, mode, n, fails)


class SemidirectProduct(Group):
    """``A x|_phi B`` with ``(a1,b1)(a2,b2) = (a1 phi_b1(a2), b1 b2)``."""

    def __init__(self, A: Group, B: Group, act: Action, *, check: bool = True):
        if act.target is not A and (act.target.order != A.order or act.target.name != A.name):
            raise GroupError("action target group does not match A")
        if act.acting is not B and (act.acting.order != B.order or act.acting.name != B.name):
            raise GroupError("action acting group does not match B")
        if check:
            rep = validate_action(act)
            if not rep:
                raise GroupError("invalid action: " + rep.failures[0])
        self.A, self.B, self.act = A, B, act
        self.order = A.order * B.order
        self.identity = self.encode(A.identity, B.identity)
        self.name = f"{A.name}x|{B.name}"

    def encode(self, a: int, b: int) -> int:
        return a * self.B.order + b

    def decode(self, g: int) -> tuple[int, int]:
        return divmod(g, self.B.order)

    def mul(self, g, h):
        a1, b1 = self.decode(g)
        a2, b2 = self.decode(h)
        return self.encode(self.A.mul(a1, self.act.apply(b1, a2)), self.B.mul(b1, b2))

    def inv(self, g):
        a, b = self.decode(g)
        binv = self.B.inv(b)
        return self.encode(self.act.apply(binv, self.A.inv(a)), binv)

    def label(self, g):
        a, b = self.decode(g)
        return f"({self.A.label(a)},{self.B.label(b)})"


def semidirect_product(A: Group, B: Group, act: Action) -> SemidirectProduct:
    return SemidirectProduct(A, B, act)


def orbit(act: Action, x: int) -> frozenset[int]:
    return frozenset(act.apply(b, x) for b in act.acting.elements())


def generated_subgroup(g: Group, gens: Iterable[int]) -> frozenset[int]:
    gens = list(gens)
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                k = g.mul(h, s)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return frozenset(seen)


def generates(g: Group, gens: Iterable[int]) -> bool:
    return len(generated_subgroup(g, gens)) == g.order


@dataclass(frozen=True)
class CayleySpec:
    group: Group
    connection_set: frozenset[int]

    def __post_init__(self):
        S = self.connection_set
        if self.group.identity in S:
            raise GroupError("connection set contains the identity")
        if any(not 0 <= s < self.group.order for s in S):
            raise GroupError("connection set element outside the group")
        if frozenset(self.group.inv(s) for s in S) != S:
            raise GroupError("connection set is not closed under inverses")


def cayley_graph(spec: CayleySpec) -> Graph:
    """Vertices are group elements; ``x ~ x s`` for ``s`` in the connection set."""
    G, S = spec.group, sorted(spec.connection_set)
    edges = [(x, G.mul(x, s)) for x in G.elements() for s in S]
    return make_graph(G.order, edges, name=f"Cay({G.name},{len(S)})")


@dataclass
class AssumptionReport:
    checks: dict[str, bool]
    S: frozenset[int]
    symmetric: bool
    symmetric_by_remark: bool

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def semidirect_connection_set(
    A: Group, S_A: Iterable[int], B: Group, S_B: Iterable[int], act: Action, x: int
) -> tuple[CayleySpec, AssumptionReport]:
    """Connection set ``{(e_A, b): b in S_B} + {(x, e_B)}`` on ``A x|_phi B``.

    Checks ``|S_A| = |B| >= 2``, ``S_A = x^B``, that both generating sets
    generate, and that ``S = S^-1`` exactly when ``S_B = S_B^-1`` and
    ``x = x^-1``. Raises ``GroupError`` naming the first failed condition.
    """
    S_A, S_B = frozenset(S_A), frozenset(S_B)
    checks = {
        "x in S_A": x in S_A,
        "|S_A| = |B| >= 2": len(S_A) == B.order >= 2,
        "S_A = orbit of x": orbit(act, x) == S_A,
        "S_A generates A": generates(A, S_A),
        "S_B generates B": generates(B, S_B),
        "e_B not in S_B": B.identity not in S_B,
    }
    for name, ok in checks.items():
        if not ok:
            raise GroupError(f"assumption fails: {name}")
    G = SemidirectProduct(A, B, act)
    S = frozenset({G.encode(A.identity, b) for b in S_B} | {G.encode(x, B.identity)})
    symmetric = frozenset(G.inv(s) for s in S) == S
    by_remark = frozenset(B.inv(b) for b in S_B) == S_B and A.inv(x) == x
    rep = AssumptionReport(checks, S, symmetric, by_remark)
    if symmetric != by_remark:
        raise GroupError("S = S^-1 disagrees with (S_B = S_B^-1 and x = x^-1)")
    if not symmetric:
        why = "S_B != S_B^-1" if frozenset(B.inv(b) for b in S_B) != S_B else "x != x^-1"
        raise GroupError(f"S is not inverse-closed: {why}")
    return CayleySpec(G, S), rep


def signed(gens: Iterable[int], n: int) -> frozenset[int]:
    """``±{s_1..s_k}`` as residues mod ``n``."""
    return frozenset(v for s in gens for v in (s % n, -s % n))


def semidirect_cube_cayley(n: int, gens: Iterable[int]) -> tuple[CayleySpec, AssumptionReport]:
    """Cayley data for ``(Z_2)^n x| Z_n`` with ``S_B = ±gens`` and ``x = e_1``."""
    act = shift_action(n)
    A, B = act.target, act.acting
    return semidirect_connection_set(A, [1 << p for p in range(n)], B, signed(gens, n), act, 1)
