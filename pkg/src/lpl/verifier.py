"""Mechanical checks of connectivity claims about replacement products and
Cayley graphs of semidirect products.

Every claim is evaluated on measured quantities only. A claim whose
hypotheses fail on the instance is recorded as ``n/a`` and never counts as a
failure.

Claim ids used by :func:`check_product_bounds` (``l1, k1, d1`` describe
``G1``; ``l2, d2, l2'`` describe ``G2``; ``lambda``, ``lambda'`` the product):

* ``product.regular``: the product is ``(d2+1)``-regular on ``|V1| * d1`` vertices
* ``lambda.lower``: ``min{l1, l2} <= lambda``
* ``lambda.upper``: ``lambda <= min{l1, d2+1}``
* ``lambda.lower.2-connected``: ``min{l1, l2+1} <= lambda`` when ``k1 >= 2``
* ``lambda.bridge``: ``lambda = 1`` when ``l1 = 1``
* ``lambda.strong-fibre``: ``lambda = l1`` when ``l2 >= l1``
* ``lambda.2-connected``: ``lambda = l1`` when ``k1 >= 2`` and ``l2 >= l1 - 1``
* ``lambda.optimal-fibre``: ``lambda = min{l1, d2+1}`` when ``k1 >= 2`` and ``l2 = d2``
* ``lambda.complete-fibre``: ``lambda = l1`` when ``G2`` is complete
* ``lambda.cycle-fibre``: ``lambda = min{l1, 3}`` when ``k1 >= 2`` and ``G2`` is a cycle
* ``lambda'.upper``: ``lambda' <= min{l1, 2 d2}``
* ``lambda'.complete-fibre``: ``lambda' = l1`` when ``G2`` is complete
* ``lambda'.lower``: ``min{l1, k1+l2-1, 2 l2, l2'+2} <= lambda'`` when ``d1 >= 4``
* ``lambda'.optimal-fibre``: ``lambda' = min{l1, 2 d2}`` when ``d1 >= 4``,
  ``k1 >= l1-l2+1`` or ``k1 >= l2+1``, and ``G2`` is ``lambda'``-optimal
* ``lambda'.tight-factor``: same equality when ``k1 = l1`` and ``G2`` is
  ``lambda'``-optimal
* ``optimal.iff`` / ``super.iff``: the product is ``lambda'``-optimal iff
  ``l1 >= 2 d2``; super-lambda iff ``l1 > d2+1``; when ``k1 >= l1-l2+1 >= 2``
  (or ``k1 >= l2+1``) and ``G2`` is ``lambda'``-optimal
* ``optimal.iff.tight-factor`` / ``super.iff.tight-factor``: the same two
  equivalences when ``d1 >= 4``, ``k1 = l1 >= 2`` and ``G2`` is ``lambda'``-optimal
* ``lambda'.cycle-fibre``: ``lambda' = min{l1, 4}`` when ``G2`` is a cycle and ``k1 >= 3``
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .connectivity import (
    LambdaPrimeOptions,
    edge_connectivity,
    lambda_prime_atom,
    restricted_edge_connectivity,
    vertex_connectivity,
)
from .families import circulant, complete, cycle, hypercube, random_regular
from .graph import (
    Graph,
    GraphError,
    RotationMap,
    has_cut_vertex,
    has_triangle,
    induced_subgraph,
    is_connected,
    make_graph,
    max_degree,
    min_degree,
    min_edge_degree,
)
from .groups import (
    Action,
    CayleySpec,
    Group,
    GroupError,
    cayley_graph,
    cyclic_group,
    semidirect_connection_set,
    semidirect_cube_cayley,
    shift_action,
    signed,
)
from .replacement import (
    cayley_replacement_correspondence,
    ccc,
    default_rotation_map,
    replacement_product,
)

log = logging.getLogger(__name__)

NA = "n/a"


@dataclass
class ClaimRecord:
    claim: str
    instance: str
    applicable: bool
    lhs: object = None
    relation: str = ""
    rhs: object = None
    holds: bool | None = None
    detail: str = ""

    @property
    def status(self) -> str:
        if not self.applicable:
            return NA
        return "holds" if self.holds else "fails"


@dataclass
class BoundReport:
    """Claim records plus the measured inputs they were evaluated on."""

    claims: list[ClaimRecord] = field(default_factory=list)
    measured: dict[str, dict] = field(default_factory=dict)

    def add(
        self,
        claim: str,
        instance: str,
        hypothesis: bool,
        lhs=None,
        relation: str = "==",
        rhs=None,
        detail: str = "",
    ) -> ClaimRecord:
        if not hypothesis:
            rec = ClaimRecord(claim, instance, False, lhs, relation, rhs, None, detail)
        else:
            rec = ClaimRecord(claim, instance, True, lhs, relation, rhs, _compare(lhs, relation, rhs), detail)
        self.claims.append(rec)
        return rec

    def merge(self, other: "BoundReport") -> "BoundReport":
        self.claims.extend(other.claims)
        self.measured.update(other.measured)
        return self

    def applicable(self) -> list[ClaimRecord]:
        return [c for c in self.claims if c.applicable]

    def failures(self) -> list[ClaimRecord]:
        return [c for c in self.claims if c.applicable and not c.holds]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def get(self, claim: str, instance: str | None = None) -> ClaimRecord:
        for c in self.claims:
            if c.claim == claim and (instance is None or c.instance == instance):
                return c
        raise KeyError((claim, instance))

    def summary(self) -> dict[str, int]:
        out = {"holds": 0, "fails": 0, NA: 0}
        for c in self.claims:
            out[c.status] += 1
        return out

    def to_json(self) -> dict:
        claims = sorted(self.claims, key=lambda c: (c.instance, c.claim))
        return {
            "ok": self.ok,
            "summary": self.summary(),
            "claims": [dict(asdict(c), status=c.status) for c in claims],
            "measured": {k: self.measured[k] for k in sorted(self.measured)},
        }


def _compare(lhs, relation: str, rhs) -> bool:
    if relation == "<=":
        return lhs <= rhs
    if relation == "<":
        return lhs < rhs
    if relation == "==":
        return lhs == rhs
    if relation == "iff":
        return bool(lhs) == bool(rhs)
    raise ValueError(f"unknown relation {relation!r}")


# -- measurements ------------------------------------------------------------


@dataclass(frozen=True)
class Measures:
    n: int
    delta: int
    lam: int
    kappa: int
    xi: int | None
    lam_prime: int | None
    complete: bool
    cycle: bool

    @property
    def lambda_prime_optimal(self) -> bool:
        return self.lam_prime is not None and self.lam_prime == self.xi


def measure(g: Graph, opts: LambdaPrimeOptions | None = None, *, with_kappa: bool = True) -> Measures:
    if not is_connected(g):
        raise GraphError(f"{g.name or 'graph'} must be connected")
    lam, _ = edge_connectivity(g)
    lp = restricted_edge_connectivity(g, opts).value if g.n >= 4 else None
    d = min_degree(g)
    return Measures(
        n=g.n,
        delta=d,
        lam=lam,
        kappa=vertex_connectivity(g) if with_kappa else -1,
        xi=min_edge_degree(g) if g.m else None,
        lam_prime=lp,
        complete=g.m == g.n * (g.n - 1) // 2,
        cycle=g.n >= 3 and g.is_regular() and d == 2,
    )


# -- product bounds ---------------------------------------------------------------


def check_product_bounds(
    g1: Graph,
    rot: RotationMap,
    g2: Graph,
    opts: LambdaPrimeOptions | None = None,
    *,
    instance: str | None = None,
) -> BoundReport:
    """Evaluate every applicable bound and equality on ``G1 (R) G2``."""
    prod, _ = replacement_product(g1, rot, g2)
    label = instance or prod.name
    m1 = measure(g1, opts)
    m2 = measure(g2, opts, with_kappa=False)
    lam, _ = edge_connectivity(prod)
    lp = restricted_edge_connectivity(prod, opts).value
    xi = min_edge_degree(prod)
    l1, k1, d1 = m1.lam, m1.kappa, m1.delta
    l2, d2, lp2 = m2.lam, m2.delta, m2.lam_prime
    opt2 = m2.lambda_prime_optimal

    rep = BoundReport()
    rep.measured[label] = {
        "lambda1": l1, "kappa1": k1, "delta1": d1,
        "lambda2": l2, "delta2": d2, "lambda_prime2": lp2, "G2_lambda_prime_optimal": opt2,
        "n": prod.n, "lambda": lam, "lambda_prime": lp, "xi": xi,
    }
    add = rep.add
    add("product.regular", label, True,
        (prod.n, sorted(set(prod.degrees()))), "==", (g1.n * d1, [d2 + 1]))
    add("lambda.lower", label, True, min(l1, l2), "<=", lam)
    add("lambda.upper", label, True, lam, "<=", min(l1, d2 + 1))
    add("lambda.lower.2-connected", label, k1 >= 2, min(l1, l2 + 1), "<=", lam)
    add("lambda.bridge", label, l1 == 1, lam, "==", 1)
    add("lambda.strong-fibre", label, l2 >= l1, lam, "==", l1)
    add("lambda.2-connected", label, k1 >= 2 and l2 >= l1 - 1, lam, "==", l1)
    add("lambda.optimal-fibre", label, k1 >= 2 and l2 == d2, lam, "==", min(l1, d2 + 1))
    add("lambda.complete-fibre", label, m2.complete, lam, "==", l1)
    add("lambda.cycle-fibre", label, k1 >= 2 and m2.cycle, lam, "==", min(l1, 3))

    have_lp = lp is not None
    add("lambda'.upper", label, have_lp, lp, "<=", min(l1, 2 * d2))
    add("lambda'.complete-fibre", label, have_lp and m2.complete, lp, "==", l1)
    if have_lp and d1 >= 4 and lp2 is not None:
        lower = min(l1, k1 + l2 - 1, 2 * l2, lp2 + 2)
        add("lambda'.lower", label, True, lower, "<=", lp)
    else:
        add("lambda'.lower", label, False, detail="needs delta1 >= 4 and lambda'(G2) defined")
    kappa_ok = k1 >= l1 - l2 + 1 or k1 >= l2 + 1
    add("lambda'.optimal-fibre", label, have_lp and d1 >= 4 and kappa_ok and opt2,
        lp, "==", min(l1, 2 * d2))
    add("lambda'.tight-factor", label, have_lp and k1 == l1 and opt2, lp, "==", min(l1, 2 * d2))

    iff_hyp = have_lp and opt2 and (k1 >= l1 - l2 + 1 >= 2 or k1 >= l2 + 1)
    tight_hyp = have_lp and opt2 and d1 >= 4 and k1 == l1 >= 2
    optimal = have_lp and lp == xi
    super_lam = have_lp and lp > lam
    add("optimal.iff", label, iff_hyp, optimal, "iff", l1 >= 2 * d2)
    add("super.iff", label, iff_hyp, super_lam, "iff", l1 > d2 + 1)
    add("optimal.iff.tight-factor", label, tight_hyp, optimal, "iff", l1 >= 2 * d2)
    add("super.iff.tight-factor", label, tight_hyp, super_lam, "iff", l1 > d2 + 1)
    add("lambda'.cycle-fibre", label, have_lp and m2.cycle and k1 >= 3, lp, "==", min(l1, 4))
    return rep


def cut_vertex_bound(g: Graph, *, instance: str | None = None) -> BoundReport:
    """``lambda(G) <= Delta(G) / 2`` for connected graphs with a cut-vertex."""
    rep = BoundReport()
    lam, _ = edge_connectivity(g)
    rep.add("lambda.cut-vertex", instance or g.name, has_cut_vertex(g), 2 * lam, "<=", max_degree(g))
    return rep


def vertex_transitive_dichotomy(
    g: Graph, lam_prime: int | None = None, *, instance: str | None = None
) -> BoundReport:
    """Case split of ``lambda'`` for a connected vertex-transitive graph.

    The caller vouches for vertex-transitivity (e.g. a Cayley graph).
    ``dichotomy.as-stated``: ``lambda' = 2d-2`` when the order is odd or
    there is no triangle; otherwise ``d <= lambda' = n/m <= 2d-3`` for some
    integer ``m >= 2``. ``dichotomy``: same first case, and otherwise either
    ``lambda' = 2d-2`` or the divisor bound holds.
    """
    label = instance or g.name
    rep = BoundReport()
    d = g.degree(0)
    applicable = is_connected(g) and g.n >= 4 and d >= 2 and g.is_regular()
    if not applicable:
        rep.add("dichotomy.as-stated", label, False)
        rep.add("dichotomy", label, False)
        return rep
    if lam_prime is None:
        lam_prime = restricted_edge_connectivity(g).value
    lp, n = lam_prime, g.n
    forced = n % 2 == 1 or not has_triangle(g)
    divisor_case = d <= lp <= 2 * d - 3 and n % lp == 0 and n // lp >= 2
    rep.measured[label] = {"n": n, "degree": d, "lambda_prime": lp, "odd_or_triangle_free": forced}
    if forced:
        for cid in ("dichotomy.as-stated", "dichotomy"):
            rep.add(cid, label, True, lp, "==", 2 * d - 2, detail="odd order or triangle-free")
    else:
        rep.add("dichotomy.as-stated", label, True, divisor_case, "iff", True,
                detail=f"need d <= lambda' = n/m <= 2d-3; lambda'={lp}, d={d}, n={n}")
        rep.add("dichotomy", label, True, divisor_case or lp == 2 * d - 2, "iff", True,
                detail=f"optimal or divisor case; lambda'={lp}, d={d}, n={n}")
    return rep


# -- small-graph isomorphism -----------------------------------------------------------


def small_graph_isomorphic(g: Graph, h: Graph, limit: int = 10) -> bool:
    """Exact isomorphism test by degree-refined backtracking (at most ``limit`` vertices)."""
    if g.n > limit or h.n > limit:
        raise GraphError(f"isomorphism search limited to {limit} vertices")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gn, hn = g.neighbor_sets(), h.neighbor_sets()
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in range(h.n):
            if w in used or h.degree(w) != g.degree(v):
                continue
            if all((u in gn[v]) == (mapping[u] in hn[w]) for u in mapping):
                mapping[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


# -- semidirect-product Cayley graphs ---------------------------------------------------


def check_optimality_criterion(
    A: Group,
    S_A: Iterable[int],
    B: Group,
    S_B: Iterable[int],
    act: Action,
    x: int,
    opts: LambdaPrimeOptions | None = None,
    *,
    instance: str | None = None,
) -> BoundReport:
    """``C_{A x| B}(S)`` is ``lambda'``-optimal iff ``|S_A| >= 2 |S_B|``.

    Hypotheses (measured): ``C_A(S_A)`` has ``kappa = delta`` and
    ``C_B(S_B)`` is ``lambda'``-optimal. The measured biconditional is stored
    in ``detail`` even when the claim is not applicable.
    """
    S_A, S_B = frozenset(S_A), frozenset(S_B)
    spec, _ = semidirect_connection_set(A, S_A, B, S_B, act, x)
    g = cayley_graph(spec)
    label = instance or f"{spec.group.name};|S_A|={len(S_A)},|S_B|={len(S_B)}"
    ga = cayley_graph(CayleySpec(A, S_A))
    gb = cayley_graph(CayleySpec(B, S_B))
    kappa_a = vertex_connectivity(ga)
    kappa_optimal = kappa_a == min_degree(ga)
    mb = measure(gb, with_kappa=False)
    lp = restricted_edge_connectivity(g, opts).value
    xi = min_edge_degree(g)
    rep = BoundReport()
    rep.measured[label] = {
        "order": g.n, "lambda_prime": lp, "xi": xi, "|S_A|": len(S_A), "|S_B|": len(S_B),
        "C_A_kappa_optimal": kappa_optimal, "C_B_lambda_prime": mb.lam_prime,
        "C_B_lambda_prime_optimal": mb.lambda_prime_optimal,
    }
    hyp = kappa_optimal and mb.lambda_prime_optimal and lp is not None
    why = []
    if not kappa_optimal:
        why.append("C_A(S_A) is not kappa-optimal")
    if not mb.lambda_prime_optimal:
        why.append(
            "C_B(S_B) has no lambda'" if mb.lam_prime is None else "C_B(S_B) is not lambda'-optimal"
        )
    detail = "; ".join(why) or f"lambda'={lp}, xi={xi}"
    if not hyp:
        detail += f" (measured: optimal={lp == xi}, |S_A| >= 2|S_B| is {len(S_A) >= 2 * len(S_B)})"
    rep.add("semidirect.optimal.iff", label, hyp, lp == xi, "iff", len(S_A) >= 2 * len(S_B), detail)
    return rep


def _cube_instance(n: int, gens: Iterable[int]) -> tuple:
    act = shift_action(n)
    A, B = act.target, act.acting
    return A, [1 << p for p in range(n)], B, signed(gens, n), act, 1


def check_cube_optimality(n: int, gens: Iterable[int], opts=None) -> BoundReport:
    """The optimality criterion on ``(Z_2)^n x| Z_n`` with ``S_B = ±gens``."""
    gens = sorted(set(gens))
    return check_optimality_criterion(
        *_cube_instance(n, gens), opts, instance=f"cube-sdp(n={n};±{gens})"
    )


def block_atom_preconditions(n: int, gens: Iterable[int]) -> list[str]:
    gens = sorted(set(gens))
    k = len(gens)
    size = len(signed(gens, n))
    bad = []
    if k < 2:
        bad.append(f"needs k >= 2 generators, got {k} (with k = 1 the fibre is a cycle)")
    if gens and 2 * gens[-1] >= n:
        bad.append(f"needs s_k < n/2, got s_k = {gens[-1]} with n = {n}")
    if not 2 * size > n:
        bad.append(f"needs |S_B| > n/2, got |S_B| = {size}; this condition is necessary, "
                   "otherwise |S_A| >= 2|S_B| and the graph is lambda'-optimal")
    if not size < n - 1:
        bad.append(f"needs |S_B| < n-1, got |S_B| = {size}; this condition is necessary, "
                   "otherwise the fibre is complete and lambda = lambda'")
    return bad


def build_block_atom_cayley(
    n: int,
    gens: Iterable[int],
    opts: LambdaPrimeOptions | None = None,
    *,
    check_atom: bool = True,
) -> tuple[Graph, BoundReport]:
    """Cayley graph of ``(Z_2)^n x| Z_n`` whose ``lambda'``-atoms are the fibres.

    With ``S_B = ±gens`` satisfying the preconditions, the graph has
    ``lambda = |S_B| + 1 < lambda' = n < order/2`` and every ``lambda'``-atom
    induces ``G(n; ±gens)``.
    """
    gens = sorted(set(int(s) for s in gens))
    bad = block_atom_preconditions(n, gens)
    if bad:
        raise GroupError("; ".join(bad))
    spec, _ = semidirect_cube_cayley(n, gens)
    g = cayley_graph(spec).renamed(f"cube-sdp(n={n};±{gens})")
    label = g.name
    size = len(signed(gens, n))
    opts = opts or LambdaPrimeOptions(use_vertex_transitivity=True)
    lam, _ = edge_connectivity(g)
    res = restricted_edge_connectivity(g, opts)
    lp, xi = res.value, min_edge_degree(g)
    rep = BoundReport()
    rep.measured[label] = {"order": g.n, "degree": g.degree(0), "lambda": lam,
                           "lambda_prime": lp, "xi": xi, "flows": res.flows}
    rep.add("block-atom.lambda", label, True, lam, "==", size + 1)
    rep.add("block-atom.lambda'", label, True, lp, "==", n)
    rep.add("block-atom.lambda<lambda'", label, True, lam, "<", lp)
    rep.add("block-atom.lambda'<order/2", label, True, 2 * lp, "<", g.n)
    rep.add("block-atom.not-optimal", label, True, lp, "<", xi)
    if check_atom:
        atom = lambda_prime_atom(g, opts)
        rep.measured[label]["atom"] = sorted(atom)
        blocks = [frozenset(range(x * n, (x + 1) * n)) for x in range(g.n // n)]
        rep.add("block-atom.atom-is-fibre", label, True, atom in blocks, "iff", True)
        if len(atom) <= 10:
            sub, _ = induced_subgraph(g, atom)
            iso = small_graph_isomorphic(sub, circulant(n, gens))
            rep.add("block-atom.atom-isomorphic", label, True, iso, "iff", True,
                    detail=f"G[atom] vs G({n};±{gens})")
        else:
            rep.add("block-atom.atom-isomorphic", label, False, detail="atom larger than 10 vertices")
    return g, rep


def prescribed_lambda_prime_parameters(d: int, s: int) -> tuple[int, list[int]]:
    if d < 5 or d % 2 == 0:
        raise GroupError(f"d must be an odd integer >= 5, got {d}")
    if not 1 <= s <= d - 3:
        raise GroupError(f"s must satisfy 1 <= s <= d-3 = {d - 3}, got {s}")
    return d + s, list(range(1, (d - 1) // 2 + 1))


def build_prescribed_lambda_prime(
    d: int, s: int, opts: LambdaPrimeOptions | None = None, *, check_atom: bool = True
) -> tuple[Graph, BoundReport]:
    """A ``d``-regular Cayley graph with ``lambda' = d + s < order/2`` (odd ``d >= 5``)."""
    n, gens = prescribed_lambda_prime_parameters(d, s)
    g, rep = build_block_atom_cayley(n, gens, opts, check_atom=check_atom)
    label = g.name
    meas = rep.measured[label]
    rep.add("prescribed.degree", label, True, (g.is_regular(), g.degree(0)), "==", (True, d))
    rep.add("prescribed.lambda", label, True, meas["lambda"], "==", d)
    rep.add("prescribed.lambda'", label, True, meas["lambda_prime"], "==", d + s)
    rep.add("prescribed.lambda'<order/2", label, True, 2 * meas["lambda_prime"], "<", g.n)
    return g, rep


# -- golden suite -----------------------------------------------------------------


def _expect(rep: BoundReport, claim: str, instance: str, measured, expected, relation="==") -> None:
    rep.add(claim, instance, True, measured, relation, expected)


def verify_paper_examples(
    opts: LambdaPrimeOptions | None = None, *, include_large: bool = True, progress=None
) -> BoundReport:
    """Recompute the published example values and compare each one."""
    opts = opts or LambdaPrimeOptions()
    rep = BoundReport()

    def step(msg):
        if progress is not None:
            progress(msg)

    for n in range(2, 7):
        g = hypercube(n)
        step(g.name)
        _expect(rep, "hypercube.lambda'", g.name, restricted_edge_connectivity(g, opts).value, 2 * n - 2)
        _expect(rep, "hypercube.lambda", g.name, edge_connectivity(g)[0], n)
    for n, gens in ((8, (1, 3)), (9, (1, 2)), (11, (1, 2, 3))):
        g = circulant(n, gens)
        step(g.name)
        lp = restricted_edge_connectivity(g, opts).value
        _expect(rep, "circulant.lambda'", g.name, lp, 4 * len(gens) - 2)
        _expect(rep, "circulant.optimal", g.name, lp, min_edge_degree(g))
    g = circulant(8, (1, 3, 4))
    _expect(rep, "circulant.shape", g.name, (g.degree(0), g.m), (5, 20))

    k4 = complete(4)
    rot = default_rotation_map(k4)
    step("K4(R)C3")
    rep.merge(check_product_bounds(k4, rot, cycle(3), opts, instance="K4(R)C3"))
    prod, _ = replacement_product(k4, rot, cycle(3))
    _expect(rep, "example.lambda", "K4(R)C3", edge_connectivity(prod)[0], 3)
    _expect(rep, "example.lambda'", "K4(R)C3", restricted_edge_connectivity(prod, opts).value, 3)

    for n in range(3, 6):
        g = ccc(n)
        step(g.name)
        lp = restricted_edge_connectivity(g, opts).value
        _expect(rep, "ccc.lambda", g.name, edge_connectivity(g)[0], 3)
        _expect(rep, "ccc.lambda'", g.name, lp, min(n, 4))
        _expect(rep, "ccc.optimal", g.name, lp == min_edge_degree(g), n >= 4, "iff")
        rep.merge(check_cube_optimality(n, [1], opts))

    for g, label in ((complete(4), "K4(R)K3"), (circulant(7, (1, 2)), "G(7;±{1,2})(R)K4"),
                     (hypercube(3), "Q3(R)K3")):
        step(label)
        r = g.rotation or default_rotation_map(g)
        rep.merge(check_product_bounds(g, r, complete(g.degree(0)), opts, instance=label))

    q4 = hypercube(4)
    step("Q4(R)C4")
    rep.merge(check_product_bounds(q4, q4.rotation, cycle(4), opts, instance="Q4(R)C4"))

    for n, gens in ((3, [1]), (4, [1]), (6, [1, 2])):
        res = cayley_replacement_correspondence(*_cube_instance(n, gens))
        _expect(rep, "cayley=replacement", f"cube-sdp(n={n};±{gens})", res.equal, True, "iff")

    if include_large:
        step("cube-sdp(n=6;±[1, 2])")
        _, r = build_prescribed_lambda_prime(5, 1, LambdaPrimeOptions(use_vertex_transitivity=True,
                                                                      jobs=opts.jobs))
        rep.merge(r)
        rep.merge(check_cube_optimality(6, [1, 2], opts))
    return rep


# -- randomized sweep ------------------------------------------------------------------


def _connected_regular(n: int, d: int, rng: random.Random) -> Graph:
    for _ in range(200):
        g = random_regular(n, d, rng.randrange(1 << 31))
        if is_connected(g):
            return g
    raise GraphError(f"no connected {d}-regular graph on {n} vertices found")


def random_product_pairs(seed: int, count: int) -> Iterator[tuple[Graph, RotationMap, Graph, str]]:
    """Seeded ``(G1, rotation, G2)`` triples with both factors connected and regular."""
    rng = random.Random(seed)
    for i in range(count):
        d1 = rng.choice((3, 4, 4, 5, 6))
        d2 = rng.choice([d for d in range(2, d1) if (d1 * d) % 2 == 0])
        n1 = rng.choice([n for n in range(d1 + 1, 13) if (n * d1) % 2 == 0])
        g1 = _connected_regular(n1, d1, rng)
        g2 = _connected_regular(d1, d2, rng)
        yield g1, default_rotation_map(g1), g2, f"sweep[{seed}:{i}](RR({n1},{d1}),RR({d1},{d2}))"


def bound_sweep(seed: int, count: int, opts: LambdaPrimeOptions | None = None, progress=None) -> BoundReport:
    rep = BoundReport()
    for k, (g1, rot, g2, label) in enumerate(random_product_pairs(seed, count)):
        if progress is not None:
            progress(f"{k + 1}/{count} {label}")
        rep.merge(check_product_bounds(g1, rot, g2, opts, instance=label))
    return rep


# -- necessity of 2-connectivity ---------------------------------------------------------


def cut_vertex_regular_graph(d: int, block: int, rng: random.Random) -> Graph:
    """A ``d``-regular graph with a cut-vertex (``d`` divisible by 4).

    Vertex 0 joins two blocks; each block is a random ``d``-regular graph on
    ``block`` vertices minus ``d/4`` disjoint edges, whose endpoints attach to 0.
    """
    if d % 4 or d < 4 or block <= d:
        raise GraphError("need d divisible by 4 and block > d")
    edges: list[tuple[int, int]] = []
    offset = 1
    for _ in range(2):
        for _attempt in range(200):
            h = random_regular(block, d, rng.randrange(1 << 31))
            if not is_connected(h):
                continue
            es = h.edges()
            rng.shuffle(es)
            matching, touched = [], set()
            for u, v in es:
                if u not in touched and v not in touched:
                    matching.append((u, v))
                    touched |= {u, v}
                if len(matching) == d // 4:
                    break
            rest = make_graph(block, [e for e in es if e not in set(matching)])
            if is_connected(rest):
                break
        else:
            raise GraphError("could not build a block")
        edges += [(u + offset, v + offset) for u, v in rest.edges()]
        edges += [(0, v + offset) for v in sorted(touched)]
        offset += block
    return make_graph(offset, edges, name=f"cutvertex({d},{block})")


def random_rotation_map(g: Graph, rng: random.Random) -> RotationMap:
    order = [list(g.adj[x]) for x in range(g.n)]
    for row in order:
        rng.shuffle(row)
    pos = [{y: i for i, y in enumerate(row)} for row in order]
    return RotationMap(tuple(tuple((y, pos[y][x]) for y in order[x]) for x in range(g.n)))


@dataclass
class CutVertexWitness:
    g1: Graph
    rotation: RotationMap
    g2: Graph
    lambda1: int
    kappa1: int
    lambda2: int
    lam: int

    def to_json(self) -> dict:
        return {
            "G1": self.g1.name, "G1_order": self.g1.n, "G2": self.g2.name,
            "lambda1": self.lambda1, "kappa1": self.kappa1, "lambda2": self.lambda2,
            "lambda_product": self.lam, "bound": min(self.lambda1, self.lambda2 + 1),
        }


def search_cut_vertex_witness(
    seed: int = 0, tries: int = 20, degrees: Iterable[int] = (8,), sorted_first: bool = True
) -> CutVertexWitness | None:
    """Look for ``kappa1 = 1`` with ``lambda(G1 (R) G2) < min{l1, l2+1}``.

    Such a witness shows the 2-connectivity hypothesis of the lower bound
    cannot be dropped. The fibre is a cycle on ``d`` vertices.
    """
    rng = random.Random(seed)
    degrees = list(degrees)
    for t in range(tries):
        d = degrees[t % len(degrees)]
        g1 = cut_vertex_regular_graph(d, rng.randint(d + 1, d + 4), rng)
        rot = default_rotation_map(g1) if sorted_first and t == 0 else random_rotation_map(g1, rng)
        g2 = cycle(d)
        l1, _ = edge_connectivity(g1)
        k1 = vertex_connectivity(g1)
        prod, _ = replacement_product(g1, rot, g2)
        lam, _ = edge_connectivity(prod)
        if k1 == 1 and lam < min(l1, 3):
            return CutVertexWitness(g1, rot, g2, l1, k1, 2, lam)
    return None


def corpus_cayley_graphs(max_order: int = 64) -> Iterator[Graph]:
    """Cayley graphs built by this package with at most ``max_order`` vertices."""
    for n in range(4, min(max_order, 16) + 1):
        for k in range(1, n // 2 + 1):
            for gens in itertools.combinations(range(1, n // 2 + 1), k):
                g = cayley_graph(CayleySpec(cyclic_group(n), signed(gens, n)))
                if is_connected(g):
                    yield g.renamed(f"G({n};±{{{','.join(map(str, gens))}}})")
    for n in range(2, 7):
        if 1 << n <= max_order:
            yield hypercube(n)
    for n in range(3, 7):
        if n << n <= max_order:
            spec, _ = semidirect_cube_cayley(n, [1])
            yield cayley_graph(spec).renamed(f"cube-sdp(n={n};±[1])")

