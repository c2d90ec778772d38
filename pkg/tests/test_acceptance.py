"""Acceptance gate: one test per criterion, each with a pinned time budget.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary lists
one PASS/FAIL line per criterion.
"""

import time

import pytest

from lpl.connectivity import (
    LambdaPrimeOptions,
    classify,
    edge_connectivity,
    is_star,
    restricted_edge_connectivity,
    restricted_edge_connectivity_bruteforce,
)
from lpl.families import circulant, complete, cycle, hypercube, random_regular, star
from lpl.graph import is_connected, validate_certificate
from lpl.groups import shift_action, signed
from lpl.replacement import (
    cayley_replacement_correspondence,
    ccc,
    default_rotation_map,
    inflation,
    replacement_product,
)
from lpl.verifier import (
    bound_sweep,
    build_prescribed_lambda_prime,
    corpus_cayley_graphs,
    vertex_transitive_dichotomy,
)

BUDGET_HYPERCUBE = 10.0
BUDGET_CIRCULANT = 5.0
BUDGET_CCC = 30.0
BUDGET_CORRESPONDENCE = 10.0
BUDGET_HEADLINE = 300.0
BUDGET_ORACLE = 120.0
BUDGET_SWEEP = 300.0


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_01_hypercube_golden(criterion):
    def work():
        return {n: restricted_edge_connectivity(hypercube(n)).value for n in range(2, 7)}

    got, dt = _timed(work)
    want = {n: 2 * n - 2 for n in range(2, 7)}
    ok = got == want and dt < BUDGET_HYPERCUBE
    criterion(1, ok, f"lambda'(Q_n) = {got}, {dt:.1f}s (budget {BUDGET_HYPERCUBE}s)")
    assert got == want
    assert dt < BUDGET_HYPERCUBE


def test_criterion_02_circulant_golden(criterion):
    cases = [(8, (1, 3)), (9, (1, 2)), (11, (1, 2, 3))]

    def work():
        return [restricted_edge_connectivity(circulant(n, s)).value for n, s in cases]

    got, dt = _timed(work)
    want = [4 * len(s) - 2 for _, s in cases]
    ok = got == want and dt < BUDGET_CIRCULANT
    criterion(2, ok, f"lambda' = {got} vs {want}, {dt:.1f}s")
    assert got == want
    assert dt < BUDGET_CIRCULANT


def test_criterion_03_ccc_golden(criterion):
    def work():
        out = {}
        for n in range(3, 7):
            g = ccc(n)
            out[n] = (edge_connectivity(g)[0], restricted_edge_connectivity(g).value)
        return out

    got, dt = _timed(work)
    want = {3: (3, 3), 4: (3, 4), 5: (3, 4), 6: (3, 4)}
    ok = got == want and dt < BUDGET_CCC
    criterion(3, ok, f"(lambda, lambda') = {got}, {dt:.1f}s")
    assert got == want
    assert dt < BUDGET_CCC


def test_criterion_04_inflation_golden(criterion):
    bases = [complete(4), circulant(7, (1, 2)), hypercube(3)]
    got = []
    for g in bases:
        prod, _ = replacement_product(g, g.rotation or default_rotation_map(g), complete(g.degree(0)))
        assert prod == inflation(g)
        got.append((g.name, restricted_edge_connectivity(prod).value, edge_connectivity(g)[0]))
    ok = all(a == b for _, a, b in got)
    criterion(4, ok, f"(G, lambda'(G(R)K), lambda(G)) = {got}")
    assert ok


def test_criterion_05_cayley_equals_replacement(criterion):
    cases = [(3, [1]), (4, [1]), (6, [1, 2])]

    def work():
        out = []
        for n, gens in cases:
            act = shift_action(n)
            res = cayley_replacement_correspondence(
                act.target, [1 << p for p in range(n)], act.acting, signed(gens, n), act, 1
            )
            out.append(res.equal)
        return out

    got, dt = _timed(work)
    ok = all(got) and dt < BUDGET_CORRESPONDENCE
    criterion(5, ok, f"edge-for-edge equality {got}, {dt:.1f}s")
    assert all(got)
    assert dt < BUDGET_CORRESPONDENCE


def test_criterion_06_headline_construction(criterion):
    (g, rep), dt = _timed(lambda: build_prescribed_lambda_prime(5, 1, LambdaPrimeOptions(use_vertex_transitivity=True)))
    m = rep.measured[g.name]
    checks = {
        "5-regular": g.degrees() == [5] * g.n,
        "order 384": g.n == 384,
        "lambda=5": m["lambda"] == 5,
        "lambda'=6": m["lambda_prime"] == 6,
        "6<192": 2 * m["lambda_prime"] < g.n,
        "not optimal": m["lambda_prime"] < m["xi"],
        "atom iso G(6;1,2)": rep.get("block-atom.atom-isomorphic").holds is True,
        "all claims": rep.ok,
    }
    ok = all(checks.values()) and dt < BUDGET_HEADLINE
    criterion(6, ok, f"{[k for k, v in checks.items() if not v] or 'all checks hold'}, {dt:.1f}s")
    assert all(checks.values()), checks
    assert dt < BUDGET_HEADLINE


def _family_graphs_4_to_12():
    for n in range(4, 13):
        for k in range(1, n // 2 + 1):
            for mask in range(1, 1 << (n // 2)):
                gens = [s for s in range(1, n // 2 + 1) if mask >> (s - 1) & 1]
                if len(gens) == k:
                    yield circulant(n, gens)
        yield complete(n)
        yield cycle(n)
        yield star(n)
    yield hypercube(2)
    yield hypercube(3)
    k4 = complete(4)
    yield replacement_product(k4, default_rotation_map(k4), cycle(3))[0]


def _seeded_regular(count=100):
    out, seed = [], 0
    while len(out) < count:
        n = 4 + seed % 9
        d = 2 + (seed // 9) % (n - 2)
        seed += 1
        if n * d % 2:
            continue
        g = random_regular(n, d, seed)
        if is_connected(g) and not is_star(g):
            out.append(g)
    return out


def test_criterion_07_oracle_equivalence(criterion):
    def work():
        mismatches, checked = [], 0
        for g in list(_family_graphs_4_to_12()) + _seeded_regular(100):
            if not is_connected(g):
                continue
            checked += 1
            flow = restricted_edge_connectivity(g).value
            brute = restricted_edge_connectivity_bruteforce(g)
            if flow != brute:
                mismatches.append((g.name, flow, brute))
        return mismatches, checked

    (mismatches, checked), dt = _timed(work)
    ok = not mismatches and dt < BUDGET_ORACLE
    criterion(7, ok, f"{checked} graphs, {len(mismatches)} mismatches, {dt:.1f}s")
    assert mismatches == []
    assert dt < BUDGET_ORACLE


def test_criterion_08_bound_sweep(criterion):
    rep, dt = _timed(lambda: bound_sweep(seed=2024, count=50))
    equal = [c for c in rep.applicable() if c.claim == "lambda'.optimal-fibre"]
    ok = rep.ok and dt < BUDGET_SWEEP
    criterion(8, ok, f"{len(rep.applicable())} applicable claims, {len(rep.failures())} violations, "
                     f"{len(equal)} equality-regime instances, {dt:.1f}s")
    assert rep.failures() == []
    assert equal, "the sweep never reached the equality regime"
    assert dt < BUDGET_SWEEP


def _report_corpus():
    yield from (hypercube(n) for n in range(2, 6))
    yield from (circulant(n, s) for n, s in [(8, (1, 3)), (8, (1, 3, 4)), (9, (1, 2)), (11, (1, 2, 3))])
    yield from (ccc(n) for n in range(3, 6))
    yield from (complete(n) for n in range(4, 8))
    yield from (cycle(n) for n in range(4, 9))
    yield star(6)
    k4 = complete(4)
    yield replacement_product(k4, default_rotation_map(k4), cycle(3))[0]
    q4 = hypercube(4)
    yield replacement_product(q4, q4.rotation, cycle(4))[0]
    yield from (inflation(g) for g in (complete(4), circulant(7, (1, 2)), hypercube(3)))
    yield from _seeded_regular(40)


def test_criterion_09_report_invariants(criterion):
    violations, count = [], 0
    for g in _report_corpus():
        rep = classify(g)
        count += 1
        for v in rep.violations(g):
            violations.append((g.name, v))
        for cert in (rep.lam_certificate, rep.lam_prime_certificate):
            if cert is not None and not validate_certificate(g, cert):
                violations.append((g.name, "certificate"))
    criterion(9, not violations, f"{count} reports, {len(violations)} violations")
    assert violations == []


def test_criterion_10_vertex_transitive_dichotomy(criterion):
    violations, count = [], 0
    for g in corpus_cayley_graphs(max_order=64):
        count += 1
        rep = vertex_transitive_dichotomy(g)
        c = rep.get("dichotomy.as-stated")
        if c.status == "fails":
            violations.append((g.name, c.detail))
    sample = violations[:3]
    criterion(10, not violations, f"{count} Cayley graphs, {len(violations)} violations; e.g. {sample}")
    if violations:
        pytest.fail(f"{len(violations)} violations of the literal case split, first: {sample}")
