"""Acceptance gate: one test per top-level criterion.

Each test prints a single ``[acceptance] criterion N (...): pass|fail``
line (visible under ``pytest -s`` or on failure) and then asserts.
"""

import math
import random

from abcover import (DegreeSpec, Ordering, canonical_form, compare_rho,
                     complete, empty, enumerate_all, enumerate_dense_candidates,
                     find_factor, from_edges, h_graph, has_gf_factor,
                     hong_nikiforov_bound, is_ab_covered_definitional,
                     is_ab_covered_structural, join, quotient_matrix,
                     quotient_spectral_radius, run_property_suites,
                     spectral_radius, verify_factor_extremal,
                     verify_size_extremal, verify_spectral_extremal)

K3_3K1 = join(complete(3), empty(3))


def _verdict(num, name, ok):
    print(f"[acceptance] criterion {num} ({name}): {'pass' if ok else 'fail'}")
    return ok


def test_criterion_1_dual_oracle_agreement():
    specs = [(1, 1), (1, 2), (2, 2), (2, 3)]
    disagreements = []
    checked = 0
    for n in range(1, 7):
        for g in enumerate_all(n):
            for a, b in specs:
                if a == b and (n * a) % 2:
                    continue
                checked += 1
                structural = is_ab_covered_structural(g, a, b).covered
                definitional = is_ab_covered_definitional(g, a, b).covered
                if structural != definitional:
                    disagreements.append(("covered", g, a, b))
                scan, _ = has_gf_factor(g, DegreeSpec.uniform(n, a, b))
                search = find_factor(g, DegreeSpec.uniform(n, a, b)) is not None
                if scan != search:
                    disagreements.append(("factor", g, a, b))
    ok = _verdict(1, "dual-oracle agreement", not disagreements)
    assert checked == 208 * len(specs) - sum(
        sum(1 for g in enumerate_all(n)) for n in (1, 3, 5))
    assert ok, disagreements[:5]


def test_criterion_2_size_extremal_matching():
    r6 = verify_size_extremal(6, 1, 1)
    set6 = {canonical_form(h_graph(6, 3)), canonical_form(K3_3K1)}
    ok6 = (r6.status == "pass" and r6.extremal_value == 12
           and {canonical_form(_parse(s)) for s in r6.extremal_set} == set6)
    r8 = verify_size_extremal(8, 1, 1)
    ok8 = (r8.status == "pass" and r8.extremal_value == 23
           and [canonical_form(_parse(s)) for s in r8.extremal_set]
           == [canonical_form(h_graph(8, 3))])
    ok = _verdict(2, "size extremal, matching case", ok6 and ok8)
    assert ok, (r6, r8)


def _parse(s):
    from abcover import parse_graph6
    return parse_graph6(s)


def test_criterion_3_size_extremal_7_1_2():
    r = verify_size_extremal(7, 1, 2)
    ok = (r.status == "pass" and r.extremal_value == 15
          and [canonical_form(_parse(s)) for s in r.extremal_set]
          == [canonical_form(h_graph(7, 1))])
    assert _verdict(3, "size extremal at (7,1,2)", ok), r


def test_criterion_4_spectral_extremal_matching():
    r = verify_spectral_extremal(6, 1, 1, tol=1e-8)
    rho_k33 = spectral_radius(K3_3K1).rho
    q = quotient_matrix(h_graph(6, 3), [{0, 1}, {2, 3, 4}, {5}])
    oracle = quotient_spectral_radius(q)  # root of x^3 - 3x^2 - 6x + 4
    assert abs(oracle ** 3 - 3 * oracle ** 2 - 6 * oracle + 4) < 1e-9
    ok = (r.status == "pass"
          and abs(rho_k33 - (1 + math.sqrt(10))) < 1e-8
          and abs(spectral_radius(h_graph(6, 3)).rho - oracle) < 1e-8
          and compare_rho(h_graph(6, 3), K3_3K1, 1e-8) is Ordering.GREATER)
    assert _verdict(4, "spectral extremal, matching case", ok), r


def test_criterion_5_dense_mode_10_2_2():
    r = verify_size_extremal(10, 2, 2, corpus="dense")
    ok = (r.status == "pass" and r.extremal_value == 37
          and [canonical_form(_parse(s)) for s in r.extremal_set]
          == [canonical_form(h_graph(10, 2))])
    assert _verdict(5, "dense-mode size extremal at (10,2,2)", ok), r


def test_criterion_6_factor_free_cross_checks():
    cases = [
        (4, 1, 2, 3, [h_graph(4, 1), join(complete(1), empty(3))]),
        (5, 2, 2, 7, [h_graph(5, 2), join(complete(2), empty(3))]),
        (7, 1, 3, 15, [h_graph(7, 1)]),
    ]
    failures = []
    for n, a, b, value, expected in cases:
        r = verify_factor_extremal(n, a, b)
        want = sorted(canonical_form(g) for g in expected)
        got = sorted(canonical_form(_parse(s)) for s in r.extremal_set)
        if not (r.status == "pass" and r.extremal_value == value and got == want):
            failures.append((n, a, b, r))
    assert _verdict(6, "factor-free extremal cross-checks", not failures), failures


def test_criterion_7_lemma_suites():
    graphs7 = [g for n in range(1, 8) for g in enumerate_all(n)]
    r21 = run_property_suites(graphs7, ["lemma21"])[0]
    graphs5 = [g for n in range(1, 6) for g in enumerate_all(n)]
    r32 = run_property_suites(graphs5, ["lemma32"], a=1, b=2)[0]
    r23 = run_property_suites((), ["lemma23"], trials=1000, seed=0)[0]
    dense = tuple(enumerate_dense_candidates(10, 7))
    r33 = run_property_suites(dense, ["lemma33"], a=2, b=2)[0]
    reports = [r21, r32, r23, r33]
    ok = all(r.status == "pass" for r in reports)
    assert _verdict(7, "lemma property suites", ok), [
        (r.theorem, r.counterexamples[:3]) for r in reports if r.status != "pass"]


def test_criterion_8_numerical_checks():
    failures = []
    for m in range(1, 201):
        if abs(spectral_radius(complete(m)).rho - (m - 1)) > 1e-10:
            failures.append(("complete", m))
    for n in (10, 50, 200):
        for a in (2, 3):
            g = h_graph(n, a)
            parts = [set(range(a - 1)), set(range(a - 1, n - 1)), {n - 1}]
            qr = quotient_spectral_radius(quotient_matrix(g, parts))
            pr = spectral_radius(g).rho
            if abs(qr - pr) > 1e-8:
                failures.append(("quotient", n, a, qr, pr))
    rng = random.Random(0)
    trials = 0
    while trials < 500:
        n = rng.randint(2, 10)
        pairs = [(i, j) for j in range(n) for i in range(j)]
        edges = [e for e in pairs if rng.random() < 0.5]
        missing = [e for e in pairs if e not in edges]
        if not missing:
            continue
        trials += 1
        g = from_edges(n, edges)
        g2 = from_edges(n, edges + [rng.choice(missing)])
        if spectral_radius(g2).rho < spectral_radius(g).rho - 1e-10:
            failures.append(("monotone", n, edges))
    assert _verdict(8, "numerical checks", not failures), failures[:5]
