"""Factor existence: deficiency criterion vs explicit search."""

import random

import pytest

from abcover import (DegreeSpec, InvalidParameterError, ResourceLimitError,
                     complete, cycle, empty, enumerate_all, find_factor,
                     from_edges, h_graph, has_ab_factor,
                     has_factor_containing_edge, has_gf_factor,
                     lovasz_deficiency, q_hat)
from abcover.factor import (factor_through_edge_deficiency,
                            factor_through_edge_search)

ONE = DegreeSpec.uniform


def test_degree_spec_validation():
    with pytest.raises(InvalidParameterError):
        DegreeSpec((1,), (1, 1))
    with pytest.raises(InvalidParameterError):
        DegreeSpec((2,), (1,))
    with pytest.raises(InvalidParameterError):
        q_hat(complete(3), ONE(4, 1, 1), set(), set())


def test_qhat_known_values():
    assert q_hat(complete(3), ONE(3, 1, 1), set(), set()) == 1
    assert q_hat(complete(4), ONE(4, 1, 1), {0}, {1}) == 0
    # strict g < f anywhere in a component disqualifies it
    assert q_hat(complete(3), ONE(3, 1, 2), set(), set()) == 0


def test_deficiency_known_values():
    assert lovasz_deficiency(complete(3), ONE(3, 1, 1), set(), set()) == -1
    assert lovasz_deficiency(complete(4), ONE(4, 1, 1), {0}, {1}) == 2
    n = 5
    assert lovasz_deficiency(complete(n), DegreeSpec((0,) * n, (n,) * n),
                             set(), set()) == 0
    with pytest.raises(InvalidParameterError):
        lovasz_deficiency(complete(4), ONE(4, 1, 1), {0}, {0})


def test_has_gf_factor_known_cases():
    ok, cert = has_gf_factor(complete(3), ONE(3, 1, 1))
    assert not ok
    assert (cert.S, cert.T, cert.value) == (frozenset(), frozenset(), -1)
    ok, cert = has_gf_factor(cycle(5), ONE(5, 2, 2))
    assert ok and cert is None
    ok, _ = has_gf_factor(h_graph(10, 2), ONE(10, 2, 2))
    assert not ok


def test_certificate_replays():
    for g in enumerate_all(5):
        for a, b in [(1, 1), (1, 2), (2, 2)]:
            spec = ONE(g.n, a, b)
            ok, cert = has_gf_factor(g, spec)
            if not ok:
                assert lovasz_deficiency(g, spec, cert.S, cert.T) == cert.value
                assert cert.value < 0


def test_scan_limit():
    with pytest.raises(ResourceLimitError):
        has_gf_factor(empty(17), ONE(17, 0, 1))
    with pytest.raises(ResourceLimitError):
        has_gf_factor(empty(5), ONE(5, 0, 1), limit=4)
    assert has_gf_factor(empty(5), ONE(5, 0, 1), limit=5)[0]


def test_find_factor_known_cases():
    w = find_factor(complete(4), ONE(4, 1, 1))
    assert w is not None and len(w.edges) == 2
    assert find_factor(cycle(5), ONE(5, 1, 1)) is None
    w = find_factor(complete(7), ONE(7, 1, 2), forced=[(0, 1)])
    assert w is not None and (0, 1) in w.edges


def test_find_factor_witness_is_valid():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 7)
        g = from_edges(n, [(i, j) for j in range(n) for i in range(j)
                           if rng.random() < 0.6])
        a, b = sorted((rng.randint(1, 2), rng.randint(1, 3)))
        spec = ONE(n, a, b)
        w = find_factor(g, spec)
        if w is None:
            continue
        deg = [0] * n
        for u, v in w.edges:
            assert g.has_edge(u, v)
            deg[u] += 1
            deg[v] += 1
        assert all(a <= deg[v] <= b for v in range(n))


def test_find_factor_argument_validation():
    g = cycle(4)
    with pytest.raises(InvalidParameterError):
        find_factor(g, ONE(4, 1, 1), forced=[(0, 2)])
    with pytest.raises(InvalidParameterError):
        find_factor(g, ONE(4, 1, 1), forced=[(0, 1)], forbidden=[(1, 0)])
    with pytest.raises(ResourceLimitError):
        find_factor(complete(13), ONE(13, 1, 1))


def test_forbidden_edges_respected():
    w = find_factor(cycle(4), ONE(4, 1, 1), forbidden=[(0, 1)])
    assert w is not None and (0, 1) not in w.edges and len(w.edges) == 2


def test_search_agrees_with_deficiency():
    # The two independent routes decide identically over every class and
    # every edge at small orders.
    for n in range(2, 6):
        for g in enumerate_all(n):
            for a, b in [(1, 1), (1, 2), (2, 2)]:
                for e in g.edges():
                    assert (factor_through_edge_search(g, a, b, e)
                            == factor_through_edge_deficiency(g, a, b, e)), (g, a, b, e)


def test_factor_through_edge_known_cases():
    for e in cycle(4).edges():
        assert has_factor_containing_edge(cycle(4), 1, 1, e)
    assert not has_factor_containing_edge(h_graph(6, 3), 1, 1, (0, 1))
    g = h_graph(10, 2)
    for e in g.edges()[:5]:
        assert not has_factor_containing_edge(g, 2, 2, e, method="deficiency")
    with pytest.raises(InvalidParameterError):
        has_factor_containing_edge(cycle(4), 1, 1, (0, 1), method="magic")


def test_parity_obstruction():
    # a = b with n*a odd never admits a factor
    for n in (3, 5, 7):
        assert not has_ab_factor(complete(n), 1, 1)


def test_edge_addition_monotone():
    # a factor of G is a factor of G plus any edge
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(3, 7)
        pairs = [(i, j) for j in range(n) for i in range(j)]
        edges = [e for e in pairs if rng.random() < 0.5]
        missing = [e for e in pairs if e not in edges]
        if not missing:
            continue
        g = from_edges(n, edges)
        a, b = sorted((rng.randint(1, 2), rng.randint(1, 3)))
        if has_ab_factor(g, a, b):
            g2 = from_edges(n, edges + [rng.choice(missing)])
            assert has_ab_factor(g2, a, b)
