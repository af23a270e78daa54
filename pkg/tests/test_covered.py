"""The covered decision: component classes, theta/epsilon, both engines."""

import pytest

from abcover import (ComponentClass, InvalidParameterError, ResourceLimitError,
                     classify_component, complete, count_odd, cycle, empty,
                     enumerate_all, epsilon, from_edges, h_graph, has_ab_factor,
                     is_ab_covered_definitional, is_ab_covered_structural,
                     is_matching_covered, join, path, theta)

H63 = h_graph(6, 3)  # attachment pair {0,1}, block {2,3,4}, pendant 5
K3_3K1 = join(complete(3), empty(3))


def test_classify_component():
    # K_3 block of H_{6,3} with T = {pendant}: no T-edges, odd order
    assert classify_component(H63, {2, 3, 4}, {5}, 1, 1) is ComponentClass.ODD
    # triangle with one edge into T at a = b = 2: parity of 1 + 6
    g = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert classify_component(g, {0, 1, 2}, {3}, 2, 2) is ComponentClass.ODD
    assert classify_component(g, {0, 1, 2}, set(), 2, 2) is ComponentClass.EVEN
    # a < b: everything is neutral
    assert classify_component(H63, {2, 3, 4}, {5}, 1, 2) is ComponentClass.NEUTRAL


def test_count_odd():
    assert count_odd(H63, {0, 1}, {5}, 1, 1) == 1
    assert count_odd(H63, {0, 1}, {5}, 1, 2) == 0
    assert count_odd(complete(3), set(), set(), 1, 1) == 1
    with pytest.raises(InvalidParameterError):
        count_odd(H63, {0}, {0}, 1, 1)


def test_theta():
    assert theta(H63, {0, 1}, {5}, 1, 1) == 0
    assert theta(complete(3), set(), set(), 1, 1) == -1
    for g in (cycle(5), complete(4)):
        assert theta(g, set(), set(), 2, 2) == -count_odd(g, set(), set(), 2, 2)


def test_epsilon():
    # S carries an edge
    assert epsilon(H63, {0, 1}, {5}, 1, 1) == 2
    assert epsilon(H63, {0, 1}, set(), 1, 2) == 2
    # a < b with empty S
    assert epsilon(H63, set(), {5}, 1, 2) == 0
    # a < b, independent S, a component adjacent to it
    assert epsilon(path(3), {1}, set(), 1, 2) == 1
    with pytest.raises(InvalidParameterError):
        epsilon(H63, {0}, set(), 2, 1)


def test_structural_known_cases():
    v = is_ab_covered_structural(H63, 1, 1)
    assert not v.covered
    # lexicographically first violating pair in base-3 scan order
    w = v.structural_witness
    assert (w.S, w.T, w.theta, w.epsilon) == (frozenset({0, 1}), frozenset(), 0, 2)
    assert is_ab_covered_structural(cycle(4), 1, 1).covered
    assert not is_ab_covered_structural(K3_3K1, 1, 1).covered
    assert not is_ab_covered_structural(h_graph(10, 2), 2, 2).covered


def test_structural_witness_replays():
    for g in enumerate_all(5):
        for a, b in [(1, 1), (1, 2), (2, 2)]:
            v = is_ab_covered_structural(g, a, b)
            if v.covered:
                continue
            w = v.structural_witness
            assert theta(g, w.S, w.T, a, b) == w.theta
            assert epsilon(g, w.S, w.T, a, b) == w.epsilon
            assert w.theta < w.epsilon


def test_structural_limit():
    with pytest.raises(ResourceLimitError):
        is_ab_covered_structural(empty(17), 1, 1)


def test_definitional_known_cases():
    v = is_ab_covered_definitional(H63, 1, 1)
    assert not v.covered and v.edge_witness == (0, 1)
    assert is_ab_covered_definitional(complete(7), 1, 2).covered
    assert is_ab_covered_definitional(empty(5), 1, 1).covered
    assert is_ab_covered_structural(empty(5), 1, 1).covered


def test_matching_covered():
    assert is_matching_covered(cycle(6)).covered
    assert not is_matching_covered(h_graph(8, 3)).covered
    assert is_matching_covered(complete(4)).covered


def test_covered_implies_factor_and_converse_fails():
    # Over every class with at least one edge at n <= 6: covered graphs
    # have a factor, and some factor-admitting graph is not covered.
    for a, b in [(1, 1), (2, 2)]:
        converse_gap = []
        for n in range(2, 7):
            if (n * a) % 2:
                continue
            for g in enumerate_all(n):
                if g.edge_count == 0:
                    continue
                covered = is_ab_covered_structural(g, a, b).covered
                factor = has_ab_factor(g, a, b)
                if covered:
                    assert factor
                elif factor:
                    converse_gap.append(g)
        assert converse_gap  # e.g. P_4 at (1,1): a perfect matching exists
        # but the middle edge lies in none


def test_invalid_parameters():
    with pytest.raises(InvalidParameterError):
        is_ab_covered_structural(cycle(4), 0, 1)
    with pytest.raises(InvalidParameterError):
        is_ab_covered_definitional(cycle(4), 2, 1)
