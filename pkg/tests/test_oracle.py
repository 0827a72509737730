"""The subset-enumeration oracle, and detector agreement on random inputs.

The oracle is the independent ground truth for the detectors: it decides
pattern presence by checking every vertex subset against first-principles
shape recognizers, with no shared search code.
"""

import random

import pytest

from burling import (
    Graph, CapError, InvalidArgumentError,
    oracle_contains, oracle_scan, ORACLE_MAX,
    find_triangle, find_hole, find_wheel, find_theta, find_fan,
    find_guarded_fan, find_mountable_path, validate_witness,
)

from conftest import make_random_graph, make_random_graft


def test_cap_enforced():
    g = Graph.from_edges(ORACLE_MAX + 1, [])
    with pytest.raises(CapError):
        oracle_contains(g, None, "triangle")


def test_unknown_kind_rejected(c5):
    with pytest.raises(InvalidArgumentError):
        oracle_contains(c5, None, "square")


def test_tip_kinds_need_tips(c5):
    with pytest.raises(InvalidArgumentError):
        oracle_contains(c5, None, "mountable-path")
    assert oracle_contains(c5, frozenset(), "mountable-path") is None


def test_planted_patterns_found(wheel6, c5):
    assert oracle_contains(wheel6, None, "triangle") is not None
    assert oracle_contains(wheel6, None, "wheel") is not None
    assert oracle_contains(c5, None, "hole") is not None
    assert oracle_contains(c5, None, "triangle") is None
    assert oracle_contains(c5, None, "wheel") is None
    k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert oracle_contains(k23, None, "theta") is not None
    fan = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2)])
    assert oracle_contains(fan, None, "fan") is not None
    assert oracle_contains(fan, frozenset({0, 3}), "guarded-fan") is not None
    assert oracle_contains(fan, frozenset({0}), "guarded-fan") is None
    p5 = Graph.from_edges(5, [(i, i + 1) for i in range(4)])
    assert oracle_contains(p5, frozenset({0, 2, 4}), "mountable-path") is not None


def test_oracle_witnesses_validate():
    rng = random.Random(41)
    seen = 0
    for _ in range(80):
        gf = make_random_graft(rng, 8)
        for kind in ("triangle", "hole", "wheel", "theta", "fan",
                     "guarded-fan", "mountable-path"):
            w = oracle_contains(gf.graph, gf.tips, kind)
            if w is not None:
                assert validate_witness(gf.graph, gf.tips, w)
                seen += 1
    assert seen > 50


def test_scan_matches_single_queries():
    rng = random.Random(43)
    for _ in range(50):
        gf = make_random_graft(rng, 8)
        sc = oracle_scan(gf.graph, gf.tips)
        for kind, flag in sc.items():
            assert flag == (oracle_contains(gf.graph, gf.tips, kind)
                            is not None), kind


def test_detectors_agree_with_oracle_on_random_graphs():
    rng = random.Random(47)
    for _ in range(300):
        g = make_random_graph(rng, rng.randint(1, 9))
        sc = oracle_scan(g)
        assert sc["triangle"] == (find_triangle(g) is not None)
        assert sc["hole"] == (next(find_hole(g), None) is not None)
        assert sc["wheel"] == (find_wheel(g, 3) is not None)
        assert sc["theta"] == (find_theta(g) is not None)
        assert sc["fan"] == (find_fan(g, 3) is not None)


def test_detectors_agree_with_oracle_on_random_grafts():
    rng = random.Random(53)
    for _ in range(150):
        gf = make_random_graft(rng, 9)
        sc = oracle_scan(gf.graph, gf.tips)
        assert sc["guarded-fan"] == (find_guarded_fan(gf) is not None)
        assert sc["mountable-path"] == (find_mountable_path(gf) is not None)


def test_wheel_k_parameter_respected(wheel6):
    assert oracle_contains(wheel6, None, "wheel", k=3) is not None
    assert oracle_contains(wheel6, None, "wheel", k=4) is None
    assert find_wheel(wheel6, 4) is None
