from fractions import Fraction

import pytest

from hatlab.graphs import complete_graph, make_graph, path_graph
from hatlab.indpoly import (
    eval_P,
    eval_P_brute,
    eval_Z,
    univariate_P,
    univariate_U,
    z_corner_evaluator,
)
from hatlab.poly import UnivariatePoly

HALF = Fraction(1, 2)


def test_p_single_vertex():
    g = make_graph(["a"], set())
    assert eval_P(g, {"a": Fraction(3)}) == 4


def test_p_edge():
    g = complete_graph(["a", "b"])
    # P = 1 + x_a + x_b
    assert eval_P(g, {"a": Fraction(2), "b": Fraction(5)}) == 8


def test_p_two_isolated_vertices_factorizes():
    g = make_graph(["a", "b"], set())
    assert eval_P(g, {"a": Fraction(1), "b": Fraction(2)}) == 6


def test_p_p4_univariate():
    u = univariate_P(path_graph(["a", "b", "c", "d"]))
    # 8 independent sets: 1 + 4x + 3x^2
    assert u == UnivariatePoly.of(1, 4, 3)


def test_u_p4():
    u = univariate_U(path_graph(["a", "b", "c", "d"]))
    assert u == UnivariatePoly.of(1, -4, 3)


def test_z_is_p_at_negated_point():
    g = path_graph(["a", "b", "c"])
    x = {"a": HALF, "b": Fraction(1, 3), "c": HALF}
    assert eval_Z(g, x) == eval_P(g, {v: -xv for v, xv in x.items()})


def test_z_vanishes_at_precise_clique_point():
    g = complete_graph(["a", "b", "c"])
    r = {v: Fraction(1, 3) for v in "abc"}
    assert eval_Z(g, r) == 0


def test_recurrence_matches_brute_force():
    g = make_graph(
        ["a", "b", "c", "d", "e"],
        {("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("a", "c")},
    )
    x = {v: Fraction(i + 1, 3) for i, v in enumerate(g.vertices)}
    assert eval_P(g, x) == eval_P_brute(g, x)


def test_corner_evaluator_subsets():
    g = complete_graph(["a", "b"])
    r = {"a": HALF, "b": HALF}
    ev = z_corner_evaluator(g, r)
    # full set: Z = 1 - 1/2 - 1/2 = 0; singletons: 1/2 each
    assert ev.value(frozenset({0, 1})) == 0
    assert ev.value(frozenset({0})) == HALF
    assert ev.value(frozenset()) == 1


def test_missing_vertex_value_raises():
    g = complete_graph(["a", "b"])
    with pytest.raises(Exception):
        eval_P(g, {"a": Fraction(1)})
