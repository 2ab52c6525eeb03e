from fractions import Fraction

import pytest

from hatlab.extensions import (
    ExtensionError,
    U_from_f,
    build_first_kind,
    build_second_kind,
    leading_f,
    leading_f_second,
    reduced_P_first,
    reduced_P_second,
)
from hatlab.graphs import make_graph, path_graph
from hatlab.indpoly import eval_P
from hatlab.poly import UnivariatePoly


def _path(n):
    return path_graph([f"p{i}" for i in range(n)])


def test_build_first_kind_sizes_and_edges():
    g = build_first_kind(_path(3), [2, 3, 2])
    assert len(g.vertices) == 7
    # the base vertex is glued into its clique
    assert g.has_edge("p0", "p0#1")
    assert g.has_edge("p0", "p1")
    assert not g.has_edge("p0#1", "p1")


def test_build_second_kind_bridges_marked_vertices():
    g = build_second_kind(_path(3), [2, 3, 2])
    assert len(g.vertices) == 7
    # each bridge uses a fresh marked vertex per clique
    assert g.has_edge("p0", "p1")
    assert g.has_edge("p1#1", "p2")


def test_build_second_kind_rejects_size_below_degree():
    with pytest.raises(ExtensionError, match="below its degree"):
        build_second_kind(_path(3), [1, 1, 1])


def test_reduced_P_first_matches_direct_evaluation():
    base = _path(4)
    sizes = [2, 3, 2, 4]
    x = [Fraction(1, 2), Fraction(1, 3), Fraction(2), Fraction(1, 5)]
    built = build_first_kind(base, sizes)
    point = {}
    for i, v in enumerate(base.vertices):
        point[v] = x[i]
        for t in range(1, sizes[i]):
            point[f"{v}#{t}"] = x[i]
    assert reduced_P_first(base, sizes, x) == eval_P(built, point)


def test_reduced_P_second_matches_direct_evaluation():
    base = _path(3)
    sizes = [2, 3, 2]
    x = [Fraction(1, 2), Fraction(1, 4), Fraction(3)]
    built = build_second_kind(base, sizes)
    point = {}
    for i, v in enumerate(base.vertices):
        point[v] = x[i]
        for t in range(1, sizes[i]):
            point[f"{v}#{t}"] = x[i]
    assert reduced_P_second(base, sizes, x) == eval_P(built, point)


def test_leading_f_counts_full_independent_sets():
    base = _path(3)
    sizes = [3, 3, 3]
    built = build_first_kind(base, sizes)
    n = len(base.vertices)
    from hatlab.graphs import independent_sets

    expect = sum(1 for s in independent_sets(built, 24) if len(s) == n)
    assert leading_f(base, sizes) == expect


def test_leading_f_second_on_path():
    # P2 with sizes (a, b): independent pairs avoiding the single bridge
    assert leading_f_second(_path(2), [3, 3]) == 8


def test_U_from_f_identity_extension_is_base_U():
    base = _path(4)
    from hatlab.indpoly import univariate_U

    assert U_from_f(base, [1, 1, 1, 1]) == univariate_U(base)


def test_U_from_f_single_clique():
    # K_a as an extension of K_1: U = 1 - a x
    base = _path(1)
    assert U_from_f(base, [4]) == UnivariatePoly.of(1, -4)


def test_non_pathlike_ordering_falls_back():
    # a star ordered center-second is not suffix-contiguous at the leaves
    star = make_graph(
        ["a", "s", "b", "c"], {("a", "s"), ("b", "s"), ("c", "s")}
    )
    sizes = [2, 2, 2, 3]
    x = [Fraction(1, 2)] * 4
    built = build_first_kind(star, sizes)
    point = {}
    for i, v in enumerate(star.vertices):
        point[v] = x[i]
        for t in range(1, sizes[i]):
            point[f"{v}#{t}"] = x[i]
    assert reduced_P_first(star, sizes, x) == eval_P(built, point)
