# ruff: noqa: S101
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmpark.bijection import enumerate_color_forests
from gmpark.corpus import exhaustive_graphs, random_graph
from gmpark.errors import GraphStructureError
from gmpark.genfunc import (
    RedundancyClass,
    classify_redundant,
    complement_polynomial,
    edge_partition_balance,
    is_redundant_by_deletion,
    parking_polynomial,
    reciprocity_check,
    redundancy_polynomial,
    redundancy_report,
)
from gmpark.multigraph import ColoredMultigraph, EdgeRef
from gmpark.polynomial import LaurentPolynomial
from gmpark.structures import ColorForest, VertexRanking


def small_graphs():
    for n in (1, 2, 3):
        yield from exhaustive_graphs(n, 2)


def test_k3_polynomials(k3):
    assert str(parking_polynomial(k3, 3)) == "q^-1 + 2"
    assert str(complement_polynomial(k3, 3)) == "q^4 + 2*q^3"
    assert str(redundancy_polynomial(k3, 3)) == "q + 2"
    assert str(redundancy_polynomial(k3, 3, VertexRanking.reverse(3))) == "q + 2"


def test_double_edge_polynomials(double_edge):
    assert str(parking_polynomial(double_edge, 2)) == "q^-1 + 1"
    assert str(complement_polynomial(double_edge, 2)) == "q^3 + q^2"
    assert str(redundancy_polynomial(double_edge, 2)) == "q + 1"
    assert str(parking_polynomial(double_edge, 1)) == "q^-2 + q^-1 + 1"


def test_single_vertex_polynomials(single_vertex):
    assert parking_polynomial(single_vertex, 1) == LaurentPolynomial({-1: 1})
    assert redundancy_polynomial(single_vertex, 1) == LaurentPolynomial({0: 1})


def test_parking_count_at_one(k4):
    assert parking_polynomial(k4, 4).evaluate(1) == 16


def test_complement_requires_loop_free():
    graph = ColoredMultigraph.from_edge_list(2, [(1, 2), (2, 2)])
    with pytest.raises(GraphStructureError):
        complement_polynomial(graph, 2)


def test_redundancy_classes_on_k3(k3):
    inside = ColorForest(3, 3, (EdgeRef(1, 3), EdgeRef(2, 3)))
    kind = classify_redundant(k3, inside, None, EdgeRef(1, 2))
    assert kind is RedundancyClass.INSIDE_TREE
    report = redundancy_report(k3, 3, None, inside)
    assert report.classes == {EdgeRef(1, 2): RedundancyClass.INSIDE_TREE}
    assert report.g == (0, 1, 0)

    chain = ColorForest(3, 3, (EdgeRef(1, 3), EdgeRef(1, 2)))
    kind = classify_redundant(k3, chain, None, EdgeRef(2, 3))
    assert kind is RedundancyClass.NOT_REDUNDANT
    assert redundancy_report(k3, 3, None, chain).redundant_edges == []


def test_root_classes(k3):
    empty = ColorForest(3, 1, ())
    kind = classify_redundant(k3, empty, None, EdgeRef(1, 2))
    assert kind is RedundancyClass.BOTH_ROOTS

    single = ColorForest(3, 2, (EdgeRef(1, 2),))
    kind = classify_redundant(k3, single, None, EdgeRef(1, 3))
    assert kind is RedundancyClass.ROOT_AFTER
    kind = classify_redundant(k3, single, None, EdgeRef(2, 3))
    assert kind is RedundancyClass.BOTH_ROOTS


def test_parallel_and_loop_classes():
    graph = ColoredMultigraph.from_edge_list(2, [(1, 2), (1, 2), (1, 1)])
    low = ColorForest(2, 2, (EdgeRef(1, 2, 0),))
    high = ColorForest(2, 2, (EdgeRef(1, 2, 1),))
    kind = classify_redundant(graph, low, None, EdgeRef(1, 2, 1))
    assert kind is RedundancyClass.HIGHER_PARALLEL
    kind = classify_redundant(graph, high, None, EdgeRef(1, 2, 0))
    assert kind is RedundancyClass.NOT_REDUNDANT
    kind = classify_redundant(graph, low, None, EdgeRef(1, 1))
    assert kind is RedundancyClass.LOOP
    assert redundancy_report(graph, 2, None, low).g == (2, 0)


def test_classify_rejects_forest_and_missing_edges(k3):
    forest = ColorForest(3, 3, (EdgeRef(1, 3), EdgeRef(2, 3)))
    with pytest.raises(GraphStructureError):
        classify_redundant(k3, forest, None, EdgeRef(1, 3))
    with pytest.raises(GraphStructureError):
        classify_redundant(k3, forest, None, EdgeRef(1, 2, 1))


def test_classes_match_deletion():
    """An edge is classified redundant exactly when deleting it leaves the function unchanged."""
    for graph in small_graphs():
        for m in graph.vertices:
            for forest in enumerate_color_forests(graph, m):
                for tau in (None, VertexRanking.reverse(graph.n)):
                    report = redundancy_report(graph, m, tau, forest)
                    for edge, kind in report.classes.items():
                        assert kind.redundant == is_redundant_by_deletion(
                            graph, tau, forest, edge
                        )


def test_edge_partition():
    for graph in small_graphs():
        for m in graph.vertices:
            for forest in enumerate_color_forests(graph, m):
                assert edge_partition_balance(graph, m, None, forest)


def test_reciprocity_on_small_corpus():
    for graph in small_graphs():
        for m in graph.vertices:
            report = reciprocity_check(graph, m)
            assert report.passed
            assert complement_polynomial(graph, m) == report.complement_direct


@settings(max_examples=15, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    data=st.data(),
)
def test_redundancy_polynomial_ignores_ranking(seed, data):
    graph = random_graph(4, 2, random.Random(seed))
    m = data.draw(st.integers(min_value=1, max_value=4))
    tau = VertexRanking(tuple(data.draw(st.permutations(range(1, 5)))))
    assert redundancy_polynomial(graph, m, tau) == redundancy_polynomial(graph, m)
    assert reciprocity_check(graph, m, tau).passed
