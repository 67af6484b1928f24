# ruff: noqa: S101
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmpark.bijection import (
    burn,
    enumerate_color_forests,
    forest_sum_stats,
    layout,
    phi,
    psi,
)
from gmpark.corpus import exhaustive_graphs, random_graph
from gmpark.errors import InvalidForestError, InvalidFunctionError
from gmpark.multigraph import ColoredMultigraph, EdgeRef
from gmpark.parking import enumerate_multiparking
from gmpark.structures import ColorForest, MultiparkingFunction, VertexRanking


def rankings(n: int) -> list[VertexRanking]:
    return [
        VertexRanking.identity(n),
        VertexRanking.reverse(n),
        VertexRanking.shuffled(n, random.Random(n)),
    ]


def small_graphs():
    for n in (1, 2, 3):
        yield from exhaustive_graphs(n, 2)


def test_phi_k3(k3):
    forest, order = phi(k3, 3, None, MultiparkingFunction(3, (0, 1, -1)))
    assert str(forest) == "{{1,3}_0,{1,2}_0}"
    assert str(order) == "(3,1,2)"


def test_psi_k3(k3):
    forest = ColorForest(3, 3, (EdgeRef(1, 3), EdgeRef(1, 2)))
    f, order = psi(k3, 3, None, forest)
    assert f.values == (0, 1, -1)
    assert order.pi == (3, 1, 2)


def test_phi_rejects_invalid_function(k3):
    with pytest.raises(InvalidFunctionError):
        phi(k3, 3, None, MultiparkingFunction(3, (1, 1, -1)))
    result = burn(k3, MultiparkingFunction(3, (1, 1, -1)))
    assert not result.valid
    assert result.forest is None
    assert result.reason


def test_phi_uses_edge_colors(double_edge):
    forest, order = phi(double_edge, 2, None, MultiparkingFunction(2, (1, -1)))
    assert forest.edges == (EdgeRef(1, 2, 1),)
    assert order.pi == (2, 1)


def test_burning_restarts_at_next_root(k3):
    forest, order = phi(k3, 2, None, MultiparkingFunction(2, (0, -1, -1)))
    assert forest.edges == (EdgeRef(1, 2, 0),)
    assert order.pi == (2, 1, 3)
    assert forest.sigma == 2
    assert forest.roots == {2, 3}


def test_k3_forests(k3):
    forests = enumerate_color_forests(k3, 3)
    assert len(forests) == 3
    assert set(forests) == {
        ColorForest(3, 3, (EdgeRef(1, 3), EdgeRef(2, 3))),
        ColorForest(3, 3, (EdgeRef(1, 2), EdgeRef(2, 3))),
        ColorForest(3, 3, (EdgeRef(1, 2), EdgeRef(1, 3))),
    }


def test_forest_equality_ignores_edge_order():
    first = ColorForest(3, 3, (EdgeRef(1, 3), EdgeRef(1, 2)))
    second = ColorForest(3, 3, (EdgeRef(2, 1), EdgeRef(3, 1)))
    assert first == second
    assert hash(first) == hash(second)
    assert str(first) != str(second)


@pytest.mark.parametrize(
    "edges, m",
    [
        (((1, 2), (2, 3), (1, 3)), 3),
        (((1, 2),), 3),
        (((1, 2, 1),), 2),
        (((1, 1),), 1),
    ],
)
def test_invalid_forests(k3, edges, m):
    forest = ColorForest(3, m, tuple(EdgeRef(*edge) for edge in edges))
    with pytest.raises(InvalidForestError):
        psi(k3, m, None, forest)


def test_forest_threshold_must_match(k3):
    forest = ColorForest(3, 2, (EdgeRef(1, 3), EdgeRef(1, 2)))
    with pytest.raises(InvalidForestError):
        layout(k3, 3, None, forest)


def test_round_trips_on_small_corpus():
    """phi and psi are mutually inverse and preserve the order, for every m and ranking."""
    for graph in small_graphs():
        for m in graph.vertices:
            functions = enumerate_multiparking(graph, m)
            forests = enumerate_color_forests(graph, m)
            assert len(functions) == len(forests)
            for tau in rankings(graph.n):
                images = set()
                for f in functions:
                    forest, order = phi(graph, m, tau, f)
                    back, back_order = psi(graph, m, tau, forest)
                    assert back == f
                    assert back_order == order
                    images.add(forest)
                assert images == set(forests)


def test_forest_sums_balance():
    for graph in small_graphs():
        for m in graph.vertices:
            for forest in enumerate_color_forests(graph, m):
                stats = forest_sum_stats(graph, m, None, forest)
                assert stats.balanced


def test_bijection_with_loops():
    graph = ColoredMultigraph.from_edge_list(3, [(1, 2), (1, 2), (2, 3), (2, 2)])
    for m in graph.vertices:
        functions = enumerate_multiparking(graph, m)
        assert len(functions) == len(enumerate_color_forests(graph, m))
        for f in functions:
            forest, _ = phi(graph, m, None, f)
            assert psi(graph, m, None, forest)[0] == f


@settings(max_examples=20, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    n=st.integers(min_value=3, max_value=4),
    data=st.data(),
)
def test_round_trip_on_random_graphs(seed, n, data):
    graph = random_graph(n, 2, random.Random(seed))
    m = data.draw(st.integers(min_value=1, max_value=n))
    tau = VertexRanking(tuple(data.draw(st.permutations(range(1, n + 1)))))
    for forest in enumerate_color_forests(graph, m):
        f, order = psi(graph, m, tau, forest)
        again, again_order = phi(graph, m, tau, f)
        assert again == forest
        assert again_order == order
