# ruff: noqa: S101
from __future__ import annotations

import itertools

import pytest

from gmpark.corpus import exhaustive_graphs
from gmpark.errors import MalformedInputError
from gmpark.multigraph import ColoredMultigraph
from gmpark.parking import (
    alpha,
    complement_box,
    complement_of,
    enumerate_complements,
    enumerate_multiparking,
    is_complement,
    is_g_parking,
    is_multiparking,
    is_multiparking_burning,
    parking_box,
    root_profile,
)
from gmpark.structures import ComplementFunction, MultiparkingFunction, VertexRanking
from tests.conftest import complete_graph


def small_graphs():
    for n in (1, 2, 3):
        yield from exhaustive_graphs(n, 2)


def test_alpha():
    assert alpha({1, 2, 3}, 2) == 2
    assert alpha({1, 3}, 2) == 3
    assert alpha({1}, 2) is None


def test_k3_functions(k3):
    functions = enumerate_multiparking(k3, 3)
    assert [f.values for f in functions] == [(0, 0, -1), (0, 1, -1), (1, 0, -1)]
    assert [f.total for f in functions] == [-1, 0, 0]


@pytest.mark.parametrize("values, expected", [((0, 1, -1), True), ((1, 1, -1), False)])
def test_k3_membership(k3, values, expected):
    f = MultiparkingFunction(3, values)
    assert is_multiparking(k3, f) is expected
    assert is_multiparking_burning(k3, f) is expected
    assert is_g_parking(k3, f) is expected


@pytest.mark.parametrize("m, count", [(1, 7), (2, 5), (3, 3)])
def test_k3_counts_by_threshold(k3, m, count):
    assert len(enumerate_multiparking(k3, m)) == count


def test_single_vertex(single_vertex):
    assert [f.values for f in enumerate_multiparking(single_vertex, 1)] == [(-1,)]


def test_double_edge(double_edge):
    assert [f.values for f in enumerate_multiparking(double_edge, 2)] == [
        (0, -1),
        (1, -1),
    ]
    assert [f.values for f in enumerate_multiparking(double_edge, 1)] == [
        (-1, -1),
        (-1, 0),
        (-1, 1),
    ]


@pytest.mark.parametrize(
    "n, count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)]
)
def test_cayley_counts(n, count):
    assert len(enumerate_multiparking(complete_graph(n), n)) == count


def test_boxes(k3):
    assert parking_box(k3, 3) == [[0, 1], [0, 1], [-1, 0, 1]]
    assert complement_box(k3, 3) == [[1, 2], [1, 2], [1, 2, 3]]


def test_box_uses_singleton_bound_with_loops():
    graph = ColoredMultigraph.from_edge_list(2, [(1, 2), (1, 1)])
    assert parking_box(graph, 2) == [[0], [-1, 0]]


def test_subset_check_agrees_with_burning():
    """Both validity checks agree on every box candidate, for two rankings."""
    for graph in small_graphs():
        for m in graph.vertices:
            for values in itertools.product(*parking_box(graph, m)):
                f = MultiparkingFunction(m, values)
                expected = is_multiparking(graph, f)
                assert is_multiparking_burning(graph, f) == expected
                reverse = VertexRanking.reverse(graph.n)
                assert is_multiparking_burning(graph, f, reverse) == expected


def test_subset_check_agrees_with_burning_on_loops():
    graph = ColoredMultigraph.from_edge_list(3, [(1, 2), (2, 3), (1, 1), (3, 3)])
    for m in graph.vertices:
        for values in itertools.product(*parking_box(graph, m)):
            f = MultiparkingFunction(m, values)
            assert is_multiparking(graph, f) == is_multiparking_burning(graph, f)


def test_g_parking_matches_threshold_n():
    for graph in small_graphs():
        n = graph.n
        for values in itertools.product(*parking_box(graph, n)):
            f = MultiparkingFunction(n, values)
            assert is_g_parking(graph, f) == is_multiparking(graph, f)


def test_complement_lemma():
    for graph in small_graphs():
        for m in graph.vertices:
            for values in itertools.product(*parking_box(graph, m)):
                f = MultiparkingFunction(m, values)
                h = complement_of(graph, f)
                assert is_multiparking(graph, f) == is_complement(graph, h)
            assert len(enumerate_complements(graph, m)) == len(
                enumerate_multiparking(graph, m)
            )


def test_complement_of_k3(k3):
    h = complement_of(k3, MultiparkingFunction(3, (0, 1, -1)))
    assert h.values == (2, 1, 3)
    assert is_complement(k3, h)
    assert not is_complement(k3, ComplementFunction(3, (1, 1, 3)))


def test_root_profile(k3, double_edge):
    profile = root_profile(k3, 3)
    assert profile.absolute == {3}
    assert profile.relative == set()
    assert profile.never == {1, 2}

    profile = root_profile(k3, 2)
    assert 2 in profile.absolute
    assert profile.relative == {3}
    assert profile.never == {1}

    profile = root_profile(double_edge, 1)
    assert profile.absolute == {1}
    assert profile.relative == {2}


def test_malformed_functions(k3):
    with pytest.raises(MalformedInputError):
        MultiparkingFunction(3, (0, -2, -1))
    with pytest.raises(MalformedInputError):
        MultiparkingFunction(4, (0, 0, -1))
    with pytest.raises(MalformedInputError):
        is_multiparking(k3, MultiparkingFunction(2, (0, -1)))
    with pytest.raises(MalformedInputError):
        enumerate_multiparking(k3, 0)
