# ruff: noqa: S101
from __future__ import annotations

import pytest

from gmpark.corpus import exhaustive_graphs
from gmpark.errors import GraphStructureError, MalformedInputError
from gmpark.multigraph import ColoredMultigraph, EdgeRef


def test_edge_ref_normalises_endpoints():
    edge = EdgeRef(3, 1, 2)
    assert edge.endpoints == (1, 3)
    assert str(edge) == "{1,3}_2"
    assert EdgeRef(2, 2).is_loop
    with pytest.raises(MalformedInputError):
        EdgeRef(1, 2, -1)


def test_from_edge_list_counts_parallel_edges_and_loops():
    graph = ColoredMultigraph.from_edge_list(2, [(1, 2), (2, 1), (2, 2)])
    assert graph.multiplicity(1, 2) == 2
    assert graph.loops(2) == 1
    assert graph.degree(2) == 4
    assert graph.edge_count == 3
    assert graph.edges == (EdgeRef(1, 2, 0), EdgeRef(1, 2, 1), EdgeRef(2, 2, 0))


@pytest.mark.parametrize(
    "n, pairs",
    [
        (3, [(1, 4)]),
        (0, []),
        (2, [(1, 2, 3)]),
    ],
)
def test_from_edge_list_rejects_bad_input(n, pairs):
    with pytest.raises(MalformedInputError):
        ColoredMultigraph.from_edge_list(n, pairs)


def test_asymmetric_table_is_rejected():
    with pytest.raises(MalformedInputError):
        ColoredMultigraph(2, ((0, 1), (0, 0)))


def test_cut_degrees(k3):
    assert k3.outdeg({1, 2}, 1) == 1
    assert k3.indeg({1, 2}, 1) == 1
    assert k3.outdeg({1}, 1) == 2
    assert k3.outdeg_mask(0b011, 1) == 1
    with pytest.raises(GraphStructureError):
        k3.outdeg({2, 3}, 1)


def test_indeg_requires_loop_free():
    graph = ColoredMultigraph.from_edge_list(2, [(1, 2), (1, 1)])
    with pytest.raises(GraphStructureError):
        graph.indeg({1, 2}, 1)


def test_connectivity_and_bridges(k3, path3, double_edge):
    assert k3.is_connected
    assert not ColoredMultigraph.from_edge_list(3, [(1, 2)]).is_connected
    assert all(path3.is_bridge(edge) for edge in path3.edges)
    assert not any(k3.is_bridge(edge) for edge in k3.edges)
    assert not double_edge.is_bridge(EdgeRef(1, 2, 0))


def test_delete_edge_compacts_colors(double_edge):
    reduced = double_edge.delete_edge(EdgeRef(1, 2, 0))
    assert reduced.multiplicity(1, 2) == 1
    assert reduced.edges == (EdgeRef(1, 2, 0),)
    with pytest.raises(GraphStructureError):
        double_edge.delete_edge(EdgeRef(1, 2, 2))


def test_contract_edge_keeps_larger_label(k3):
    contracted = k3.contract_edge(EdgeRef(1, 2))
    assert contracted.n == 2
    assert contracted.multiplicity(1, 2) == 2
    assert not contracted.has_loops


def test_contract_parallel_edge_leaves_loop(double_edge):
    contracted = double_edge.contract_edge(EdgeRef(1, 2, 1))
    assert contracted.n == 1
    assert contracted.loops(1) == 1


def test_contract_loop_is_rejected():
    graph = ColoredMultigraph.from_edge_list(2, [(1, 2), (2, 2)])
    with pytest.raises(GraphStructureError):
        graph.contract_edge(EdgeRef(2, 2))


def test_rooted_at_moves_root_to_last_label(path3):
    rooted = path3.rooted_at(2)
    assert rooted.multiplicity(1, 3) == 1
    assert rooted.multiplicity(2, 3) == 1
    assert rooted.multiplicity(1, 2) == 0


def test_induced_relabels_in_order(k3):
    sub = k3.induced({1, 3})
    assert sub.n == 2
    assert sub.multiplicity(1, 2) == 1


def test_key_is_row_major_table(double_edge):
    assert double_edge.key() == (2, 0, 2, 2, 0)
    assert double_edge.add_edge(1, 1).key() == (2, 1, 2, 2, 0)


def sweep_graphs(*, loops: bool = False):
    for n in (2, 3, 4):
        for graph in exhaustive_graphs(n, 2):
            yield graph
            if loops:
                yield graph.add_edge(1, 1).add_edge(n, n)


def test_delete_then_add_restores_multiplicities():
    for graph in sweep_graphs(loops=True):
        for edge in graph.edges:
            restored = graph.delete_edge(edge).add_edge(*edge.endpoints)
            assert restored == graph, f"{graph.key()} / {edge}"


def test_contract_removes_exactly_one_edge():
    for graph in sweep_graphs(loops=True):
        for edge in graph.edges:
            if edge.is_loop:
                continue
            contracted = graph.contract_edge(edge)
            assert contracted.n == graph.n - 1
            assert contracted.edge_count == graph.edge_count - 1, (graph.key(), edge)


def test_deleting_a_non_bridge_keeps_components():
    for graph in sweep_graphs():
        for edge in graph.edges:
            if edge.is_loop or graph.is_bridge(edge):
                continue
            assert graph.delete_edge(edge).components() == graph.components()


def test_indeg_and_outdeg_split_the_degree():
    for graph in sweep_graphs():
        for mask in range(1, 1 << graph.n):
            subset = {v for v in graph.vertices if mask >> (v - 1) & 1}
            for v in subset:
                split = graph.indeg(subset, v) + graph.outdeg(subset, v)
                assert split == graph.degree(v)
                assert graph.outdeg_mask(mask, v) == graph.outdeg(subset, v)
