# ruff: noqa: S101
from __future__ import annotations

import pytest

from gmpark.multigraph import ColoredMultigraph

K3_DOC = '{"n": 3, "edges": [[1,2],[1,3],[2,3]]}'
DOUBLE_EDGE_DOC = '{"n": 2, "edges": [[1,2],[1,2]]}'
PATH3_DOC = '{"n": 3, "edges": [[1,2],[2,3]]}'


def complete_graph(n: int) -> ColoredMultigraph:
    return ColoredMultigraph.from_edge_list(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )


@pytest.fixture
def k3() -> ColoredMultigraph:
    return complete_graph(3)


@pytest.fixture
def k4() -> ColoredMultigraph:
    return complete_graph(4)


@pytest.fixture
def double_edge() -> ColoredMultigraph:
    return ColoredMultigraph.from_edge_list(2, [(1, 2), (1, 2)])


@pytest.fixture
def path3() -> ColoredMultigraph:
    return ColoredMultigraph.from_edge_list(3, [(1, 2), (2, 3)])


@pytest.fixture
def single_vertex() -> ColoredMultigraph:
    return ColoredMultigraph.single_vertex()
