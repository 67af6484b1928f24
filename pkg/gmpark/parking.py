"""Validation and enumeration of (G,m)-multiparking functions and their complements.

Vertex subsets are bitmasks: bit ``k`` stands for vertex ``k+1``. Subsets are
visited in increasing mask order.
"""

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from gmpark.bijection import burn
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph
from gmpark.structures import (
    ComplementFunction,
    MultiparkingFunction,
    VertexRanking,
    alpha,
    check_threshold,
)

logger = logger.getChild("parking")

__all__ = [
    "RootProfile",
    "alpha",
    "complement_box",
    "complement_of",
    "enumerate_complements",
    "enumerate_multiparking",
    "is_complement",
    "is_g_parking",
    "is_multiparking",
    "is_multiparking_burning",
    "parking_box",
    "root_profile",
]

SubsetTest = Callable[[ColoredMultigraph, Sequence[int], int, int], bool]


def _members(mask: int) -> Iterator[int]:
    vertex = 1
    while mask:
        if mask & 1:
            yield vertex
        mask >>= 1
        vertex += 1


def _alpha_mask(mask: int, m: int) -> int | None:
    high = mask >> (m - 1)
    if not high:
        return None
    return (high & -high).bit_length() + m - 1


def _parking_subset_ok(
    graph: ColoredMultigraph, values: Sequence[int], mask: int, m: int
) -> bool:
    """Clause (A) or clause (B) for the subset ``mask``."""
    root = _alpha_mask(mask, m)
    if root is not None and values[root - 1] == -1:
        return True
    return any(
        0 <= values[i - 1] < graph.outdeg_mask(mask, i) for i in _members(mask)
    )


def _complement_subset_ok(
    graph: ColoredMultigraph, values: Sequence[int], mask: int, m: int
) -> bool:
    """Clause (Ā) or clause (B̄) for the subset ``mask``."""
    root = _alpha_mask(mask, m)
    if root is not None and values[root - 1] == graph.degree(root) + 1:
        return True
    for i in _members(mask):
        degree = graph.degree(i)
        inside = degree - graph.outdeg_mask(mask, i)
        if inside < values[i - 1] <= degree:
            return True
    return False


def is_multiparking(graph: ColoredMultigraph, f: MultiparkingFunction) -> bool:
    """Check clause (A) or (B) on all ``2**n - 1`` non-empty vertex subsets."""
    graph.require_connected()
    f.require_size(graph)
    return all(
        _parking_subset_ok(graph, f.values, mask, f.m)
        for mask in range(1, 1 << graph.n)
    )


def is_multiparking_burning(
    graph: ColoredMultigraph,
    f: MultiparkingFunction,
    ranking: VertexRanking | None = None,
) -> bool:
    """Validity through a burning run."""
    graph.require_connected()
    f.require_size(graph)
    return burn(graph, f, ranking).valid


def is_g_parking(graph: ColoredMultigraph, f: MultiparkingFunction) -> bool:
    """Classical G-parking predicate with root ``n``."""
    graph.require_connected()
    f.require_size(graph)
    n = graph.n
    if f(n) != -1 or any(f(i) < 0 for i in range(1, n)):
        return False
    return all(
        any(f(i) < graph.outdeg_mask(mask, i) for i in _members(mask))
        for mask in range(1, 1 << (n - 1))
    )


def _search(
    graph: ColoredMultigraph,
    m: int,
    box: list[list[int]],
    subset_ok: SubsetTest,
) -> Iterator[tuple[int, ...]]:
    """Depth-first search over ``box``.

    Assigning vertex ``k+1`` checks exactly the subsets whose largest vertex
    is ``k+1``; each subset only reads values of its own members.
    """
    prefix: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        k = len(prefix)
        if k == graph.n:
            yield tuple(prefix)
            return
        for value in box[k]:
            prefix.append(value)
            if all(
                subset_ok(graph, prefix, mask, m)
                for mask in range(1 << k, 1 << (k + 1))
            ):
                yield from extend()
            prefix.pop()

    yield from extend()


def parking_box(graph: ColoredMultigraph, m: int) -> list[list[int]]:
    """Per-vertex candidate values; anything else fails the singleton subset."""
    box = []
    for i in graph.vertices:
        leaving = graph.outdeg_mask(1 << (i - 1), i)
        box.append(([-1] if i >= m else []) + list(range(leaving)))
    return box


def complement_box(graph: ColoredMultigraph, m: int) -> list[list[int]]:
    box = []
    for i in graph.vertices:
        degree = graph.degree(i)
        box.append(list(range(1, degree + 1)) + ([degree + 1] if i >= m else []))
    return box


def enumerate_multiparking(
    graph: ColoredMultigraph, m: int
) -> list[MultiparkingFunction]:
    """All (G,m)-multiparking functions in lexicographic order."""
    graph.require_connected()
    check_threshold(m, graph.n)
    found = [
        MultiparkingFunction(m, values)
        for values in _search(graph, m, parking_box(graph, m), _parking_subset_ok)
    ]
    logger.debug(f"enumerate_multiparking: n={graph.n} m={m} count={len(found)}")
    return found


def is_complement(graph: ColoredMultigraph, h: ComplementFunction) -> bool:
    """Check clauses (Ā)/(B̄) on every non-empty subset; loop-free graphs only."""
    graph.require_connected()
    graph.require_loop_free()
    h.require_size(graph)
    return all(
        _complement_subset_ok(graph, h.values, mask, h.m)
        for mask in range(1, 1 << graph.n)
    )


def complement_of(graph: ColoredMultigraph, f: MultiparkingFunction) -> ComplementFunction:
    """Pointwise ``deg(i) - f(i)``."""
    graph.require_loop_free()
    f.require_size(graph)
    return ComplementFunction(
        f.m, tuple(graph.degree(i) - f(i) for i in graph.vertices)
    )


def enumerate_complements(graph: ColoredMultigraph, m: int) -> list[ComplementFunction]:
    """All complement functions in lexicographic order."""
    graph.require_connected()
    check_threshold(m, graph.n)
    graph.require_loop_free()
    found = [
        ComplementFunction(m, values)
        for values in _search(graph, m, complement_box(graph, m), _complement_subset_ok)
    ]
    logger.debug(f"enumerate_complements: n={graph.n} m={m} count={len(found)}")
    return found


@dataclass(frozen=True)
class RootProfile:
    """How often each vertex is a root across all multiparking functions."""

    absolute: frozenset[int]
    relative: frozenset[int]
    never: frozenset[int]


def root_profile(graph: ColoredMultigraph, m: int) -> RootProfile:
    functions = enumerate_multiparking(graph, m)
    always = set(graph.vertices)
    sometimes: set[int] = set()
    for f in functions:
        always &= f.roots
        sometimes |= f.roots
    return RootProfile(
        absolute=frozenset(always),
        relative=frozenset(sometimes - always),
        never=frozenset(set(graph.vertices) - sometimes),
    )
