"""Value types shared by the parking, bijection and generating-function modules."""

import random
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from gmpark.errors import GraphStructureError, InvalidForestError, MalformedInputError
from gmpark.multigraph import ColoredMultigraph, EdgeRef


def alpha(subset: Iterable[int], m: int) -> int | None:
    """Smallest member of ``subset`` that is at least ``m``, or ``None``."""
    members = list(subset)
    if not members:
        message = "alpha is undefined on the empty vertex set"
        raise GraphStructureError(message)
    eligible = [i for i in members if i >= m]
    return min(eligible) if eligible else None


def check_threshold(m: int, n: int) -> None:
    if not 1 <= m <= n:
        message = f"threshold m={m} outside 1..{n}"
        raise MalformedInputError(message)


@dataclass(frozen=True)
class MultiparkingFunction:
    """Vertex function into N ∪ {-1} with root threshold ``m``.

    ``values[i-1]`` is the value at vertex ``i``. Validity against a graph is
    decided by :mod:`gmpark.parking`, so invalid candidates can be represented.
    """

    m: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            message = "a vertex function needs at least one value"
            raise MalformedInputError(message)
        check_threshold(self.m, len(self.values))
        for vertex, value in enumerate(self.values, start=1):
            if value < -1:
                message = f"value {value} at vertex {vertex} is below -1"
                raise MalformedInputError(message)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, vertex: int) -> int:
        return self.values[vertex - 1]

    @property
    def roots(self) -> frozenset[int]:
        return frozenset(i for i, value in enumerate(self.values, start=1) if value == -1)

    @property
    def total(self) -> int:
        return sum(self.values)

    def require_size(self, graph: ColoredMultigraph) -> None:
        if self.n != graph.n:
            message = f"function has {self.n} values but the graph has {graph.n} vertices"
            raise MalformedInputError(message)


@dataclass(frozen=True)
class ComplementFunction:
    """Vertex function into N, the candidate complement ``h`` of a parking function."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            message = "a vertex function needs at least one value"
            raise MalformedInputError(message)
        check_threshold(self.m, len(self.values))
        if any(value < 0 for value in self.values):
            message = f"complement values must be non-negative: {list(self.values)}"
            raise MalformedInputError(message)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, vertex: int) -> int:
        return self.values[vertex - 1]

    @property
    def total(self) -> int:
        return sum(self.values)

    def require_size(self, graph: ColoredMultigraph) -> None:
        if self.n != graph.n:
            message = f"function has {self.n} values but the graph has {graph.n} vertices"
            raise MalformedInputError(message)
        for vertex in graph.vertices:
            if self(vertex) > graph.degree(vertex) + 1:
                message = (
                    f"value {self(vertex)} at vertex {vertex} exceeds deg+1 "
                    f"= {graph.degree(vertex) + 1}"
                )
                raise MalformedInputError(message)


@dataclass(frozen=True)
class VertexRanking:
    """Permutation ``tau`` with ``tau[w-1]`` the rank of vertex ``w``."""

    tau: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", tuple(self.tau))
        if sorted(self.tau) != list(range(1, len(self.tau) + 1)):
            message = f"ranking is not a permutation of 1..{len(self.tau)}: {list(self.tau)}"
            raise MalformedInputError(message)

    @classmethod
    def identity(cls, n: int) -> "VertexRanking":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reverse(cls, n: int) -> "VertexRanking":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def shuffled(cls, n: int, rng: random.Random) -> "VertexRanking":
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> "VertexRanking":
        """Parse comma-separated images ``tau(1),...,tau(n)``."""
        try:
            images = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            message = f"ranking must be comma-separated integers: {text!r}"
            raise MalformedInputError(message) from exc
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.tau)

    def rank(self, vertex: int) -> int:
        return self.tau[vertex - 1]

    def first(self, candidates: Iterable[int]) -> int:
        """The candidate vertex of minimum rank."""
        return min(candidates, key=self.rank)

    def require_size(self, graph: ColoredMultigraph) -> None:
        if self.n != graph.n:
            message = f"ranking has {self.n} entries but the graph has {graph.n} vertices"
            raise MalformedInputError(message)

    def __str__(self) -> str:
        return ",".join(str(image) for image in self.tau)


@dataclass(frozen=True)
class ProcessOrder:
    """Vertex order ``pi = (v_1, ..., v_n)`` produced by burning and by forest layout."""

    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pi", tuple(self.pi))
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            message = f"process order is not a permutation: {list(self.pi)}"
            raise MalformedInputError(message)

    @cached_property
    def positions(self) -> dict[int, int]:
        return {vertex: index for index, vertex in enumerate(self.pi, start=1)}

    def pos(self, vertex: int) -> int:
        """1-based position of ``vertex`` in the order."""
        return self.positions[vertex]

    def __iter__(self) -> Iterator[int]:
        return iter(self.pi)

    def __len__(self) -> int:
        return len(self.pi)

    def __str__(self) -> str:
        return "(" + ",".join(str(vertex) for vertex in self.pi) + ")"


@dataclass(frozen=True, eq=False)
class ColorForest:
    """Spanning colored forest on ``1..n`` with threshold ``m``.

    ``edges`` keeps insertion order for rendering; equality and hashing use
    the edge set only.
    """

    n: int
    m: int
    edges: tuple[EdgeRef, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.n <= 0:
            message = f"forest vertex count must be positive: {self.n}"
            raise MalformedInputError(message)
        check_threshold(self.m, self.n)

    @cached_property
    def edge_set(self) -> frozenset[EdgeRef]:
        return frozenset(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColorForest):
            return NotImplemented
        return (self.n, self.m, self.edge_set) == (other.n, other.m, other.edge_set)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.edge_set))

    def __str__(self) -> str:
        return "{" + ",".join(str(edge) for edge in self.edges) + "}"

    @cached_property
    def adjacency(self) -> dict[int, dict[int, int]]:
        """``adjacency[v][w]`` is the color of the forest edge between ``v`` and ``w``."""
        table: dict[int, dict[int, int]] = {v: {} for v in range(1, self.n + 1)}
        for edge in self.edges:
            table[edge.u][edge.v] = edge.color
            table[edge.v][edge.u] = edge.color
        return table

    def components(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        parts: list[frozenset[int]] = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            part = {start}
            queue = deque([start])
            while queue:
                current = queue.popleft()
                for nxt in self.adjacency[current]:
                    if nxt not in part:
                        part.add(nxt)
                        queue.append(nxt)
            seen |= part
            parts.append(frozenset(part))
        return tuple(parts)

    @property
    def sigma(self) -> int:
        """Number of connected components."""
        return len(self.components())

    @property
    def roots(self) -> frozenset[int]:
        found = set()
        for part in self.components():
            root = alpha(part, self.m)
            if root is not None:
                found.add(root)
        return frozenset(found)

    def color(self, u: int, v: int) -> int:
        return self.adjacency[u][v]

    def validate(self, graph: ColoredMultigraph) -> None:
        """Raise :class:`InvalidForestError` unless this spans ``graph`` as a color m-forest."""
        if self.n != graph.n:
            message = f"forest spans {self.n} vertices but the graph has {graph.n}"
            raise InvalidForestError(message)
        pairs: set[tuple[int, int]] = set()
        for edge in self.edges:
            if edge.is_loop:
                message = f"forest contains loop {edge}"
                raise InvalidForestError(message)
            if not graph.has_edge(edge):
                message = f"forest edge {edge} is not an edge of the graph"
                raise InvalidForestError(message)
            if edge.endpoints in pairs:
                message = f"forest uses the pair {{{edge.u},{edge.v}}} twice"
                raise InvalidForestError(message)
            pairs.add(edge.endpoints)
        parts = self.components()
        if len(self.edges) != self.n - len(parts):
            message = f"forest {self} contains a cycle"
            raise InvalidForestError(message)
        for part in parts:
            if alpha(part, self.m) is None:
                message = f"component {sorted(part)} has no vertex >= {self.m}"
                raise InvalidForestError(message)


def ranking_or_identity(
    ranking: VertexRanking | None, graph: ColoredMultigraph
) -> VertexRanking:
    """Default to the identity ranking and check the size otherwise."""
    if ranking is None:
        return VertexRanking.identity(graph.n)
    ranking.require_size(graph)
    return ranking

