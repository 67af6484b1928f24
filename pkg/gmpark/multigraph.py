"""Edge-colored multigraphs on the vertex set 1..n.

Parallel edges between ``i`` and ``j`` carry the canonical colors
``0..mu(i,j)-1``; loops are stored on the diagonal of the multiplicity table.
Every operation returns a new graph, instances are never mutated.
"""

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from gmpark.errors import GraphStructureError, MalformedInputError

GraphKey = tuple[int, ...]


@dataclass(frozen=True, order=True)
class EdgeRef:
    """The edge ``{u,v}_color``. Endpoints are normalised so that ``u <= v``."""

    u: int
    v: int
    color: int = 0

    def __post_init__(self) -> None:
        if self.u > self.v:
            low, high = self.v, self.u
            object.__setattr__(self, "u", low)
            object.__setattr__(self, "v", high)
        if self.color < 0:
            message = f"edge color must be non-negative: {self.color}"
            raise MalformedInputError(message)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.u, self.v

    def __str__(self) -> str:
        return f"{{{self.u},{self.v}}}_{self.color}"


def _freeze(table: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in table)


@dataclass(frozen=True)
class ColoredMultigraph:
    """Multigraph given by its symmetric multiplicity table.

    ``mu[i-1][j-1]`` is the number of edges between ``i`` and ``j``; the
    diagonal entry counts loops.
    """

    n: int
    mu: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n <= 0:
            message = f"vertex count must be positive: {self.n}"
            raise MalformedInputError(message)
        if len(self.mu) != self.n or any(len(row) != self.n for row in self.mu):
            message = f"multiplicity table must be {self.n}x{self.n}"
            raise MalformedInputError(message)
        for i in range(self.n):
            for j in range(self.n):
                if self.mu[i][j] < 0:
                    message = f"negative multiplicity between {i + 1} and {j + 1}"
                    raise MalformedInputError(message)
                if self.mu[i][j] != self.mu[j][i]:
                    message = f"multiplicity table is not symmetric at ({i + 1},{j + 1})"
                    raise MalformedInputError(message)

    @classmethod
    def from_edge_list(
        cls, n: int, pairs: Iterable[tuple[int, int] | Sequence[int]]
    ) -> "ColoredMultigraph":
        """Build a graph where each occurrence of ``{u,v}`` adds one parallel edge."""
        if n <= 0:
            message = f"vertex count must be positive: {n}"
            raise MalformedInputError(message)
        table = [[0] * n for _ in range(n)]
        for pair in pairs:
            if len(pair) != 2:
                message = f"edge must have exactly two endpoints: {list(pair)}"
                raise MalformedInputError(message)
            u, v = pair
            for vertex in (u, v):
                if not 1 <= vertex <= n:
                    message = f"vertex label {vertex} outside 1..{n}"
                    raise MalformedInputError(message)
            table[u - 1][v - 1] += 1
            if u != v:
                table[v - 1][u - 1] += 1
        return cls(n, _freeze(table))

    @classmethod
    def single_vertex(cls) -> "ColoredMultigraph":
        return cls(1, ((0,),))

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def _check_vertex(self, vertex: int) -> None:
        if not 1 <= vertex <= self.n:
            message = f"vertex {vertex} is not in 1..{self.n}"
            raise GraphStructureError(message)

    def multiplicity(self, i: int, j: int) -> int:
        self._check_vertex(i)
        self._check_vertex(j)
        return self.mu[i - 1][j - 1]

    def loops(self, i: int) -> int:
        return self.multiplicity(i, i)

    def degree(self, i: int) -> int:
        """Degree of ``i``; each loop contributes two."""
        self._check_vertex(i)
        row = self.mu[i - 1]
        return sum(row) + row[i - 1]

    @cached_property
    def edge_count(self) -> int:
        return sum(self.mu[i][j] for i in range(self.n) for j in range(i, self.n))

    @cached_property
    def has_loops(self) -> bool:
        return any(self.mu[i][i] for i in range(self.n))

    @cached_property
    def edges(self) -> tuple[EdgeRef, ...]:
        """All edges ordered by endpoints, then color."""
        return tuple(
            EdgeRef(i + 1, j + 1, color)
            for i in range(self.n)
            for j in range(i, self.n)
            for color in range(self.mu[i][j])
        )

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Endpoint pairs with multiplicity by repetition (graph document form)."""
        return [edge.endpoints for edge in self.edges]

    def has_edge(self, edge: EdgeRef) -> bool:
        if not (1 <= edge.u <= self.n and 1 <= edge.v <= self.n):
            return False
        return edge.color < self.mu[edge.u - 1][edge.v - 1]

    def _require_edge(self, edge: EdgeRef) -> None:
        if not self.has_edge(edge):
            message = f"edge {edge} does not exist in the graph"
            raise GraphStructureError(message)

    def neighbors(self, i: int) -> Iterator[int]:
        """Vertices joined to ``i`` by at least one non-loop edge."""
        self._check_vertex(i)
        row = self.mu[i - 1]
        return (j + 1 for j in range(self.n) if j != i - 1 and row[j])

    def key(self) -> GraphKey:
        """Exact memoization key: ``n`` followed by the row-major table."""
        return (self.n, *(value for row in self.mu for value in row))

    # -- cut statistics -------------------------------------------------

    def _vertex_set(self, subset: Iterable[int], i: int) -> frozenset[int]:
        members = frozenset(subset)
        for vertex in members:
            self._check_vertex(vertex)
        if i not in members:
            message = f"vertex {i} is not a member of {sorted(members)}"
            raise GraphStructureError(message)
        return members

    def outdeg(self, subset: Iterable[int], i: int) -> int:
        """Edges from ``i`` to vertices outside ``subset``, with multiplicity."""
        members = self._vertex_set(subset, i)
        row = self.mu[i - 1]
        return sum(row[j - 1] for j in self.vertices if j not in members)

    def indeg(self, subset: Iterable[int], i: int) -> int:
        """Edges from ``i`` to other vertices inside ``subset``; loop-free only."""
        if self.has_loops:
            message = "indeg requires a loop-free graph"
            raise GraphStructureError(message)
        members = self._vertex_set(subset, i)
        row = self.mu[i - 1]
        return sum(row[j - 1] for j in members if j != i)

    def outdeg_mask(self, mask: int, i: int) -> int:
        """:meth:`outdeg` for a subset encoded as a bitmask (bit ``k`` is vertex ``k+1``)."""
        row = self.mu[i - 1]
        return sum(row[j] for j in range(self.n) if not mask >> j & 1)

    # -- structure ------------------------------------------------------

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components ordered by their smallest vertex."""
        seen: set[int] = set()
        parts: list[frozenset[int]] = []
        for start in self.vertices:
            if start in seen:
                continue
            part = {start}
            queue = deque([start])
            while queue:
                current = queue.popleft()
                for nxt in self.neighbors(current):
                    if nxt not in part:
                        part.add(nxt)
                        queue.append(nxt)
            seen |= part
            parts.append(frozenset(part))
        return tuple(parts)

    @cached_property
    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def require_connected(self) -> None:
        if not self.is_connected:
            message = f"graph is not connected: components {self._render_parts()}"
            raise GraphStructureError(message)

    def require_loop_free(self) -> None:
        if self.has_loops:
            message = "operation requires a loop-free graph"
            raise GraphStructureError(message)

    def _render_parts(self) -> str:
        return ", ".join(str(sorted(part)) for part in self.components())

    def is_bridge(self, edge: EdgeRef) -> bool:
        """True when deleting ``edge`` disconnects its endpoints."""
        self._require_edge(edge)
        if edge.is_loop or self.mu[edge.u - 1][edge.v - 1] > 1:
            return False
        seen = {edge.u}
        queue = deque([edge.u])
        while queue:
            current = queue.popleft()
            for nxt in self.neighbors(current):
                if {current, nxt} == {edge.u, edge.v} or nxt in seen:
                    continue
                if nxt == edge.v:
                    return False
                seen.add(nxt)
                queue.append(nxt)
        return True

    # -- edits ----------------------------------------------------------

    def _table(self) -> list[list[int]]:
        return [list(row) for row in self.mu]

    def add_edge(self, u: int, v: int) -> "ColoredMultigraph":
        """Add one edge ``{u,v}``; it receives the next free color."""
        self._check_vertex(u)
        self._check_vertex(v)
        table = self._table()
        table[u - 1][v - 1] += 1
        if u != v:
            table[v - 1][u - 1] += 1
        return ColoredMultigraph(self.n, _freeze(table))

    def delete_edge(self, edge: EdgeRef) -> "ColoredMultigraph":
        """Remove ``edge``; higher colors on the same pair shift down by one."""
        self._require_edge(edge)
        table = self._table()
        table[edge.u - 1][edge.v - 1] -= 1
        if not edge.is_loop:
            table[edge.v - 1][edge.u - 1] -= 1
        return ColoredMultigraph(self.n, _freeze(table))

    def contract_edge(self, edge: EdgeRef) -> "ColoredMultigraph":
        """Identify the endpoints of a non-loop edge into the larger label.

        The contracted edge disappears, remaining parallel edges become loops
        and labels are recompacted to ``1..n-1`` keeping their relative order.
        """
        self._require_edge(edge)
        if edge.is_loop:
            message = f"cannot contract loop {edge}"
            raise GraphStructureError(message)
        keep, drop = edge.v - 1, edge.u - 1
        table = self._table()
        table[keep][drop] -= 1
        table[drop][keep] -= 1
        table[keep][keep] += table[drop][drop] + table[keep][drop]
        for x in range(self.n):
            if x in (keep, drop):
                continue
            table[keep][x] += table[drop][x]
            table[x][keep] = table[keep][x]
        survivors = [x for x in range(self.n) if x != drop]
        contracted = [[table[a][b] for b in survivors] for a in survivors]
        return ColoredMultigraph(self.n - 1, _freeze(contracted))

    def relabel(self, order: Sequence[int]) -> "ColoredMultigraph":
        """Return the graph where vertex ``order[k]`` becomes ``k+1``."""
        if sorted(order) != list(self.vertices):
            message = f"relabeling must be a permutation of 1..{self.n}: {list(order)}"
            raise MalformedInputError(message)
        table = [[self.mu[a - 1][b - 1] for b in order] for a in order]
        return ColoredMultigraph(self.n, _freeze(table))

    def induced(self, subset: Iterable[int]) -> "ColoredMultigraph":
        """Induced subgraph on ``subset`` with labels compacted in increasing order."""
        kept = sorted(set(subset))
        if not kept:
            message = "induced subgraph needs at least one vertex"
            raise GraphStructureError(message)
        for vertex in kept:
            self._check_vertex(vertex)
        table = [[self.mu[a - 1][b - 1] for b in kept] for a in kept]
        return ColoredMultigraph(len(kept), _freeze(table))

    def rooted_at(self, root: int) -> "ColoredMultigraph":
        """Relabel so ``root`` becomes ``n``; other vertices keep their order."""
        self._check_vertex(root)
        order = [v for v in self.vertices if v != root] + [root]
        return self.relabel(order)
