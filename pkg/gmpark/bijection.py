"""Bijections between multiparking functions and spanning color m-forests.

``burn`` runs the burning process behind ``phi``; ``layout`` places a forest
in visiting order and ``psi`` reads the inverse function off that layout.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field

from gmpark.errors import InvalidForestError, InvalidFunctionError
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph, EdgeRef
from gmpark.structures import (
    ColorForest,
    MultiparkingFunction,
    ProcessOrder,
    VertexRanking,
    alpha,
    check_threshold,
    ranking_or_identity,
)

logger = logger.getChild("bijection")


@dataclass
class BurnState:
    """Transient state of one burning run; never shared between runs."""

    val: list[int]
    processed: set[int] = field(default_factory=set)
    frontier: set[int] = field(default_factory=set)
    edges: list[EdgeRef] = field(default_factory=list)
    order: list[int] = field(default_factory=list)
    step: int = 0


@dataclass(frozen=True)
class BurnResult:
    """Outcome of a burning run; ``forest``/``order`` are set only when valid."""

    valid: bool
    forest: ColorForest | None = None
    order: ProcessOrder | None = None
    reason: str | None = None


def burn(
    graph: ColoredMultigraph,
    f: MultiparkingFunction,
    ranking: VertexRanking | None = None,
) -> BurnResult:
    """Burn the graph from the roots of ``f``.

    At each step the frontier vertex of minimum rank is processed. An
    untouched neighbour ``w`` whose value lies in ``[0, mu(w,v)-1]`` is attached
    through the edge of that color; a larger value is decreased by
    ``mu(w,v)``. Membership reads the values of the previous step.
    """
    tau = ranking_or_identity(ranking, graph)
    f.require_size(graph)
    m = f.m
    state = BurnState(val=list(f.values))
    remaining = set(graph.vertices)

    while remaining:
        if not state.frontier:
            start = alpha(remaining, m)
            if start is None:
                reason = f"no vertex >= {m} left among {sorted(remaining)}"
                return BurnResult(False, reason=reason)
            if f(start) != -1:
                reason = f"component start {start} has value {f(start)}, not -1"
                return BurnResult(False, reason=reason)
            if state.step:
                logger.debug(f"burn: restart at {start} after step {state.step}")
            state.frontier.add(start)

        state.step += 1
        v = tau.first(state.frontier)
        state.frontier.discard(v)
        state.processed.add(v)
        remaining.discard(v)
        state.order.append(v)

        for w in sorted(remaining - state.frontier):
            mu = graph.multiplicity(w, v)
            if mu == 0:
                continue
            value = state.val[w - 1]
            if 0 <= value <= mu - 1:
                state.edges.append(EdgeRef(w, v, value))
                state.frontier.add(w)
            elif value >= mu:
                state.val[w - 1] = value - mu

    forest = ColorForest(graph.n, m, tuple(state.edges))
    return BurnResult(True, forest=forest, order=ProcessOrder(tuple(state.order)))


def phi(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    f: MultiparkingFunction,
) -> tuple[ColorForest, ProcessOrder]:
    """Map a multiparking function to its spanning color m-forest and process order."""
    graph.require_connected()
    if f.m != m:
        message = f"function threshold {f.m} differs from m={m}"
        raise InvalidFunctionError(message)
    result = burn(graph, f, ranking)
    if not result.valid or result.forest is None or result.order is None:
        message = f"{list(f.values)} is not a (G,{m})-multiparking function: {result.reason}"
        raise InvalidFunctionError(message)
    return result.forest, result.order


@dataclass(frozen=True)
class ForestLayout:
    """A forest in visiting order: order, predecessors and N(v) sizes."""

    forest: ColorForest
    order: ProcessOrder
    pre: dict[int, int]
    roots: frozenset[int]
    n_sizes: dict[int, int]

    def is_root(self, vertex: int) -> bool:
        return vertex in self.roots

    def parent_color(self, vertex: int) -> int:
        return self.forest.color(vertex, self.pre[vertex])

    def value(self, vertex: int) -> int:
        if vertex in self.roots:
            return -1
        return self.parent_color(vertex) + self.n_sizes[vertex]


def layout(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    forest: ColorForest,
) -> ForestLayout:
    """Compute the order ``pi``, ``pre_F`` and ``|N(v)|`` for ``forest``.

    ``|N(v)|`` counts edges, with multiplicity, from ``v`` to vertices placed
    strictly before ``pre_F(v)``.
    """
    tau = ranking_or_identity(ranking, graph)
    if forest.m != m:
        message = f"forest threshold {forest.m} differs from m={m}"
        raise InvalidForestError(message)
    forest.validate(graph)

    visited: list[int] = [m]
    seen = {m}
    roots = {m}
    pre: dict[int, int] = {}
    while len(visited) < graph.n:
        frontier = {
            w
            for v in visited
            for w in forest.adjacency[v]
            if w not in seen
        }
        if frontier:
            nxt = tau.first(frontier)
            pre[nxt] = next(w for w in forest.adjacency[nxt] if w in seen)
        else:
            unvisited = [v for v in graph.vertices if v not in seen]
            root = alpha(unvisited, m)
            if root is None:
                message = f"vertices {unvisited} cannot be reached from a vertex >= {m}"
                raise InvalidForestError(message)
            nxt = root
            roots.add(nxt)
        visited.append(nxt)
        seen.add(nxt)

    order = ProcessOrder(tuple(visited))
    n_sizes = {
        v: sum(
            graph.multiplicity(v, j)
            for j in graph.vertices
            if order.pos(j) < order.pos(parent)
        )
        for v, parent in pre.items()
    }
    return ForestLayout(forest, order, pre, frozenset(roots), n_sizes)


def psi(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    forest: ColorForest,
) -> tuple[MultiparkingFunction, ProcessOrder]:
    """Map a spanning color m-forest back to its multiparking function."""
    graph.require_connected()
    placed = layout(graph, m, ranking, forest)
    values = tuple(placed.value(v) for v in graph.vertices)
    return MultiparkingFunction(m, values), placed.order


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def enumerate_color_forests(graph: ColoredMultigraph, m: int) -> list[ColorForest]:
    """All spanning color m-forests, by backtracking over vertex pairs.

    Pairs are visited in lexicographic order; for each pair the search first
    skips it, then tries every color. Union-find state is copied per branch.
    """
    graph.require_connected()
    check_threshold(m, graph.n)
    pairs = [
        (u, v, graph.multiplicity(u, v))
        for u in graph.vertices
        for v in range(u + 1, graph.n + 1)
        if graph.multiplicity(u, v)
    ]

    def rooted(parent: list[int]) -> bool:
        has_high = {_find(parent, x) for x in range(m - 1, graph.n)}
        return all(_find(parent, x) in has_high for x in range(graph.n))

    def extend(
        index: int, parent: list[int], chosen: list[EdgeRef]
    ) -> Iterator[ColorForest]:
        if index == len(pairs):
            if rooted(parent):
                yield ColorForest(graph.n, m, tuple(chosen))
            return
        yield from extend(index + 1, parent, chosen)
        u, v, mu = pairs[index]
        ru, rv = _find(parent, u - 1), _find(parent, v - 1)
        if ru == rv:
            return
        joined = list(parent)
        joined[ru] = rv
        for color in range(mu):
            chosen.append(EdgeRef(u, v, color))
            yield from extend(index + 1, joined, chosen)
            chosen.pop()

    forests = list(extend(0, list(range(graph.n)), []))
    logger.debug(f"enumerate_color_forests: n={graph.n} m={m} count={len(forests)}")
    return forests


@dataclass(frozen=True)
class ForestSumStats:
    """Both sides of ``sum f = sum colors + sum |N(v)| - sigma``."""

    color_sum: int
    n_sum: int
    sigma: int
    f_sum: int

    @property
    def balanced(self) -> bool:
        return self.f_sum == self.color_sum + self.n_sum - self.sigma


def forest_sum_stats(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    forest: ColorForest,
) -> ForestSumStats:
    placed = layout(graph, m, ranking, forest)
    f_sum = sum(placed.value(v) for v in graph.vertices)
    return ForestSumStats(
        color_sum=sum(edge.color for edge in forest.edges),
        n_sum=sum(placed.n_sizes.values()),
        sigma=forest.sigma,
        f_sum=f_sum,
    )
