"""Generating functions P, P̄ and I, F-redundant edges and the reciprocity identity."""

from dataclasses import dataclass
from enum import Enum

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, format_spec: str) -> str:
            return str(self.value).__format__(format_spec)

from gmpark.bijection import ForestLayout, enumerate_color_forests, layout
from gmpark.errors import GraphStructureError, PolynomialMismatchError
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph, EdgeRef
from gmpark.parking import enumerate_complements, enumerate_multiparking
from gmpark.polynomial import LaurentPolynomial
from gmpark.structures import ColorForest, VertexRanking

logger = logger.getChild("genfunc")


class RedundancyClass(StrEnum):
    BOTH_ROOTS = "type1"
    ROOT_AFTER = "type2"
    INSIDE_TREE = "type3"
    LOOP = "type4"
    HIGHER_PARALLEL = "type5"
    NOT_REDUNDANT = "not-redundant"

    @property
    def redundant(self) -> bool:
        return self is not RedundancyClass.NOT_REDUNDANT


def parking_polynomial(graph: ColoredMultigraph, m: int) -> LaurentPolynomial:
    """``P_{G,m}(q)``: sum of ``q**sum(f)`` over all multiparking functions."""
    return LaurentPolynomial.from_exponents(
        f.total for f in enumerate_multiparking(graph, m)
    )


def _complement_sum(graph: ColoredMultigraph, m: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_exponents(
        h.total - graph.edge_count for h in enumerate_complements(graph, m)
    )


def _substituted_complement(graph: ColoredMultigraph, m: int) -> LaurentPolynomial:
    return parking_polynomial(graph, m).invert().shift(graph.edge_count)


def complement_polynomial(graph: ColoredMultigraph, m: int) -> LaurentPolynomial:
    """``P̄_{G,m}(q)`` computed by substitution and by direct complement enumeration.

    Raises:
        PolynomialMismatchError: the two computations disagree.
    """
    graph.require_loop_free()
    substituted = _substituted_complement(graph, m)
    direct = _complement_sum(graph, m)
    if substituted != direct:
        message = (
            f"complement polynomial mismatch for m={m}: "
            f"q^|E|*P(1/q) = {substituted}, direct sum = {direct}"
        )
        raise PolynomialMismatchError(message)
    return substituted


def classify_redundant(
    graph: ColoredMultigraph,
    forest: ColorForest,
    ranking: VertexRanking | None,
    edge: EdgeRef,
    placed: ForestLayout | None = None,
) -> RedundancyClass:
    """Classify a non-forest edge by the five redundancy rules.

    Rules use the visiting order of :func:`layout`: a root endpoint with the other
    endpoint placed earlier, or two non-roots where the earlier endpoint sits
    strictly between ``pre_F`` of the later one and the later one.
    """
    if not graph.has_edge(edge):
        message = f"edge {edge} does not exist in the graph"
        raise GraphStructureError(message)
    if edge in forest.edge_set:
        message = f"edge {edge} belongs to the forest"
        raise GraphStructureError(message)
    if edge.is_loop:
        return RedundancyClass.LOOP
    if placed is None:
        placed = layout(graph, forest.m, ranking, forest)
    a, b = edge.endpoints
    if b in forest.adjacency[a]:
        if edge.color > forest.color(a, b):
            return RedundancyClass.HIGHER_PARALLEL
        return RedundancyClass.NOT_REDUNDANT

    pos = placed.order.pos
    if placed.is_root(a) and placed.is_root(b):
        return RedundancyClass.BOTH_ROOTS
    if placed.is_root(a) or placed.is_root(b):
        root, other = (a, b) if placed.is_root(a) else (b, a)
        if pos(other) < pos(root):
            return RedundancyClass.ROOT_AFTER
        return RedundancyClass.NOT_REDUNDANT
    later, earlier = (a, b) if pos(a) > pos(b) else (b, a)
    if pos(placed.pre[later]) < pos(earlier) < pos(later):
        return RedundancyClass.INSIDE_TREE
    return RedundancyClass.NOT_REDUNDANT


def is_redundant_by_deletion(
    graph: ColoredMultigraph,
    ranking: VertexRanking | None,
    forest: ColorForest,
    edge: EdgeRef,
) -> bool:
    """Delete ``edge`` and check the function of ``forest`` is unchanged.

    Forest edges on the same pair with a higher color shift down by one, the
    same compaction :meth:`ColoredMultigraph.delete_edge` applies.
    """
    reduced = graph.delete_edge(edge)
    recolored = ColorForest(
        forest.n,
        forest.m,
        tuple(
            EdgeRef(e.u, e.v, e.color - 1)
            if e.endpoints == edge.endpoints and e.color > edge.color
            else e
            for e in forest.edges
        ),
    )
    before = layout(graph, forest.m, ranking, forest)
    after = layout(reduced, forest.m, ranking, recolored)
    return all(before.value(v) == after.value(v) for v in graph.vertices)


@dataclass(frozen=True)
class RedundancyReport:
    classes: dict[EdgeRef, RedundancyClass]
    g: tuple[int, ...]

    @property
    def redundant_edges(self) -> list[EdgeRef]:
        return [edge for edge, kind in self.classes.items() if kind.redundant]


def redundancy_report(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    forest: ColorForest,
) -> RedundancyReport:
    """Classes of every non-forest edge and ``g_F``.

    ``g_F(i)`` counts redundant edges at their later endpoint in the order;
    a loop counts once at its vertex.
    """
    placed = layout(graph, m, ranking, forest)
    g = [0] * graph.n
    classes: dict[EdgeRef, RedundancyClass] = {}
    for edge in graph.edges:
        if edge in forest.edge_set:
            continue
        kind = classify_redundant(graph, forest, ranking, edge, placed)
        classes[edge] = kind
        if kind.redundant:
            later = max(edge.endpoints, key=placed.order.pos)
            g[later - 1] += 1
    return RedundancyReport(classes, tuple(g))


def edge_partition_balance(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    forest: ColorForest,
) -> bool:
    """``sum g_F + sum |N(v)| + sum colors + |E(F)| == |E(G)|`` on a loop-free graph."""
    graph.require_loop_free()
    placed = layout(graph, m, ranking, forest)
    report = redundancy_report(graph, m, ranking, forest)
    total = (
        sum(report.g)
        + sum(placed.n_sizes.values())
        + sum(edge.color for edge in forest.edges)
        + len(forest.edges)
    )
    return total == graph.edge_count


def redundancy_polynomial(
    graph: ColoredMultigraph, m: int, ranking: VertexRanking | None = None
) -> LaurentPolynomial:
    """``I_{G,m}(q)``: sum of ``q**sum(g_F)`` over all spanning color m-forests."""
    graph.require_loop_free()
    return LaurentPolynomial.from_exponents(
        sum(redundancy_report(graph, m, ranking, forest).g)
        for forest in enumerate_color_forests(graph, m)
    )


@dataclass(frozen=True)
class ReciprocityReport:
    """The sides of ``q^|V| I = P̄ = q^|E| P(1/q)``; P̄ appears from both paths."""

    scaled_redundancy: LaurentPolynomial
    complement_direct: LaurentPolynomial
    inverted_parking: LaurentPolynomial

    @property
    def passed(self) -> bool:
        return self.scaled_redundancy == self.complement_direct == self.inverted_parking


def reciprocity_check(
    graph: ColoredMultigraph, m: int, ranking: VertexRanking | None = None
) -> ReciprocityReport:
    graph.require_connected()
    graph.require_loop_free()
    report = ReciprocityReport(
        scaled_redundancy=redundancy_polynomial(graph, m, ranking).shift(graph.n),
        complement_direct=_complement_sum(graph, m),
        inverted_parking=_substituted_complement(graph, m),
    )
    if not report.passed:
        logger.warning(
            f"reciprocity failed for m={m}: q^|V|I={report.scaled_redundancy}, "
            f"direct={report.complement_direct}, q^|E|P(1/q)={report.inverted_parking}"
        )
    return report
