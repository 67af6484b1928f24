"""Memoized recursions for ``P_G = P_{G,n}`` and the Tutte polynomial ``T_G``.

Both evaluators key their memo tables on :meth:`ColoredMultigraph.key`, the
exact multiplicity table; isomorphic graphs with different labels are
separate entries.
"""

import random
from dataclasses import dataclass
from typing import Literal

from gmpark.genfunc import parking_polynomial
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph, EdgeRef, GraphKey
from gmpark.polynomial import Q, Q_INV, BivariatePolynomial, LaurentPolynomial

logger = logger.getChild("recursion")

PivotStrategy = Literal["lex", "random"]


class ParkingRecursion:
    """Evaluate ``P_G`` through the loop, bridge and deletion-contraction rules.

    With ``pivot="random"`` the non-loop non-bridge pivot edge is drawn from
    ``rng``; the result must not depend on that choice.
    """

    def __init__(
        self,
        pivot: PivotStrategy = "lex",
        rng: random.Random | None = None,
    ) -> None:
        self.pivot = pivot
        self.rng = rng or random.Random(0)
        self.memo: dict[GraphKey, LaurentPolynomial] = {}
        self.hits = 0

    def evaluate(self, graph: ColoredMultigraph) -> LaurentPolynomial:
        """``P_G(q)`` with vertex ``n`` as the root."""
        graph.require_connected()
        result = self._evaluate(graph)
        logger.debug(f"P recursion: memo size={len(self.memo)} hits={self.hits}")
        return result

    def rooted(self, graph: ColoredMultigraph, root: int) -> LaurentPolynomial:
        """``P`` of ``graph`` after relabeling ``root`` to the maximum label."""
        graph.require_connected()
        return self._evaluate(graph.rooted_at(root))

    def _select_pivot(self, candidates: list[EdgeRef]) -> EdgeRef:
        if self.pivot == "random":
            return self.rng.choice(candidates)
        return candidates[0]

    def _evaluate(self, graph: ColoredMultigraph) -> LaurentPolynomial:
        key = graph.key()
        cached = self.memo.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        result = self._expand(graph)
        self.memo[key] = result
        return result

    def _expand(self, graph: ColoredMultigraph) -> LaurentPolynomial:
        if graph.n == 1:
            return Q_INV
        loops = [edge for edge in graph.edges if edge.is_loop]
        if loops:
            return self._evaluate(graph.delete_edge(loops[0]))
        candidates = [edge for edge in graph.edges if not graph.is_bridge(edge)]
        if candidates:
            edge = self._select_pivot(candidates)
            return Q * self._evaluate(graph.delete_edge(edge)) + self._evaluate(
                graph.contract_edge(edge)
            )
        return self._split_bridge(graph, graph.edges[0])

    def _split_bridge(
        self, graph: ColoredMultigraph, bridge: EdgeRef
    ) -> LaurentPolynomial:
        """``q * P(G_1) * P(G_2)``.

        ``G_1`` holds the root; ``G_2`` is rooted at the far endpoint of the bridge.
        """
        parts = graph.delete_edge(bridge).components()
        root_side = next(part for part in parts if graph.n in part)
        far = bridge.v if bridge.u in root_side else bridge.u
        far_side = next(part for part in parts if far in part)
        near_graph = graph.induced(root_side)
        far_graph = graph.induced(far_side)
        far_label = sorted(far_side).index(far) + 1
        return Q * self._evaluate(near_graph) * self._evaluate(
            far_graph.rooted_at(far_label)
        )


def recursive_polynomial(
    graph: ColoredMultigraph,
    pivot: PivotStrategy = "lex",
    rng: random.Random | None = None,
) -> LaurentPolynomial:
    return ParkingRecursion(pivot, rng).evaluate(graph)


def rooted_polynomial(graph: ColoredMultigraph, root: int) -> LaurentPolynomial:
    return ParkingRecursion().rooted(graph, root)


class TutteRecursion:
    """Deletion-contraction for ``T_G(x, y)``: bridges give ``x``, loops give ``y``."""

    def __init__(self) -> None:
        self.memo: dict[GraphKey, BivariatePolynomial] = {}

    def evaluate(self, graph: ColoredMultigraph) -> BivariatePolynomial:
        key = graph.key()
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        if not graph.edges:
            result = BivariatePolynomial.one()
        else:
            edge = graph.edges[0]
            reduced = self.evaluate(graph.delete_edge(edge))
            if edge.is_loop:
                result = reduced.times_y()
            elif graph.is_bridge(edge):
                result = reduced.times_x()
            else:
                result = reduced + self.evaluate(graph.contract_edge(edge))
        self.memo[key] = result
        return result


def tutte_polynomial(graph: ColoredMultigraph) -> BivariatePolynomial:
    return TutteRecursion().evaluate(graph)


@dataclass(frozen=True)
class TutteReport:
    """``P_{G,n}`` by enumeration against ``q^(|E|-|V|) T_G(1, 1/q)``."""

    tutte: BivariatePolynomial
    enumerated: LaurentPolynomial
    from_tutte: LaurentPolynomial

    @property
    def passed(self) -> bool:
        return self.enumerated == self.from_tutte


def tutte_check(graph: ColoredMultigraph) -> TutteReport:
    graph.require_connected()
    tutte = tutte_polynomial(graph)
    report = TutteReport(
        tutte=tutte,
        enumerated=parking_polynomial(graph, graph.n),
        from_tutte=tutte.at_one_and_inverse_q().shift(graph.edge_count - graph.n),
    )
    if not report.passed:
        logger.warning(
            f"tutte identity failed: P={report.enumerated}, from T={report.from_tutte}"
        )
    return report
