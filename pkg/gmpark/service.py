"""Command payloads and identity checks behind the CLI."""

import itertools
from collections.abc import Callable, Iterator
from typing import Literal

from gmpark.bijection import enumerate_color_forests, forest_sum_stats, phi, psi
from gmpark.documents import ForestDocument
from gmpark.errors import MalformedInputError
from gmpark.genfunc import (
    complement_polynomial,
    parking_polynomial,
    reciprocity_check,
    redundancy_polynomial,
)
from gmpark.logger import logger
from gmpark.models import (
    CheckReport,
    EnumerationReport,
    ForestEntry,
    ForestListing,
    FunctionEntry,
    PhiResult,
    PolynomialModel,
    PolyReport,
    PsiResult,
)
from gmpark.multigraph import ColoredMultigraph
from gmpark.parking import (
    complement_of,
    enumerate_multiparking,
    is_complement,
    is_multiparking,
    is_multiparking_burning,
    parking_box,
    root_profile,
)
from gmpark.polynomial import LaurentPolynomial
from gmpark.recursion import recursive_polynomial, tutte_check
from gmpark.structures import (
    ColorForest,
    MultiparkingFunction,
    VertexRanking,
    ranking_or_identity,
)

logger = logger.getChild("service")

PolynomialKind = Literal["P", "Pbar", "I"]
POLYNOMIALS: tuple[PolynomialKind, ...] = ("P", "Pbar", "I")
CHECKS = (
    "reciprocity",
    "recursion",
    "tutte",
    "bijection",
    "corollary",
    "oracle",
    "complement",
    "cayley",
)


def enumerate_report(graph: ColoredMultigraph, m: int) -> EnumerationReport:
    functions = enumerate_multiparking(graph, m)
    profile = root_profile(graph, m)
    return EnumerationReport(
        n=graph.n,
        m=m,
        count=len(functions),
        functions=[FunctionEntry(values=list(f.values), total=f.total) for f in functions],
        absolute_roots=sorted(profile.absolute),
        relative_roots=sorted(profile.relative),
        polynomial=PolynomialModel.of(
            LaurentPolynomial.from_exponents(f.total for f in functions)
        ),
    )


def forest_listing(graph: ColoredMultigraph, m: int) -> ForestListing:
    forests = enumerate_color_forests(graph, m)
    return ForestListing(
        n=graph.n,
        m=m,
        count=len(forests),
        forests=[
            ForestEntry(
                edges=[(e.u, e.v, e.color) for e in forest.edges],
                components=forest.sigma,
            )
            for forest in forests
        ],
    )


def run_phi(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    f: MultiparkingFunction,
) -> PhiResult:
    forest, order = phi(graph, m, ranking, f)
    return PhiResult(forest=ForestDocument.from_forest(forest), order=list(order.pi))


def run_psi(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    forest: ColorForest,
) -> PsiResult:
    f, order = psi(graph, m, ranking, forest)
    return PsiResult(function=list(f.values), order=list(order.pi))


def poly_report(
    graph: ColoredMultigraph,
    m: int,
    which: str,
    ranking: VertexRanking | None,
) -> PolyReport:
    match which:
        case "P":
            polynomial = parking_polynomial(graph, m)
        case "Pbar":
            polynomial = complement_polynomial(graph, m)
        case "I":
            polynomial = redundancy_polynomial(graph, m, ranking)
        case _:
            message = f"unknown polynomial '{which}'. Available: {', '.join(POLYNOMIALS)}"
            raise MalformedInputError(message)
    return PolyReport(
        which=which,
        m=m,
        ranking=list(ranking.tau) if ranking is not None and which == "I" else None,
        polynomial=PolynomialModel.of(polynomial),
    )


# -- checks --------------------------------------------------------------


def _check_reciprocity(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    result = reciprocity_check(graph, m, tau)
    report.add_side("q^|V| * I", result.scaled_redundancy)
    report.add_side("Pbar (direct)", result.complement_direct)
    report.add_side("q^|E| * P(1/q)", result.inverted_parking)
    report.record(result.passed, "q^|V| I, Pbar and q^|E| P(1/q) differ")
    baseline = redundancy_polynomial(graph, m, VertexRanking.identity(graph.n))
    report.record(
        baseline.shift(graph.n) == result.scaled_redundancy,
        f"I depends on the ranking: identity gives {baseline}",
    )


def _check_recursion(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    recursive = recursive_polynomial(graph)
    enumerated = parking_polynomial(graph, graph.n)
    report.add_side("P (recursion)", recursive)
    report.add_side("P (enumeration)", enumerated)
    report.record(recursive == enumerated, "recursion and enumeration differ")


def _check_tutte(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    result = tutte_check(graph)
    report.add_side("T(x,y)", result.tutte)
    report.add_side("P (enumeration)", result.enumerated)
    report.add_side("q^(|E|-|V|) T(1,1/q)", result.from_tutte)
    report.record(result.passed, "P differs from the Tutte evaluation")


def _check_bijection(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    functions = enumerate_multiparking(graph, m)
    forests = enumerate_color_forests(graph, m)
    report.add_side("|MP|", len(functions))
    report.add_side("|F|", len(forests))
    report.record(len(functions) == len(forests), "|MP| and |F| differ")
    for f in functions:
        forest, order = phi(graph, m, tau, f)
        back, back_order = psi(graph, m, tau, forest)
        report.record(
            back == f and back_order == order,
            f"psi(phi({list(f.values)})) = {list(back.values)} order {back_order}",
        )
    for forest in forests:
        f, _ = psi(graph, m, tau, forest)
        again, _ = phi(graph, m, tau, f)
        report.record(again == forest, f"phi(psi({forest})) = {again}")


def _check_corollary(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    forests = enumerate_color_forests(graph, m)
    report.add_side("forests", len(forests))
    for forest in forests:
        stats = forest_sum_stats(graph, m, tau, forest)
        report.record(
            stats.balanced,
            f"{forest}: sum f = {stats.f_sum}, colors {stats.color_sum} "
            f"+ N {stats.n_sum} - sigma {stats.sigma}",
        )


def _box_candidates(graph: ColoredMultigraph, m: int) -> Iterator[MultiparkingFunction]:
    for values in itertools.product(*parking_box(graph, m)):
        yield MultiparkingFunction(m, values)


def _check_oracle(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    for f in _box_candidates(graph, m):
        by_subsets = is_multiparking(graph, f)
        by_burning = is_multiparking_burning(graph, f, tau)
        report.record(
            by_subsets == by_burning,
            f"{list(f.values)}: subsets={by_subsets} burning={by_burning}",
        )
    report.add_side("candidates", report.cases)


def _check_complement(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    graph.require_loop_free()
    for f in _box_candidates(graph, m):
        h = complement_of(graph, f)
        report.record(
            is_multiparking(graph, f) == is_complement(graph, h),
            f"{list(f.values)} and its complement {list(h.values)} disagree",
        )
    report.add_side("candidates", report.cases)


def _check_cayley(
    graph: ColoredMultigraph, m: int, tau: VertexRanking, report: CheckReport
) -> None:
    n = graph.n
    complete = not graph.has_loops and all(
        graph.multiplicity(i, j) == 1
        for i in graph.vertices
        for j in graph.vertices
        if i != j
    )
    if not complete:
        report.record(False, "cayley check needs a complete simple graph")
        return
    expected = n ** (n - 2) if n > 1 else 1
    count = len(enumerate_multiparking(graph, n))
    report.add_side("|MP(K_n, n)|", count)
    report.add_side("n^(n-2)", expected)
    report.record(count == expected, "count differs from n^(n-2)")


CheckRunner = Callable[[ColoredMultigraph, int, VertexRanking, CheckReport], None]

_RUNNERS: dict[str, CheckRunner] = {
    "reciprocity": _check_reciprocity,
    "recursion": _check_recursion,
    "tutte": _check_tutte,
    "bijection": _check_bijection,
    "corollary": _check_corollary,
    "oracle": _check_oracle,
    "complement": _check_complement,
    "cayley": _check_cayley,
}


def run_check(
    graph: ColoredMultigraph,
    m: int,
    ranking: VertexRanking | None,
    check: str,
) -> CheckReport:
    """Run one named identity check; failures are recorded, not raised."""
    runner = _RUNNERS.get(check)
    if runner is None:
        message = f"unknown check '{check}'. Available checks: {', '.join(CHECKS)}"
        raise MalformedInputError(message)
    graph.require_connected()
    tau = ranking_or_identity(ranking, graph)
    uses_root_n = check in ("recursion", "tutte", "cayley")
    report = CheckReport(
        check=check,
        n=graph.n,
        m=graph.n if uses_root_n else m,
        ranking=list(tau.tau),
    )
    runner(graph, m, tau, report)
    logger.debug(f"check {check}: cases={report.cases} failures={len(report.failures)}")
    if not report.passed:
        logger.warning(f"check {check} failed in {len(report.failures)} case(s)")
    return report
