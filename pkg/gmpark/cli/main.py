from collections.abc import Iterator
from contextlib import contextmanager

import typer
from rich.console import Console
from rich.text import Text

from gmpark.cli.options import (
    CHECK_OPTION,
    COUNT_OPTION,
    FOREST_OPTION,
    FORMAT_OPTION,
    FUNCTION_OPTION,
    GRAPH_ARGUMENT,
    M_OPTION,
    MAX_MU_OPTION,
    MAX_N_OPTION,
    RANKING_OPTION,
    SEED_OPTION,
    THEME_OPTION,
    VERSION_OPTION,
    WHICH_OPTION,
)
from gmpark.corpus import generate_corpus
from gmpark.documents import dump_graph, parse_forest, parse_function, parse_graph
from gmpark.errors import (
    GmparkError,
    GraphStructureError,
    MalformedInputError,
)
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph
from gmpark.service import (
    enumerate_report,
    forest_listing,
    poly_report,
    run_check,
    run_phi,
    run_psi,
)
from gmpark.structures import VertexRanking, check_threshold
from gmpark.view import (
    phi_lines,
    psi_lines,
    render_check,
    render_forests,
    render_functions,
    resolve_theme,
)

logger = logger.getChild("cli")

console = Console()
err_console = Console(stderr=True)

FORMATS = ("text", "json")

app = typer.Typer(
    help="Exact toolkit for (G,m)-multiparking functions on colored multigraphs.",
    add_completion=False,
    no_args_is_help=True,
)


@app.callback()
def main(*, version: bool = VERSION_OPTION) -> None:
    pass


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map gmpark errors to exit codes: 1 for bad input, 2 for invalid objects."""
    try:
        yield
    except (MalformedInputError, GraphStructureError) as exc:
        err_console.print(Text(f"error: {exc}", style="bold red"))
        raise typer.Exit(1) from exc
    except GmparkError as exc:
        err_console.print(Text(f"invalid: {exc}", style="bold red"))
        raise typer.Exit(2) from exc


def _load(
    graph_source: str, m: int | None, ranking: str | None
) -> tuple[ColoredMultigraph, int, VertexRanking | None]:
    graph = parse_graph(graph_source)
    threshold = graph.n if m is None else m
    check_threshold(threshold, graph.n)
    tau = None
    if ranking is not None:
        tau = VertexRanking.parse(ranking)
        tau.require_size(graph)
    return graph, threshold, tau


def _check_format(output_format: str) -> None:
    if output_format not in FORMATS:
        message = f"unknown format '{output_format}'. Available: {', '.join(FORMATS)}"
        raise MalformedInputError(message)


@app.command("enumerate", help="List every (G,m)-multiparking function with its sum")
def enumerate_command(
    graph: str = GRAPH_ARGUMENT,
    *,
    m: int | None = M_OPTION,
    output_format: str = FORMAT_OPTION,
    theme: str = THEME_OPTION,
) -> None:
    logger.debug(f"enumerate: m={m} format={output_format} theme={theme}")
    with _exit_codes():
        _check_format(output_format)
        palette = resolve_theme(theme)
        host, threshold, _ = _load(graph, m, None)
        report = enumerate_report(host, threshold)
    if output_format == "json":
        print(report.model_dump_json(indent=2))
    else:
        render_functions(report, console=console, theme=palette)


@app.command("forests", help="List every spanning color m-forest")
def forests_command(
    graph: str = GRAPH_ARGUMENT,
    *,
    m: int | None = M_OPTION,
    output_format: str = FORMAT_OPTION,
    theme: str = THEME_OPTION,
) -> None:
    logger.debug(f"forests: m={m} format={output_format} theme={theme}")
    with _exit_codes():
        _check_format(output_format)
        palette = resolve_theme(theme)
        host, threshold, _ = _load(graph, m, None)
        listing = forest_listing(host, threshold)
    if output_format == "json":
        print(listing.model_dump_json(indent=2))
    else:
        render_forests(listing, console=console, theme=palette)


@app.command("phi", help="Map a multiparking function to its forest and order")
def phi_command(
    graph: str = GRAPH_ARGUMENT,
    *,
    function: str = FUNCTION_OPTION,
    m: int | None = M_OPTION,
    ranking: str | None = RANKING_OPTION,
    output_format: str = FORMAT_OPTION,
) -> None:
    logger.debug(f"phi: m={m} ranking={ranking} function={function}")
    with _exit_codes():
        _check_format(output_format)
        host, threshold, tau = _load(graph, m, ranking)
        f = parse_function(function, threshold)
        f.require_size(host)
        result = run_phi(host, threshold, tau, f)
    if output_format == "json":
        print(result.model_dump_json(indent=2))
    else:
        print("\n".join(phi_lines(result)))


@app.command("psi", help="Map a spanning color m-forest back to its function and order")
def psi_command(
    graph: str = GRAPH_ARGUMENT,
    *,
    forest: str = FOREST_OPTION,
    m: int | None = M_OPTION,
    ranking: str | None = RANKING_OPTION,
    output_format: str = FORMAT_OPTION,
) -> None:
    logger.debug(f"psi: m={m} ranking={ranking} forest={forest}")
    with _exit_codes():
        _check_format(output_format)
        host, threshold, tau = _load(graph, m, ranking)
        colored = parse_forest(forest, host.n, threshold)
        result = run_psi(host, threshold, tau, colored)
    if output_format == "json":
        print(result.model_dump_json(indent=2))
    else:
        print("\n".join(psi_lines(result)))


@app.command("poly", help="Compute P, Pbar or I as a Laurent polynomial in q")
def poly_command(
    graph: str = GRAPH_ARGUMENT,
    *,
    which: str = WHICH_OPTION,
    m: int | None = M_OPTION,
    ranking: str | None = RANKING_OPTION,
    output_format: str = FORMAT_OPTION,
) -> None:
    logger.debug(f"poly: which={which} m={m} ranking={ranking}")
    with _exit_codes():
        _check_format(output_format)
        host, threshold, tau = _load(graph, m, ranking)
        report = poly_report(host, threshold, which, tau)
    if output_format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(report.polynomial.text)


@app.command("verify", help="Check an identity and report both sides")
def verify_command(
    graph: str = GRAPH_ARGUMENT,
    *,
    check: str = CHECK_OPTION,
    m: int | None = M_OPTION,
    ranking: str | None = RANKING_OPTION,
    output_format: str = FORMAT_OPTION,
    theme: str = THEME_OPTION,
) -> None:
    logger.debug(f"verify: check={check} m={m} ranking={ranking}")
    with _exit_codes():
        _check_format(output_format)
        palette = resolve_theme(theme)
        host, threshold, tau = _load(graph, m, ranking)
        report = run_check(host, threshold, tau, check)
    if output_format == "json":
        print(report.model_dump_json(indent=2))
    else:
        render_check(report, console=console, theme=palette)
    if not report.passed:
        raise typer.Exit(2)


@app.command("corpus", help="Stream small connected multigraphs as JSON lines")
def corpus_command(
    *,
    max_n: int = MAX_N_OPTION,
    max_mu: int = MAX_MU_OPTION,
    count: int = COUNT_OPTION,
    seed: int = SEED_OPTION,
) -> None:
    logger.debug(f"corpus: max_n={max_n} max_mu={max_mu} count={count} seed={seed}")
    with _exit_codes():
        if count < 0:
            message = f"count must be non-negative: {count}"
            raise MalformedInputError(message)
        for host in generate_corpus(max_n, max_mu, count, seed):
            print(dump_graph(host))


def run():
    app()
