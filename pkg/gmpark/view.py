"""Rendering helpers using Rich for gmpark CLI output."""

from collections.abc import Sequence

from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from gmpark.errors import MalformedInputError
from gmpark.models import (
    CheckReport,
    EnumerationReport,
    ForestListing,
    PhiResult,
    PsiResult,
)
from gmpark.theme import AVAILABLE_THEMES, THEMES, GmparkTheme


def resolve_theme(name: str) -> GmparkTheme:
    """Return the colour palette for the requested theme name."""
    try:
        return THEMES[name.lower()]
    except KeyError as exc:
        message = f"unknown theme '{name}'. Available themes: {', '.join(AVAILABLE_THEMES)}"
        raise MalformedInputError(message) from exc


def format_vector(values: Sequence[int]) -> str:
    return "[" + ",".join(str(value) for value in values) + "]"


def format_order(order: Sequence[int]) -> str:
    return "(" + ",".join(str(vertex) for vertex in order) + ")"


def format_forest_edges(edges: Sequence[tuple[int, int, int]]) -> str:
    """``{{u,v}_c,...}`` in the given edge order."""
    return "{" + ",".join(f"{{{u},{v}}}_{c}" for u, v, c in edges) + "}"


def phi_lines(result: PhiResult) -> list[str]:
    return [
        f"forest: {format_forest_edges(result.forest.edges)}",
        f"order: {format_order(result.order)}",
    ]


def psi_lines(result: PsiResult) -> list[str]:
    return [
        f"function: {format_vector(result.function)}",
        f"order: {format_order(result.order)}",
    ]


def _table(title: str, theme: GmparkTheme) -> Table:
    return Table(
        title=title,
        box=box.SIMPLE_HEAVY,
        show_lines=False,
        header_style=theme.header_style,
        row_styles=theme.row_styles,
        pad_edge=False,
        padding=(0, 1),
    )


def _vertex_list(vertices: Sequence[int]) -> str:
    return ", ".join(str(v) for v in vertices) if vertices else "none"


def render_functions(
    report: EnumerationReport,
    *,
    console: Console | None = None,
    theme: GmparkTheme,
) -> None:
    """Render every multiparking function with its sum, then the root profile and P."""
    console = console or Console()

    header = Text(f"n={report.n} m={report.m}:", style=theme.accent_style)
    header.append(f" {report.count} multiparking functions", style=theme.count_style)
    console.print(header)

    table = _table("Multiparking Functions", theme)
    table.add_column("#", justify="right", style=theme.accent_style)
    table.add_column("f", style=theme.vector_style)
    table.add_column("sum f", justify="right", style=theme.count_style)
    for index, entry in enumerate(report.functions, start=1):
        table.add_row(str(index), format_vector(entry.values), str(entry.total))
    console.print(table)

    roots = Text("Absolute roots:", style=theme.accent_style)
    roots.append(f" {_vertex_list(report.absolute_roots)}", style=theme.label_style)
    roots.append(" | relative roots:", style=theme.accent_style)
    roots.append(f" {_vertex_list(report.relative_roots)}", style=theme.label_style)
    console.print(roots)

    polynomial = Text("P(q) =", style=theme.accent_style)
    polynomial.append(f" {report.polynomial.text}", style=theme.polynomial_style)
    console.print(polynomial)


def render_forests(
    listing: ForestListing,
    *,
    console: Console | None = None,
    theme: GmparkTheme,
) -> None:
    console = console or Console()

    if listing.count == 0:
        console.print(Text("No spanning color forests found.", style=theme.warning_style))
        return

    table = _table(f"Spanning Color {listing.m}-Forests (n={listing.n})", theme)
    table.add_column("#", justify="right", style=theme.accent_style)
    table.add_column("Forest", overflow="fold", style=theme.forest_style)
    table.add_column("Edges", justify="right", style=theme.count_style)
    table.add_column("Components", justify="right", style=theme.count_style)
    for index, entry in enumerate(listing.forests, start=1):
        table.add_row(
            str(index),
            format_forest_edges(entry.edges),
            str(len(entry.edges)),
            str(entry.components),
        )
    console.print(table)
    console.print(Text(f"{listing.count} forests", style=theme.info_style))


def render_check(
    report: CheckReport,
    *,
    console: Console | None = None,
    theme: GmparkTheme,
) -> None:
    """Render both sides of a verified identity followed by the verdict and failures."""
    console = console or Console()

    table = _table(f"Check: {report.check} (n={report.n}, m={report.m})", theme)
    table.add_column("Side", style=theme.label_style)
    table.add_column("Value", overflow="fold", style=theme.polynomial_style)
    for side in report.sides:
        table.add_row(side.label, side.value)
    console.print(table)

    if report.passed:
        verdict = Text("PASS", style=theme.pass_style)
    else:
        verdict = Text("FAIL", style=theme.fail_style)
    verdict.append(f" ({report.cases} cases checked)", style=theme.info_style)
    console.print(verdict)

    for failure in report.failures:
        console.print(Text(f"  - {failure}", style=theme.warning_style))
