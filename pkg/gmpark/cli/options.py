import typer
from rich.console import Console

from gmpark import __version__
from gmpark.service import CHECKS
from gmpark.theme import AVAILABLE_THEMES


def _version_callback(value: bool | None):
    """Display the CLI version when the eager flag is provided."""
    if value:
        console = Console()
        console.print(f"v{__version__}")
        raise typer.Exit(0)


VERSION_OPTION = typer.Option(
    False,
    "--version",
    "-v",
    is_flag=True,
    is_eager=True,
    callback=_version_callback,
    help="Show gmpark version",
)

GRAPH_ARGUMENT = typer.Argument(
    ...,
    help='Graph document: a JSON file path or inline JSON such as \'{"n": 3, "edges": [[1,2]]}\'.',
    show_default=False,
)

M_OPTION = typer.Option(
    None,
    "--m",
    "-m",
    help="Root threshold m in 1..n. Defaults to n.",
    show_default=False,
)

RANKING_OPTION = typer.Option(
    None,
    "--ranking",
    "-r",
    help="Vertex ranking as comma-separated images tau(1),...,tau(n). Defaults to identity.",
    show_default=False,
)

FUNCTION_OPTION = typer.Option(
    ...,
    "--function",
    "-f",
    help="Vertex function as a JSON list [f(1),...,f(n)] or a path to one.",
    show_default=False,
)

FOREST_OPTION = typer.Option(
    ...,
    "--forest",
    help='Forest document {"edges": [[u,v,color], ...]} inline or as a file path.',
    show_default=False,
)

WHICH_OPTION = typer.Option(
    "P",
    "--which",
    "-w",
    help="Polynomial to compute: P, Pbar or I.",
    case_sensitive=True,
)

CHECK_OPTION = typer.Option(
    "reciprocity",
    "--check",
    "-c",
    help=f"Identity to verify. Available: {', '.join(CHECKS)}.",
)

FORMAT_OPTION = typer.Option(
    "text",
    "--format",
    help="Output format: text or json.",
)

THEME_OPTION = typer.Option(
    "default",
    "--theme",
    help=f"Select output colour theme. Available: {', '.join(AVAILABLE_THEMES)}.",
    show_default=True,
    case_sensitive=False,
)

MAX_N_OPTION = typer.Option(
    3,
    "--max-n",
    help="Vertex count of the exhaustive corpus part.",
)

MAX_MU_OPTION = typer.Option(
    1,
    "--max-mu",
    help="Largest edge multiplicity between two vertices.",
)

COUNT_OPTION = typer.Option(
    0,
    "--count",
    help="Number of seeded random graphs on max_n+1 or max_n+2 vertices.",
)

SEED_OPTION = typer.Option(
    0,
    "--seed",
    help="Seed for the random part of the corpus.",
)
