"""Small-graph corpus: exhaustive labeled multigraphs plus seeded random ones."""

import itertools
import random
from collections.abc import Iterator

from gmpark.errors import MalformedInputError
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph

logger = logger.getChild("corpus")


def exhaustive_graphs(n: int, max_mu: int) -> Iterator[ColoredMultigraph]:
    """Connected loop-free labeled multigraphs on exactly ``n`` vertices.

    Every vertex pair takes a multiplicity in ``0..max_mu``; assignments are
    visited in lexicographic order over the pairs ``(1,2), (1,3), ...``.
    """
    if n <= 0 or max_mu < 0:
        message = f"corpus bounds must satisfy n >= 1 and max_mu >= 0: n={n} max_mu={max_mu}"
        raise MalformedInputError(message)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for counts in itertools.product(range(max_mu + 1), repeat=len(pairs)):
        edges = [pair for pair, count in zip(pairs, counts, strict=True) for _ in range(count)]
        graph = ColoredMultigraph.from_edge_list(n, edges)
        if graph.is_connected:
            yield graph


def random_graph(n: int, max_mu: int, rng: random.Random) -> ColoredMultigraph:
    """Sparse random connected loop-free multigraph.

    A random spanning tree plus at most ``n // 2`` extra edges on random pairs,
    each pair capped at ``max_mu``.
    """
    if max_mu < 1 and n > 1:
        message = "random connected graphs need max_mu >= 1"
        raise MalformedInputError(message)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    counts: dict[tuple[int, int], int] = {}
    for index in range(1, n):
        u, v = sorted((labels[index], labels[rng.randrange(index)]))
        counts[(u, v)] = 1
    for _ in range(rng.randint(0, n // 2)):
        u, v = sorted(rng.sample(range(1, n + 1), 2))
        counts[(u, v)] = min(max_mu, counts.get((u, v), 0) + 1)
    edges = [pair for pair, count in sorted(counts.items()) for _ in range(count)]
    return ColoredMultigraph.from_edge_list(n, edges)


def random_graphs(
    count: int, sizes: tuple[int, ...], max_mu: int, seed: int
) -> Iterator[ColoredMultigraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng.choice(sizes), max_mu, rng)


def generate_corpus(
    max_n: int, max_mu: int, count: int = 0, seed: int = 0
) -> Iterator[ColoredMultigraph]:
    """Exhaustive graphs on ``max_n`` vertices, then ``count`` random graphs.

    Random graphs have ``max_n+1`` or ``max_n+2`` vertices.
    """
    produced = 0
    for graph in exhaustive_graphs(max_n, max_mu):
        produced += 1
        yield graph
    logger.debug(f"corpus: {produced} exhaustive graphs for n={max_n} mu<={max_mu}")
    if count:
        yield from random_graphs(count, (max_n + 1, max_n + 2), max(max_mu, 1), seed)
