"""Pydantic models for the JSON wire formats (graphs, functions, forests)."""

import json
from typing import Annotated, Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    TypeAdapter,
    ValidationError,
)

from gmpark.errors import MalformedInputError
from gmpark.logger import logger
from gmpark.multigraph import ColoredMultigraph, EdgeRef
from gmpark.structures import ColorForest, MultiparkingFunction
from gmpark.utils import read_source

logger = logger.getChild("documents")

VertexValue = Annotated[int, Field(ge=-1)]


class GraphDocument(BaseModel):
    """``{"n": 3, "edges": [[1,2],[1,3]]}``; repeats are parallel edges, ``[i,i]`` a loop."""

    model_config = ConfigDict(extra="forbid")

    n: PositiveInt
    edges: list[tuple[PositiveInt, PositiveInt]] = Field(default_factory=list)

    def to_graph(self) -> ColoredMultigraph:
        return ColoredMultigraph.from_edge_list(self.n, self.edges)

    @classmethod
    def from_graph(cls, graph: ColoredMultigraph) -> "GraphDocument":
        return cls(n=graph.n, edges=graph.edge_pairs())


class ForestDocument(BaseModel):
    """``{"edges": [[u,v,color], ...]}``."""

    model_config = ConfigDict(extra="forbid")

    edges: list[tuple[PositiveInt, PositiveInt, NonNegativeInt]] = Field(
        default_factory=list
    )

    def to_forest(self, n: int, m: int) -> ColorForest:
        return ColorForest(n, m, tuple(EdgeRef(u, v, c) for u, v, c in self.edges))

    @classmethod
    def from_forest(cls, forest: ColorForest) -> "ForestDocument":
        return cls(edges=[(e.u, e.v, e.color) for e in forest.edges])


_function_adapter = TypeAdapter(list[VertexValue])


def _decode(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        message = f"{what} is not valid JSON: {exc.msg} (line {exc.lineno})"
        raise MalformedInputError(message) from exc


def _validation_message(what: str, exc: ValidationError) -> str:
    details = "; ".join(
        f"{'.'.join(str(part) for part in error['loc']) or '<root>'}: {error['msg']}"
        for error in exc.errors()
    )
    return f"invalid {what}: {details}"


def parse_graph(source: str) -> ColoredMultigraph:
    """Read a graph document given inline or as a file path."""
    raw = _decode(read_source(source), "graph document")
    try:
        document = GraphDocument.model_validate(raw)
    except ValidationError as exc:
        logger.debug(f"graph validation error: {raw}")
        raise MalformedInputError(_validation_message("graph document", exc)) from exc
    return document.to_graph()


def parse_function(source: str, m: int) -> MultiparkingFunction:
    """Read ``[f(1), ..., f(n)]``."""
    raw = _decode(read_source(source), "function")
    try:
        values = _function_adapter.validate_python(raw)
    except ValidationError as exc:
        raise MalformedInputError(_validation_message("function", exc)) from exc
    return MultiparkingFunction(m, tuple(values))


def parse_forest(source: str, n: int, m: int) -> ColorForest:
    raw = _decode(read_source(source), "forest document")
    try:
        document = ForestDocument.model_validate(raw)
    except ValidationError as exc:
        raise MalformedInputError(_validation_message("forest document", exc)) from exc
    return document.to_forest(n, m)


def dump_graph(graph: ColoredMultigraph) -> str:
    """Compact single-line graph document."""
    return GraphDocument.from_graph(graph).model_dump_json()
