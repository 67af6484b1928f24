"""Report models returned by the service layer and printed by the CLI."""

from pydantic import BaseModel, Field, NonNegativeInt, computed_field

from gmpark.documents import ForestDocument
from gmpark.polynomial import BivariatePolynomial, LaurentPolynomial


class PolynomialModel(BaseModel):
    """Polynomial in frozen text form plus its ``{"exponent": coefficient}`` JSON form."""

    text: str
    terms: dict[str, int]

    @classmethod
    def of(cls, polynomial: LaurentPolynomial | BivariatePolynomial) -> "PolynomialModel":
        return cls(text=str(polynomial), terms=polynomial.to_json())


class FunctionEntry(BaseModel):
    values: list[int]
    total: int


class EnumerationReport(BaseModel):
    """All multiparking functions of a graph for one threshold."""

    n: int
    m: int
    count: NonNegativeInt = Field(default=0)
    functions: list[FunctionEntry] = Field(default_factory=list)
    absolute_roots: list[int] = Field(default_factory=list)
    relative_roots: list[int] = Field(default_factory=list)
    polynomial: PolynomialModel


class ForestEntry(BaseModel):
    edges: list[tuple[int, int, int]]
    components: int


class ForestListing(BaseModel):
    n: int
    m: int
    count: NonNegativeInt = Field(default=0)
    forests: list[ForestEntry] = Field(default_factory=list)


class PhiResult(BaseModel):
    forest: ForestDocument
    order: list[int]


class PsiResult(BaseModel):
    function: list[int]
    order: list[int]


class PolyReport(BaseModel):
    which: str
    m: int
    ranking: list[int] | None = None
    polynomial: PolynomialModel


class CheckSide(BaseModel):
    """One side of a verified identity, rendered as text."""

    label: str
    value: str


class CheckReport(BaseModel):
    """Outcome of a ``verify`` check."""

    check: str
    n: int
    m: int
    ranking: list[int] | None = None
    cases: NonNegativeInt = Field(default=0)
    sides: list[CheckSide] = Field(default_factory=list)
    failures: list[str] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures

    def add_side(self, label: str, value: object) -> None:
        self.sides.append(CheckSide(label=label, value=str(value)))

    def record(self, ok: bool, description: str) -> None:
        """Count one checked case and keep its description when it fails."""
        self.cases += 1
        if not ok:
            self.failures.append(description)
