"""Exact sparse polynomials: Laurent polynomials in ``q`` and bivariate ``T(x, y)``."""

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import TypeVar

from gmpark.errors import MalformedInputError


K = TypeVar("K")


def _clean(terms: Iterable[tuple[K, int]]) -> dict[K, int]:
    merged: dict[K, int] = {}
    for key, coefficient in terms:
        merged[key] = merged.get(key, 0) + coefficient
    return {key: value for key, value in merged.items() if value != 0}


class LaurentPolynomial:
    """Integer-coefficient polynomial in ``q`` allowing negative exponents.

    Zero coefficients are never stored. Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        cleaned = _clean((int(exponent), int(value)) for exponent, value in pairs)
        self._terms = tuple(sorted(cleaned.items(), reverse=True))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "LaurentPolynomial":
        """Sum of ``q**e`` over ``exponents`` (repeats accumulate)."""
        return cls((exponent, 1) for exponent in exponents)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def min_exponent(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = _promote(other)
        return LaurentPolynomial([*self._terms, *other._terms])

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-_promote(other))

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = _promote(other)
        return LaurentPolynomial(
            (e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms
        )

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``q**k``."""
        return LaurentPolynomial((e + k, c) for e, c in self._terms)

    def invert(self) -> "LaurentPolynomial":
        """Substitute ``q -> 1/q``."""
        return LaurentPolynomial((-e, c) for e, c in self._terms)

    def evaluate(self, q: int | Fraction) -> Fraction:
        value = Fraction(q)
        if value == 0 and self.min_exponent is not None and self.min_exponent < 0:
            message = "cannot evaluate a polynomial with negative exponents at q=0"
            raise ZeroDivisionError(message)
        return sum((c * value**e for e, c in self._terms), Fraction(0))

    # -- comparison -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        """Terms joined by `` + `` or `` - ``: negative exponents first, ascending,
        then the rest in descending order, e.g. ``q^-1 + 2`` and ``q^4 + 2*q^3``.
        """
        principal = [term for term in reversed(self._terms) if term[0] < 0]
        regular = [term for term in self._terms if term[0] >= 0]
        return _join_terms((c, _power("q", e)) for e, c in [*principal, *regular])

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.terms!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms}

    @classmethod
    def from_json(cls, payload: Mapping[str, int]) -> "LaurentPolynomial":
        try:
            return cls((int(exponent), int(value)) for exponent, value in payload.items())
        except (TypeError, ValueError) as exc:
            message = f"polynomial JSON must map integer exponents to integers: {payload}"
            raise MalformedInputError(message) from exc


def _promote(value: "LaurentPolynomial | int") -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial.monomial(0, value)


def _power(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"


def _render_term(coefficient: int, monomial: str) -> str:
    if not monomial:
        return str(coefficient)
    if coefficient == 1:
        return monomial
    return f"{coefficient}*{monomial}"


def _join_terms(terms: Iterable[tuple[int, str]]) -> str:
    """Signed terms as ``a + b - c``; a leading negative term keeps its ``-``."""
    text = ""
    for coefficient, monomial in terms:
        body = _render_term(abs(coefficient), monomial)
        if not text:
            text = body if coefficient > 0 else f"-{body}"
        else:
            text += f" + {body}" if coefficient > 0 else f" - {body}"
    return text or "0"


Q = LaurentPolynomial.monomial(1)
Q_INV = LaurentPolynomial.monomial(-1)


class BivariatePolynomial:
    """Polynomial in ``x`` and ``y`` with non-negative exponents (Tutte polynomials)."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
    ):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        cleaned = _clean(pairs)
        if any(a < 0 or b < 0 for a, b in cleaned):
            message = f"bivariate exponents must be non-negative: {sorted(cleaned)}"
            raise MalformedInputError(message)
        self._terms = tuple(
            sorted(cleaned.items(), key=lambda item: (-sum(item[0]), -item[0][0]))
        )

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls({(0, 0): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return BivariatePolynomial([*self._terms, *other._terms])

    def __mul__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return BivariatePolynomial(
            ((a1 + a2, b1 + b2), c1 * c2)
            for (a1, b1), c1 in self._terms
            for (a2, b2), c2 in other._terms
        )

    def times_x(self) -> "BivariatePolynomial":
        return BivariatePolynomial(((a + 1, b), c) for (a, b), c in self._terms)

    def times_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial(((a, b + 1), c) for (a, b), c in self._terms)

    def evaluate(self, x: int | Fraction, y: int | Fraction) -> Fraction:
        return sum(
            (c * Fraction(x) ** a * Fraction(y) ** b for (a, b), c in self._terms),
            Fraction(0),
        )

    def at_one_and_inverse_q(self) -> LaurentPolynomial:
        """Substitute ``x = 1`` and ``y = 1/q``: ``c x^a y^b`` becomes ``c q^-b``."""
        return LaurentPolynomial((-b, c) for (_, b), c in self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms))

    def __str__(self) -> str:
        """Descending total degree, ties by descending ``x`` degree: ``x^2 + x + y``."""
        return _join_terms(
            (c, "*".join(p for p in (_power("x", a), _power("y", b)) if p))
            for (a, b), c in self._terms
        )

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.terms!r})"

    def to_json(self) -> dict[str, int]:
        return {f"{a},{b}": c for (a, b), c in self._terms}
