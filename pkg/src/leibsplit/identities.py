"""Multilinear identities as expression trees, and an exact exhaustive checker.

Identities are written in a small ASCII language, e.g.::

    x circ (y circ z) = (x circ y) circ z + y circ (x circ z)
    omega(x, y circ z) = omega(x circ z + z circ x, y)

Products are infix names, maps are applied like functions, forms take two
arguments. Coefficients are integers or ``p/q`` and scale the factor that follows.
Every identity handled here is linear in each variable separately, so checking
all tuples of basis vectors decides it.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from leibsplit.algebra import AlgebraBundle, MultTable, multiply, table_sum
from leibsplit.errors import ParseError, UnassignedVariable, UnknownName
from leibsplit.linalg import Vector
from leibsplit.utils import basis_tuples

logger = logging.getLogger("leibsplit")

VARIABLES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class Var:
    symbol: str


@dataclass(frozen=True)
class Prod:
    product: str
    left: Term
    right: Term


@dataclass(frozen=True)
class Map:
    name: str
    arg: Term


@dataclass(frozen=True)
class Scale:
    coeff: Fraction
    term: Term


@dataclass(frozen=True)
class Sum:
    terms: tuple[Term, ...]


Term = Union[Var, Prod, Map, Scale, Sum]


@dataclass(frozen=True)
class VectorEq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class FormEq:
    """Σ cᵢ·ω(sᵢ, tᵢ) = 0."""

    form: str
    terms: tuple[tuple[Fraction, Term, Term], ...]


@dataclass(frozen=True)
class Equation:
    label: str
    kind: VectorEq | FormEq
    variables: tuple[str, ...]
    source: str = ""


@dataclass(frozen=True)
class IdentitySystem:
    """Named list of equations over product, form and map slots.

    ``derived`` products are sums of slot products (``circ = succ + prec``).
    When ``each_product`` is set, the equations are stated for the single slot
    ``circ`` and are checked once for every product of the bundle.
    """

    name: str
    equations: tuple[Equation, ...]
    products: tuple[str, ...] = ()
    forms: tuple[str, ...] = ()
    maps: tuple[str, ...] = ()
    derived: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    each_product: bool = False
    notes: str = ""


@dataclass(frozen=True)
class Counterexample:
    equation_index: int
    label: str
    basis: tuple[int, ...]
    defect: Vector | Fraction
    degrees: tuple[int, int, int] | None = None


@dataclass(frozen=True)
class CheckReport:
    holds: bool
    counterexample: Counterexample | None = None
    system: str = ""

    def __bool__(self) -> bool:
        return self.holds


# -- parser -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    for number, name, symbol in _TOKEN_RE.findall(text):
        token = number or name or symbol
        if token.strip():
            tokens.append(token)
    return tokens


class _Parser:
    def __init__(self, text: str, products: Iterable[str], maps: Iterable[str], forms: Iterable[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.products = set(products)
        self.maps = set(maps)
        self.forms = set(forms)
        self.variables: set[str] = set()

    def _peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> str:
        token = self._peek()
        if token is None:
            raise ParseError(f"unexpected end of identity: {self.text!r}")
        self.pos += 1
        return token

    def _expect(self, token: str) -> None:
        got = self._next()
        if got != token:
            raise ParseError(f"expected {token!r}, got {got!r} in {self.text!r}")

    def _coefficient(self) -> Fraction | None:
        token = self._peek()
        if token is not None and token[0].isdigit():
            self.pos += 1
            if self._peek() == "*":
                self.pos += 1
            return Fraction(token)
        return None

    def _signed_terms(self, parse_term):
        terms = []
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._next() == "-" else 1
        while True:
            terms.extend((sign * c, t) for c, t in parse_term())
            if self._peek() in ("+", "-"):
                sign = -1 if self._next() == "-" else 1
            else:
                return terms

    # vector expressions
    def expr(self) -> Term:
        terms = self._signed_terms(self._vterm)
        parts = tuple(t if c == 1 else Scale(Fraction(c), t) for c, t in terms)
        if len(parts) == 1:
            return parts[0]
        return Sum(parts)

    def _vterm(self) -> list[tuple[Fraction, Term]]:
        coeff = self._coefficient()
        if coeff is not None and not self._starts_operand():
            if coeff != 0:
                raise ParseError(f"bare constant {coeff} in {self.text!r}")
            return []
        return [(coeff if coeff is not None else Fraction(1), self._factor())]

    def _starts_operand(self) -> bool:
        token = self._peek()
        return token is not None and (token == "(" or token[0].isalpha() or token[0] == "_")

    def _factor(self) -> Term:
        term = self._operand()
        while self._peek() in self.products:
            product = self._next()
            term = Prod(product, term, self._operand())
        return term

    def _operand(self) -> Term:
        token = self._next()
        if token == "(":
            inner = self.expr()
            self._expect(")")
            return inner
        if token in self.maps:
            self._expect("(")
            inner = self.expr()
            self._expect(")")
            return Map(token, inner)
        if token in VARIABLES:
            self.variables.add(token)
            return Var(token)
        raise ParseError(f"unknown name {token!r} in {self.text!r}")

    # form expressions
    def form_expr(self) -> list[tuple[Fraction, str, Term, Term]]:
        return [(c, *rest) for c, rest in self._signed_terms(self._fterm)]

    def _fterm(self) -> list[tuple[Fraction, tuple[str, Term, Term]]]:
        coeff = self._coefficient()
        if coeff is not None and self._peek() not in self.forms:
            if coeff != 0:
                raise ParseError(f"bare constant {coeff} in {self.text!r}")
            return []
        name = self._next()
        if name not in self.forms:
            raise ParseError(f"expected a form, got {name!r} in {self.text!r}")
        self._expect("(")
        left = self.expr()
        self._expect(",")
        right = self.expr()
        self._expect(")")
        return [(coeff if coeff is not None else Fraction(1), (name, left, right))]

    def done(self) -> None:
        if self._peek() is not None:
            raise ParseError(f"trailing input {self._peek()!r} in {self.text!r}")


def parse_term(
    text: str, products: Iterable[str] = (), maps: Iterable[str] = ()
) -> Term:
    parser = _Parser(text, products, maps, ())
    term = parser.expr()
    parser.done()
    return term


def parse_equation(
    text: str,
    label: str,
    products: Iterable[str] = (),
    forms: Iterable[str] = (),
    maps: Iterable[str] = (),
) -> Equation:
    """Parse ``"lhs = rhs"``; it becomes a form equation when a form name occurs."""
    products, forms, maps = list(products), list(forms), list(maps)
    parser = _Parser(text, products, maps, forms)
    if any(token in parser.forms for token in parser.tokens):
        lhs = parser.form_expr()
        parser._expect("=")
        rhs = parser.form_expr()
        parser.done()
        names = {name for _, name, _, _ in lhs + rhs}
        if len(names) != 1:
            raise ParseError(f"form equation must use exactly one form: {text!r}")
        terms = tuple((c, s, t) for c, _, s, t in lhs) + tuple((-c, s, t) for c, _, s, t in rhs)
        kind: VectorEq | FormEq = FormEq(names.pop(), terms)
    else:
        left = parser.expr()
        parser._expect("=")
        right = parser.expr()
        parser.done()
        kind = VectorEq(left, right)
    variables = tuple(v for v in VARIABLES if v in parser.variables)
    return Equation(label, kind, variables, text)


# -- evaluation ---------------------------------------------------------------


def evaluate_term(term: Term, bundle: AlgebraBundle, assignment: Mapping[str, Vector]) -> Vector:
    """Evaluate ``term`` with the bundle's products and maps."""
    if isinstance(term, Var):
        try:
            return assignment[term.symbol]
        except KeyError:
            raise UnassignedVariable(f"variable {term.symbol!r} is not assigned") from None
    if isinstance(term, Prod):
        table = bundle.product(term.product)
        return multiply(
            table,
            evaluate_term(term.left, bundle, assignment),
            evaluate_term(term.right, bundle, assignment),
        )
    if isinstance(term, Map):
        return bundle.map(term.name)(evaluate_term(term.arg, bundle, assignment))
    if isinstance(term, Scale):
        if term.coeff == 0:
            return Vector.zero(bundle.dim)
        return evaluate_term(term.term, bundle, assignment).scale(term.coeff)
    if isinstance(term, Sum):
        total = Vector.zero(bundle.dim)
        for part in term.terms:
            total = total + evaluate_term(part, bundle, assignment)
        return total
    raise TypeError(f"not a term: {term!r}")


def equation_defect(eq: Equation, bundle: AlgebraBundle, assignment: Mapping[str, Vector]) -> Vector | Fraction:
    """lhs − rhs for vector equations, Σ cᵢ·ω(sᵢ, tᵢ) for form equations."""
    if isinstance(eq.kind, VectorEq):
        return evaluate_term(eq.kind.lhs, bundle, assignment) - evaluate_term(eq.kind.rhs, bundle, assignment)
    omega = bundle.form(eq.kind.form)
    total = Fraction(0)
    for c, s, t in eq.kind.terms:
        total += c * omega(evaluate_term(s, bundle, assignment), evaluate_term(t, bundle, assignment))
    return total


def _is_zero(defect: Vector | Fraction) -> bool:
    return defect.is_zero() if isinstance(defect, Vector) else defect == 0


def _bind(
    system: IdentitySystem,
    bundle: AlgebraBundle,
    products: Sequence[str] | Mapping[str, str] | None,
    forms: Sequence[str] | Mapping[str, str] | None,
    maps: Sequence[str] | Mapping[str, str] | None,
) -> AlgebraBundle:
    """Expose the bundle's members under the system's slot names."""

    def mapping(slots: tuple[str, ...], names) -> dict[str, str]:
        if names is None:
            return {s: s for s in slots}
        if isinstance(names, Mapping):
            return {s: names.get(s, s) for s in slots}
        if len(names) != len(slots):
            raise UnknownName(f"{system.name} needs {len(slots)} names {slots}, got {list(names)}")
        return dict(zip(slots, names))

    bound_products: dict[str, MultTable] = {
        slot: bundle.product(name) for slot, name in mapping(system.products, products).items()
    }
    for name, parts in system.derived.items():
        table = bound_products[parts[0]]
        for part in parts[1:]:
            table = table_sum(table, bound_products[part])
        bound_products[name] = table
    return AlgebraBundle(
        bundle.dim,
        products=bound_products,
        forms={slot: bundle.form(name) for slot, name in mapping(system.forms, forms).items()},
        maps={slot: bundle.map(name) for slot, name in mapping(system.maps, maps).items()},
    )


def _first_failure(
    equations: Sequence[Equation], bundle: AlgebraBundle, offset: int = 0
) -> Counterexample | None:
    basis = [Vector.basis(bundle.dim, i) for i in range(bundle.dim)]
    for index, eq in enumerate(equations):
        for indices in basis_tuples(bundle.dim, len(eq.variables)):
            assignment = {v: basis[i] for v, i in zip(eq.variables, indices)}
            defect = equation_defect(eq, bundle, assignment)
            if not _is_zero(defect):
                return Counterexample(offset + index, eq.label, tuple(indices), defect)
    return None


def check_system(
    system: IdentitySystem,
    bundle: AlgebraBundle,
    products: Sequence[str] | Mapping[str, str] | None = None,
    forms: Sequence[str] | Mapping[str, str] | None = None,
    maps: Sequence[str] | Mapping[str, str] | None = None,
    debug: bool = False,
) -> CheckReport:
    """Check every equation at every tuple of basis vectors.

    The first failure in (equation order, lexicographic basis tuple) order is
    reported, so the verdict and the counterexample are deterministic.
    """
    if system.each_product:
        names = list(products) if products is not None and not isinstance(products, Mapping) else list(bundle.products)
        counterexample = None
        for position, name in enumerate(names):
            bound = _bind(system, bundle, [name], forms, maps)
            counterexample = _first_failure(system.equations, bound, position * len(system.equations))
            if counterexample is not None:
                counterexample = Counterexample(
                    counterexample.equation_index,
                    f"{counterexample.label}[{name}]",
                    counterexample.basis,
                    counterexample.defect,
                )
                break
    else:
        bound = _bind(system, bundle, products, forms, maps)
        counterexample = _first_failure(system.equations, bound)

    if debug:
        if counterexample is None:
            logger.info("%s holds (dim %d)", system.name, bundle.dim)
        else:
            logger.info(
                "%s fails at equation %s, basis %s",
                system.name,
                counterexample.label,
                counterexample.basis,
            )
    return CheckReport(counterexample is None, counterexample, system.name)
