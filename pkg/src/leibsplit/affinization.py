"""The graded product on A ⊗ K[t, t⁻¹] and exact Leibniz checks for it.

(x⊗tⁱ)·(y⊗tʲ) = x∘y ⊗ t^{i+j} + (i x⊢y − j y⊣x) ⊗ t^{i+j−1}

For basis x, y, z the Leibniz defect of x⊗tⁱ, y⊗tʲ, z⊗tᵏ lives in degrees
i+j+k, i+j+k−1 and i+j+k−2, and each of those three coefficients is a polynomial
in (i, j, k) of degree at most 2 in every variable. Three sample points per
variable therefore determine it, so vanishing on {0, 1, 2}³ is equivalent to
vanishing for all integer degrees.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from leibsplit.algebra import AlgebraBundle, multiply
from leibsplit.errors import DimensionMismatch
from leibsplit.identities import CheckReport, Counterexample
from leibsplit.linalg import Scalar, Vector
from leibsplit.utils import basis_tuples

logger = logging.getLogger("leibsplit")

GRID = (0, 1, 2)
DEFAULT_SLOTS = ("circ", "vdash", "dashv")


@dataclass(frozen=True)
class LaurentElement:
    """Finite sum Σ v_d ⊗ t^d; zero coefficients are never stored."""

    dim: int
    terms: Mapping[int, Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for degree, v in self.terms.items():
            if len(v) != self.dim:
                raise DimensionMismatch(f"coefficient of t^{degree} has length {len(v)}, expected {self.dim}")
        object.__setattr__(
            self, "terms", {d: v for d, v in sorted(self.terms.items()) if not v.is_zero()}
        )

    @classmethod
    def monomial(cls, v: Vector, degree: int) -> LaurentElement:
        return cls(len(v), {degree: v})

    def coefficient(self, degree: int) -> Vector:
        return self.terms.get(degree, Vector.zero(self.dim))

    def __add__(self, other: LaurentElement) -> LaurentElement:
        if other.dim != self.dim:
            raise DimensionMismatch(f"Laurent elements over dims {self.dim} and {other.dim}")
        terms = dict(self.terms)
        for d, v in other.terms.items():
            terms[d] = terms[d] + v if d in terms else v
        return LaurentElement(self.dim, terms)

    def __neg__(self) -> LaurentElement:
        return LaurentElement(self.dim, {d: -v for d, v in self.terms.items()})

    def __sub__(self, other: LaurentElement) -> LaurentElement:
        return self + (-other)

    def scale(self, c: Scalar) -> LaurentElement:
        return LaurentElement(self.dim, {d: v.scale(c) for d, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms


def affinized_product(
    bundle: AlgebraBundle,
    a: LaurentElement,
    b: LaurentElement,
    slots: tuple[str, str, str] = DEFAULT_SLOTS,
) -> LaurentElement:
    if a.dim != bundle.dim or b.dim != bundle.dim:
        raise DimensionMismatch(f"Laurent elements of dims {a.dim}, {b.dim} over algebra of dim {bundle.dim}")
    circ, vdash, dashv = (bundle.product(name) for name in slots)
    terms: dict[int, Vector] = {}

    def add(degree: int, v: Vector) -> None:
        terms[degree] = terms[degree] + v if degree in terms else v

    for i, x in a.terms.items():
        for j, y in b.terms.items():
            add(i + j, multiply(circ, x, y))
            add(i + j - 1, multiply(vdash, x, y).scale(i) - multiply(dashv, y, x).scale(j))
    return LaurentElement(bundle.dim, terms)


def affine_leibniz_defect(
    bundle: AlgebraBundle,
    vectors: tuple[Vector, Vector, Vector],
    degrees: tuple[int, int, int],
    slots: tuple[str, str, str] = DEFAULT_SLOTS,
) -> LaurentElement:
    """X·(Y·Z) − (X·Y)·Z − Y·(X·Z) for X = x⊗tⁱ, Y = y⊗tʲ, Z = z⊗tᵏ."""
    X, Y, Z = (LaurentElement.monomial(v, d) for v, d in zip(vectors, degrees))

    def mul(p: LaurentElement, q: LaurentElement) -> LaurentElement:
        return affinized_product(bundle, p, q, slots)

    return mul(X, mul(Y, Z)) - mul(mul(X, Y), Z) - mul(Y, mul(X, Z))


def tensor_level_defect(
    bundle: AlgebraBundle,
    degrees: tuple[int, int, int],
    basis: tuple[int, int, int],
    level: int,
    slots: tuple[str, str, str] = DEFAULT_SLOTS,
) -> Vector:
    """Coefficient of t^{i+j+k−level} in the affinized Leibniz defect."""
    vectors = tuple(Vector.basis(bundle.dim, b) for b in basis)
    defect = affine_leibniz_defect(bundle, vectors, degrees, slots)
    return defect.coefficient(sum(degrees) - level)


def _scan(
    bundle: AlgebraBundle,
    degree_triples: Iterable[tuple[int, int, int]],
    slots: tuple[str, str, str],
    by_level: bool,
) -> Counterexample | None:
    basis = [Vector.basis(bundle.dim, i) for i in range(bundle.dim)]
    for degrees in degree_triples:
        for indices in basis_tuples(bundle.dim, 3):
            vectors = tuple(basis[i] for i in indices)
            defect = affine_leibniz_defect(bundle, vectors, degrees, slots)
            if defect.is_zero():
                continue
            total = sum(degrees)
            if by_level:
                level = next(lv for lv in range(3) if total - lv in defect.terms)
                return Counterexample(
                    level, f"tensor{level + 1}", indices, defect.coefficient(total - level), degrees
                )
            top = max(defect.terms)
            return Counterexample(0, f"leibniz@t^{top}", indices, defect.coefficient(top), degrees)
    return None


def leibniz_grid_check(
    bundle: AlgebraBundle, slots: tuple[str, str, str] = DEFAULT_SLOTS, debug: bool = False
) -> CheckReport:
    """Decide whether the affinization is Leibniz for all integer degrees."""
    counterexample = _scan(bundle, itertools.product(GRID, repeat=3), slots, by_level=True)
    if debug and counterexample is not None:
        logger.info(
            "affinized Leibniz fails at degrees %s, basis %s (%s)",
            counterexample.degrees,
            counterexample.basis,
            counterexample.label,
        )
    return CheckReport(counterexample is None, counterexample, "affinized-leibniz")


def windowed_leibniz_check(
    bundle: AlgebraBundle,
    degrees: Iterable[int],
    slots: tuple[str, str, str] = DEFAULT_SLOTS,
) -> CheckReport:
    """Leibniz identity on explicit monomials with degrees drawn from ``degrees``."""
    window = list(degrees)
    counterexample = _scan(bundle, itertools.product(window, repeat=3), slots, by_level=False)
    return CheckReport(counterexample is None, counterexample, "windowed-leibniz")
