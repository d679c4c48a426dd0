"""Constructions: Levi-Civita products, anti-O-operators, transforms, double structures.

Every construction validates its input by running the relevant identity system and
raises a ``PreconditionFailed`` subclass when it does not hold. ``force=True`` skips
those checks so that negative paths can be explored.
"""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from typing import Callable

from leibsplit.algebra import (
    AlgebraBundle,
    BilinearForm,
    Flavor,
    LinearEndo,
    MultTable,
    RepBundle,
    SplitPair,
    form_is_nondegenerate,
    form_is_skew,
    multiply,
    table_combination,
    table_flip,
    table_sum,
)
from leibsplit.errors import (
    DegenerateForm,
    DimensionMismatch,
    NotAntiO,
    NotAntiPreLeibniz,
    NotCocycle,
    NotGDAlgebra,
    NotGDDialgebra,
    NotNovikovDialgebra,
    NotPerm,
    NotPreLeibniz,
    NotSkew,
    OperatorAxiomFails,
    PreconditionFailed,
)
from leibsplit.identities import CheckReport, check_system
from leibsplit.linalg import Matrix, Vector, invert, solve_linear
from leibsplit.registry import registry
from leibsplit.representations import (
    adjoint_rep,
    coadjoint_rep,
    dual_leibniz_rep,
    semidirect_leibniz,
    split_negative_rep,
)

logger = logging.getLogger("leibsplit")


class OperatorMode(str, Enum):
    AVERAGING = "averaging"
    DERIVATION = "derivation"


def _require(
    report: CheckReport,
    error: type[PreconditionFailed],
    what: str,
    debug: bool = False,
) -> None:
    if debug:
        logger.info("precondition %s: %s", what, "holds" if report.holds else "fails")
    if not report.holds:
        raise error(f"{what} does not hold", report)


def _require_form(omega: BilinearForm, dim: int) -> None:
    if omega.dim != dim:
        raise DimensionMismatch(f"form of dim {omega.dim} on algebra of dim {dim}")
    if not form_is_skew(omega):
        raise NotSkew("form is not skew-symmetric")
    if not form_is_nondegenerate(omega):
        raise DegenerateForm("form is degenerate")


def _basis(dim: int) -> list[Vector]:
    return [Vector.basis(dim, i) for i in range(dim)]


def _solve_implicit(
    omega: BilinearForm, functional: Callable[[Vector, Vector, Vector], Fraction]
) -> MultTable:
    """Table whose e_i·e_j = w is fixed by ω(w, e_k) = functional(e_i, e_j, e_k) for all k."""
    basis = _basis(omega.dim)
    gram_t = omega.gram.transpose()

    def product(i: int, j: int) -> Vector:
        rhs = Vector.of(functional(basis[i], basis[j], z) for z in basis)
        return solve_linear(gram_t, rhs)

    return MultTable.from_function(omega.dim, product)


def omega_sharp(omega: BilinearForm) -> Matrix:
    """Matrix of ω♮: A → A*, ω(u, v) = ⟨ω♮(u), v⟩."""
    return omega.gram.transpose()


def omega_sharp_dual(omega: BilinearForm) -> Matrix:
    """Matrix of (ω♮)*: A → A*, ⟨(ω♮)*(z), y⟩ = ω(y, z)."""
    return omega.gram


def levi_civita(circ: MultTable, omega: BilinearForm) -> tuple[MultTable, MultTable]:
    """The pair (◇, ◆) defined implicitly by ω; their sum is ∘."""
    _require_form(omega, circ.dim)

    def m(a: Vector, b: Vector) -> Vector:
        return multiply(circ, a, b)

    def lozenge(x: Vector, y: Vector, z: Vector) -> Fraction:
        return (omega(m(x, y), z) + omega(m(y, z), x) + omega(m(z, y), x) + omega(m(x, z), y)) / 2

    def black(x: Vector, y: Vector, z: Vector) -> Fraction:
        return (omega(m(x, y), z) - omega(m(y, z), x) - omega(m(z, y), x) - omega(m(x, z), y)) / 2

    return _solve_implicit(omega, lozenge), _solve_implicit(omega, black)


def levi_civita_from_cocycle(
    circ: MultTable, omega: BilinearForm, force: bool = False, debug: bool = False
) -> SplitPair:
    """(≻, ≺) with ω(x≻y, z) = ω(y, x∘z) and ω(x≺y, z) = −ω(x, y∘z + z∘y)."""
    _require_form(omega, circ.dim)
    if not force:
        bundle = AlgebraBundle(circ.dim, {"circ": circ}, {"omega": omega})
        _require(check_system(registry("two-cocycle"), bundle), NotCocycle, "two-cocycle", debug)

    def m(a: Vector, b: Vector) -> Vector:
        return multiply(circ, a, b)

    succ = _solve_implicit(omega, lambda x, y, z: omega(y, m(x, z)))
    prec = _solve_implicit(omega, lambda x, y, z: -omega(x, m(y, z) + m(z, y)))
    return SplitPair(succ, prec, Flavor.ANTI_PRE_LEIBNIZ)


# -- anti-O-operators -----------------------------------------------------------


def _check_operator_dims(T: Matrix, circ: MultTable, rep: RepBundle) -> None:
    if rep.algebra_dim != circ.dim or T.shape != (circ.dim, rep.module_dim):
        raise DimensionMismatch(
            f"operator {T.shape} between module dim {rep.module_dim} and algebra dim {circ.dim}"
        )


def check_anti_O(T: Matrix, circ: MultTable, rep: RepBundle) -> bool:
    """(Tu)∘(Tv) = −T(l(Tu)v + r(Tv)u) for all basis u, v of V."""
    _check_operator_dims(T, circ, rep)
    basis = _basis(rep.module_dim)
    images = [T.column(u) for u in range(rep.module_dim)]
    for u, tu in enumerate(images):
        for v, tv in enumerate(images):
            inner = rep.action("l", tu).apply(basis[v]) + rep.action("r", tv).apply(basis[u])
            if multiply(circ, tu, tv) != -T.apply(inner):
                return False
    return True


def check_strong_anti_O(T: Matrix, circ: MultTable, rep: RepBundle) -> bool:
    """l((Tu)∘(Tv))w + r((Tu)∘(Tw))v − r((Tv)∘(Tw))u = 0 for all basis u, v, w."""
    _check_operator_dims(T, circ, rep)
    basis = _basis(rep.module_dim)
    images = [T.column(u) for u in range(rep.module_dim)]
    for u, tu in enumerate(images):
        for v, tv in enumerate(images):
            for w, tw in enumerate(images):
                total = (
                    rep.action("l", multiply(circ, tu, tv)).apply(basis[w])
                    + rep.action("r", multiply(circ, tu, tw)).apply(basis[v])
                    - rep.action("r", multiply(circ, tv, tw)).apply(basis[u])
                )
                if not total.is_zero():
                    return False
    return True


def induced_split(
    T: Matrix, circ: MultTable, rep: RepBundle, force: bool = False, debug: bool = False
) -> SplitPair:
    """u≻v = −l(Tu)v and u≺v = −r(Tv)u on V."""
    _check_operator_dims(T, circ, rep)
    if not force and not check_anti_O(T, circ, rep):
        raise NotAntiO("operator is not an anti-O-operator")
    m = rep.module_dim
    basis = _basis(m)
    images = [T.column(u) for u in range(m)]
    succ = MultTable.from_function(m, lambda u, v: -rep.action("l", images[u]).apply(basis[v]))
    prec = MultTable.from_function(m, lambda u, v: -rep.action("r", images[v]).apply(basis[u]))
    if debug:
        logger.info("induced split on module of dim %d", m)
    return SplitPair(succ, prec, Flavor.ANTI_PRE_LEIBNIZ)


def compatible_split_from_invertible_anti_O(
    T: Matrix, circ: MultTable, rep: RepBundle, force: bool = False, debug: bool = False
) -> SplitPair:
    """x≻y = −T(l(x)T⁻¹y) and x≺y = −T(r(y)T⁻¹x) on A."""
    _check_operator_dims(T, circ, rep)
    T_inv = invert(T)
    if not force and not check_anti_O(T, circ, rep):
        raise NotAntiO("operator is not an anti-O-operator")
    n = circ.dim
    basis = _basis(n)
    pre_images = [T_inv.apply(e) for e in basis]
    succ = MultTable.from_function(
        n, lambda i, j: -T.apply(rep.action("l", basis[i]).apply(pre_images[j]))
    )
    prec = MultTable.from_function(
        n, lambda i, j: -T.apply(rep.action("r", basis[j]).apply(pre_images[i]))
    )
    if debug:
        logger.info("compatible split of dim %d from invertible anti-O-operator", n)
    return SplitPair(succ, prec, Flavor.ANTI_PRE_LEIBNIZ)


# -- perm algebras ---------------------------------------------------------------


def perm_to_leibniz(
    star: MultTable,
    P: LinearEndo,
    mode: OperatorMode | str,
    force: bool = False,
    debug: bool = False,
) -> MultTable:
    """x∘y = P(x)⋆y − x⋆P(y)."""
    mode = OperatorMode(mode)
    if not force:
        bundle = AlgebraBundle(star.dim, {"star": star}, maps={"P": P})
        _require(check_system(registry("perm"), bundle), NotPerm, "perm", debug)
        _require(check_system(registry(mode.value), bundle), OperatorAxiomFails, mode.value, debug)
    basis = _basis(star.dim)
    images = [P(e) for e in basis]
    return MultTable.from_function(
        star.dim,
        lambda i, j: multiply(star, images[i], basis[j]) - multiply(star, basis[i], images[j]),
    )


# -- transforms --------------------------------------------------------------------


def minus2_transform(pair: SplitPair) -> SplitPair:
    """x≻y = x⊢y + 2y⊣x, x≺y = −y⊣x − 2x⊢y."""
    vdash, dashv = pair.first, pair.second
    flipped = table_flip(dashv)
    return SplitPair(
        table_combination((1, vdash), (2, flipped)),
        table_combination((-1, flipped), (-2, vdash)),
        Flavor.ANTI_PRE_LEIBNIZ,
    )


def plus2_transform(pair: SplitPair) -> SplitPair:
    """x⊢y = x≻y + 2x≺y, x⊣y = −y≺x − 2y≻x."""
    succ, prec = pair.first, pair.second
    return SplitPair(
        table_combination((1, succ), (2, prec)),
        table_combination((-1, table_flip(prec)), (-2, table_flip(succ))),
        Flavor.NOVIKOV_DIALGEBRA,
    )


def transformed_from_pre(pair: SplitPair) -> SplitPair:
    """⊢ = ▷ and x⊣y = −y◁x."""
    return SplitPair(pair.first, table_combination((-1, table_flip(pair.second))), Flavor.TRANSFORMED)


def pre_from_transformed(pair: SplitPair) -> SplitPair:
    """▷ = ⊢ and x◁y = −y⊣x."""
    return SplitPair(pair.first, table_combination((-1, table_flip(pair.second))), Flavor.PRE_LEIBNIZ)


# -- double structures ------------------------------------------------------------


def double_structures_apl(
    split: SplitPair, force: bool = False, debug: bool = False
) -> tuple[MultTable, MultTable]:
    """Leibniz products on A ⊕ A* through (−L*≻, L*≻ + R*≺) and the coadjoint rep."""
    if not force:
        _require(
            check_system(registry("anti-pre-leibniz"), split.as_bundle()),
            NotAntiPreLeibniz,
            "anti-pre-leibniz",
            debug,
        )
    circ = split.sub_adjacent()
    circ1d = semidirect_leibniz(circ, dual_leibniz_rep(split_negative_rep(split)))
    circ2d = semidirect_leibniz(circ, coadjoint_rep(circ))
    return circ1d, circ2d


def double_structures_pre(
    pair: SplitPair, force: bool = False, debug: bool = False
) -> tuple[MultTable, MultTable]:
    """Leibniz products on A ⊕ A* through (L*▷, −L*▷ − R*◁) and the coadjoint rep of •."""
    if not force:
        _require(
            check_system(registry("pre-leibniz"), pair.as_bundle()),
            NotPreLeibniz,
            "pre-leibniz",
            debug,
        )
    bullet = pair.sub_adjacent()
    rhd_lhd = RepBundle(
        pair.dim,
        pair.dim,
        {"l": adjoint_rep(pair.first).family("l"), "r": adjoint_rep(pair.second).family("r")},
    )
    bullet1d = semidirect_leibniz(bullet, dual_leibniz_rep(rhd_lhd))
    bullet2d = semidirect_leibniz(bullet, coadjoint_rep(bullet))
    return bullet1d, bullet2d


def omega_p(n: int) -> BilinearForm:
    """ω_p(x + a*, y + b*) = ⟨x, b*⟩ − ⟨a*, y⟩ on A ⊕ A*."""
    if n < 1:
        raise DimensionMismatch(f"omega_p needs n >= 1, got {n}")
    identity = Matrix.identity(n)
    zero = Matrix.zeros(n, n)
    return BilinearForm(2 * n, Matrix.block([[zero, identity], [-identity, zero]]))


def split_from_omega_p(
    circ: MultTable, rep: RepBundle, force: bool = False, debug: bool = False
) -> SplitPair:
    """Recover (≻, ≺) from a rep (l, r) on A* making ω_p a 2-cocycle on A ⋉ A*.

    L≻(x) = l(x)ᵀ and R≺(x) = −(l(x) + r(x))ᵀ.
    """
    if rep.module_dim != circ.dim:
        raise DimensionMismatch(f"module of dim {rep.module_dim} is not the dual of dim {circ.dim}")
    if not force:
        table = semidirect_leibniz(circ, rep)
        bundle = AlgebraBundle(table.dim, {"circ": table}, {"omega": omega_p(circ.dim)})
        _require(check_system(registry("two-cocycle"), bundle), NotCocycle, "two-cocycle", debug)
    n = circ.dim
    left_succ = [m.transpose() for m in rep.family("l")]
    right_prec = [-(a + b).transpose() for a, b in zip(rep.family("l"), rep.family("r"))]
    succ = MultTable.from_function(n, lambda i, j: left_succ[i].column(j))
    prec = MultTable.from_function(n, lambda i, j: right_prec[j].column(i))
    return SplitPair(succ, prec, Flavor.ANTI_PRE_LEIBNIZ)


# -- Gel'fand-Dorfman --------------------------------------------------------------


def gd_from_novikov_di(pair: SplitPair, force: bool = False, debug: bool = False) -> AlgebraBundle:
    """x∘y = x⊢y − y⊣x together with ⊢ and ⊣."""
    if not force:
        nd_bundle = AlgebraBundle(pair.dim, {"vdash": pair.first, "dashv": pair.second})
        _require(
            check_system(registry("novikov-dialgebra"), nd_bundle),
            NotNovikovDialgebra,
            "novikov-dialgebra",
            debug,
        )
    nd = SplitPair(pair.first, pair.second, Flavor.NOVIKOV_DIALGEBRA)
    return AlgebraBundle(
        pair.dim, {"circ": nd.sub_adjacent(), "vdash": pair.first, "dashv": pair.second}
    )


def gd_from_averaging(
    gd: AlgebraBundle, P: LinearEndo, force: bool = False, debug: bool = False
) -> AlgebraBundle:
    """x∘y = [P(x), y], x⊢y = P(x)∗y, x⊣y = x∗P(y)."""
    bracket, ast = gd.product("bracket"), gd.product("ast")
    if not force:
        bundle = AlgebraBundle(gd.dim, {"bracket": bracket, "ast": ast}, maps={"P": P})
        _require(check_system(registry("gd-algebra"), bundle), NotGDAlgebra, "gd-algebra", debug)
        _require(check_system(registry("averaging"), bundle), OperatorAxiomFails, "averaging", debug)
    basis = _basis(gd.dim)
    images = [P(e) for e in basis]
    return AlgebraBundle(
        gd.dim,
        {
            "circ": MultTable.from_function(gd.dim, lambda i, j: multiply(bracket, images[i], basis[j])),
            "vdash": MultTable.from_function(gd.dim, lambda i, j: multiply(ast, images[i], basis[j])),
            "dashv": MultTable.from_function(gd.dim, lambda i, j: multiply(ast, basis[i], images[j])),
        },
    )


def derivation_product(
    gd: AlgebraBundle, P: LinearEndo, force: bool = False, debug: bool = False
) -> MultTable:
    """x·y = x∘y + P(x)⊢y − P(y)⊣x."""
    circ, vdash, dashv = gd.product("circ"), gd.product("vdash"), gd.product("dashv")
    if not force:
        core = AlgebraBundle(gd.dim, {"circ": circ, "vdash": vdash, "dashv": dashv}, maps={"P": P})
        _require(check_system(registry("gd-dialgebra"), core), NotGDDialgebra, "gd-dialgebra", debug)
        _require(check_system(registry("derivation"), core), OperatorAxiomFails, "derivation", debug)
    basis = _basis(gd.dim)
    images = [P(e) for e in basis]
    return table_sum(
        circ,
        MultTable.from_function(
            gd.dim,
            lambda i, j: multiply(vdash, images[i], basis[j]) - multiply(dashv, images[j], basis[i]),
        ),
    )
