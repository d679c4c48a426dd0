"""Representations: adjoint and dual families, semidirect products, rep checks."""

from __future__ import annotations

import logging

from leibsplit.algebra import (
    APL_FAMILIES,
    AlgebraBundle,
    Flavor,
    MultTable,
    RepBundle,
    Side,
    SplitPair,
    dualize_endo,
    mult_operator,
)
from leibsplit.errors import DimensionMismatch, UnknownName
from leibsplit.identities import CheckReport, check_system
from leibsplit.linalg import Matrix, Vector, invert
from leibsplit.registry import registry

logger = logging.getLogger("leibsplit")


def _operators(t: MultTable, side: Side) -> tuple[Matrix, ...]:
    return tuple(mult_operator(t, side, i) for i in range(t.dim))


def adjoint_rep(t: MultTable) -> RepBundle:
    """(L, R) acting on the algebra itself."""
    return RepBundle(t.dim, t.dim, {"l": _operators(t, Side.LEFT), "r": _operators(t, Side.RIGHT)})


def dual_leibniz_rep(rep: RepBundle) -> RepBundle:
    """(l*, −l* − r*) on the dual module."""
    l_star = tuple(dualize_endo(m) for m in rep.family("l"))
    r_star = tuple(dualize_endo(m) for m in rep.family("r"))
    return RepBundle(
        rep.algebra_dim,
        rep.module_dim,
        {"l": l_star, "r": tuple(-a - b for a, b in zip(l_star, r_star))},
    )


def coadjoint_rep(t: MultTable) -> RepBundle:
    """(L*, −L* − R*)."""
    return dual_leibniz_rep(adjoint_rep(t))


def split_negative_rep(split: SplitPair) -> RepBundle:
    """(−L≻, −R≺), a representation of the sub-adjacent algebra exactly when the split is anti-pre-Leibniz."""
    return RepBundle(
        split.dim,
        split.dim,
        {
            "l": tuple(-m for m in _operators(split.first, Side.LEFT)),
            "r": tuple(-m for m in _operators(split.second, Side.RIGHT)),
        },
    )


def apl_adjoint_rep(split: SplitPair) -> RepBundle:
    """(L≻, R≻, L≺, R≺)."""
    return RepBundle(
        split.dim,
        split.dim,
        {
            "l_succ": _operators(split.first, Side.LEFT),
            "r_succ": _operators(split.first, Side.RIGHT),
            "l_prec": _operators(split.second, Side.LEFT),
            "r_prec": _operators(split.second, Side.RIGHT),
        },
    )


def dual_apl_rep(rep: RepBundle) -> RepBundle:
    """(−l*∘, −l*≺ − r*≻, l*≺, l*∘ + r*∘) with l∘ = l≻ + l≺ and r∘ = r≻ + r≺."""
    star = {name: tuple(dualize_endo(m) for m in rep.family(name)) for name in APL_FAMILIES}
    l_circ = tuple(a + b for a, b in zip(star["l_succ"], star["l_prec"]))
    r_circ = tuple(a + b for a, b in zip(star["r_succ"], star["r_prec"]))
    return RepBundle(
        rep.algebra_dim,
        rep.module_dim,
        {
            "l_succ": tuple(-m for m in l_circ),
            "r_succ": tuple(-a - b for a, b in zip(star["l_prec"], star["r_succ"])),
            "l_prec": star["l_prec"],
            "r_prec": tuple(a + b for a, b in zip(l_circ, r_circ)),
        },
    )


def _check_rep_dims(algebra_dim: int, rep: RepBundle) -> None:
    if rep.algebra_dim != algebra_dim:
        raise DimensionMismatch(
            f"representation of a dim-{rep.algebra_dim} algebra used with dim {algebra_dim}"
        )


def _block_table(
    n: int,
    m: int,
    algebra: MultTable,
    left: tuple[Matrix, ...],
    right: tuple[Matrix, ...],
) -> MultTable:
    """(x+u)·(y+v) = x·y + left(x)v + right(y)u on A ⊕ V."""
    zero_v = Vector.zero(m)
    zero_a = Vector.zero(n)

    def product(i: int, j: int) -> Vector:
        if i < n and j < n:
            return algebra.basis_product(i, j).concat(zero_v)
        if i < n:
            return zero_a.concat(left[i].column(j - n))
        if j < n:
            return zero_a.concat(right[j].column(i - n))
        return Vector.zero(n + m)

    return MultTable.from_function(n + m, product)


def semidirect_leibniz(t: MultTable, rep: RepBundle) -> MultTable:
    """(x+u)∘(y+v) = x∘y + l(x)v + r(y)u."""
    _check_rep_dims(t.dim, rep)
    return _block_table(t.dim, rep.module_dim, t, rep.family("l"), rep.family("r"))


def semidirect_apl(split: SplitPair, rep: RepBundle) -> SplitPair:
    """Both products of the split extended over A ⊕ V by the four families."""
    _check_rep_dims(split.dim, rep)
    n, m = split.dim, rep.module_dim
    return SplitPair(
        _block_table(n, m, split.first, rep.family("l_succ"), rep.family("r_succ")),
        _block_table(n, m, split.second, rep.family("l_prec"), rep.family("r_prec")),
        Flavor.ANTI_PRE_LEIBNIZ,
    )


def check_leibniz_rep(t: MultTable, rep: RepBundle, debug: bool = False) -> CheckReport:
    """(l, r) is a representation iff the semidirect product is Leibniz."""
    table = semidirect_leibniz(t, rep)
    return check_system(registry("leibniz"), AlgebraBundle(table.dim, {"circ": table}), debug=debug)


def check_apl_rep(split: SplitPair, rep: RepBundle, debug: bool = False) -> CheckReport:
    """The quadruple is a representation iff the semidirect split is anti-pre-Leibniz."""
    extended = semidirect_apl(split, rep)
    return check_system(registry("anti-pre-leibniz"), extended.as_bundle(), debug=debug)


def check_rep_equivalence(rep1: RepBundle, rep2: RepBundle, phi: Matrix) -> bool:
    """True when φ·f(e_t) = f′(e_t)·φ for every family f and basis index t."""
    invert(phi)
    if rep1.algebra_dim != rep2.algebra_dim or phi.shape != (rep2.module_dim, rep1.module_dim):
        raise DimensionMismatch(
            f"cannot compare reps of module dims {rep1.module_dim}, {rep2.module_dim} via {phi.shape}"
        )
    if set(rep1.maps) != set(rep2.maps):
        raise UnknownName(f"families differ: {sorted(rep1.maps)} vs {sorted(rep2.maps)}")
    return all(
        phi @ a == b @ phi
        for name in rep1.maps
        for a, b in zip(rep1.family(name), rep2.family(name))
    )
