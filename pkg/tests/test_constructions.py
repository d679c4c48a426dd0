"""Tests for the splitting, transform and double-structure constructions."""

from fractions import Fraction

import pytest
from leibsplit.algebra import AlgebraBundle, BilinearForm, Flavor, LinearEndo, MultTable, SplitPair
from leibsplit.catalog import fixture
from leibsplit.constructions import (
    OperatorMode,
    check_anti_O,
    compatible_split_from_invertible_anti_O,
    derivation_product,
    double_structures_apl,
    double_structures_pre,
    gd_from_averaging,
    gd_from_novikov_di,
    induced_split,
    levi_civita,
    levi_civita_from_cocycle,
    minus2_transform,
    omega_p,
    omega_sharp,
    omega_sharp_dual,
    perm_to_leibniz,
    plus2_transform,
    pre_from_transformed,
    split_from_omega_p,
    transformed_from_pre,
)
from leibsplit.errors import (
    DegenerateForm,
    DimensionMismatch,
    NotAntiO,
    NotAntiPreLeibniz,
    NotCocycle,
    NotGDDialgebra,
    NotNovikovDialgebra,
    NotPerm,
    NotSkew,
    OperatorAxiomFails,
    PreconditionFailed,
)
from leibsplit.identities import check_system
from leibsplit.linalg import Matrix, Vector, invert
from leibsplit.registry import registry
from leibsplit.representations import (
    adjoint_rep,
    check_rep_equivalence,
    coadjoint_rep,
    dual_leibniz_rep,
    split_negative_rep,
)
from leibsplit.sampling import Sampler
from leibsplit.types import Settings


def e(dim: int, i: int) -> Vector:
    return Vector.basis(dim, i)


def scalar_table(c) -> MultTable:
    return MultTable.from_entries(1, [(0, 0, 0, c)])


def apl1() -> SplitPair:
    return SplitPair.from_bundle(fixture("apl1").bundle, Flavor.ANTI_PRE_LEIBNIZ)


def nov1() -> SplitPair:
    return SplitPair.from_bundle(fixture("nov1").bundle, Flavor.NOVIKOV_DIALGEBRA)


def holds(system: str, bundle: AlgebraBundle, **kwargs) -> bool:
    return check_system(registry(system), bundle, **kwargs).holds


# -- Levi-Civita products ---------------------------------------------------------


def test_levi_civita_from_cocycle_on_leib2():
    bundle = fixture("omega2-on-leib2").bundle
    split = levi_civita_from_cocycle(bundle.product("circ"), bundle.form("omega"))
    assert split.first.basis_product(0, 0) == Vector.of([0, -1])
    assert split.second.basis_product(0, 0) == Vector.of([0, 2])
    assert split.sub_adjacent() == bundle.product("circ")
    assert holds("anti-pre-leibniz", split.as_bundle())
    assert holds("apl-invariance", split.as_bundle().with_members(forms={"omega": bundle.form("omega")}))


def test_levi_civita_pair_swaps_roles():
    bundle = fixture("omega2-on-leib2").bundle
    lozenge, black = levi_civita(bundle.product("circ"), bundle.form("omega"))
    assert lozenge.basis_product(0, 0) == Vector.of([0, 2])
    assert black.basis_product(0, 0) == Vector.of([0, -1])
    split = levi_civita_from_cocycle(bundle.product("circ"), bundle.form("omega"))
    assert (lozenge, black) == (split.second, split.first)


def test_levi_civita_from_cocycle_rejects_non_cocycle():
    circ = fixture("lie2").bundle.product("circ")
    omega = BilinearForm.of([[0, 1], [-1, 0]])
    with pytest.raises(NotCocycle) as info:
        levi_civita_from_cocycle(circ, omega)
    assert info.value.report is not None
    assert not info.value.report.holds
    assert isinstance(info.value, PreconditionFailed)
    # forced runs still produce a pair
    assert levi_civita_from_cocycle(circ, omega, force=True).dim == 2


def test_form_must_be_skew_and_nondegenerate():
    circ = fixture("leib2").bundle.product("circ")
    with pytest.raises(NotSkew):
        levi_civita(circ, BilinearForm.of([[1, 0], [0, 1]]))
    with pytest.raises(DegenerateForm):
        levi_civita(circ, BilinearForm.of([[0, 0], [0, 0]]))
    with pytest.raises(DimensionMismatch):
        levi_civita(circ, omega_p(2))


# -- anti-O-operators --------------------------------------------------------------


def test_inverse_sharp_is_anti_O_and_recovers_levi_civita():
    bundle = fixture("omega2-on-leib2").bundle
    circ, omega = bundle.product("circ"), bundle.form("omega")
    T = invert(omega_sharp(omega))
    rep = coadjoint_rep(circ)
    assert check_anti_O(T, circ, rep)
    assert compatible_split_from_invertible_anti_O(T, circ, rep) == levi_civita_from_cocycle(circ, omega)


def test_split_reps_equivalent_to_coadjoint_and_adjoint():
    bundle = fixture("omega2-on-leib2").bundle
    circ, omega = bundle.product("circ"), bundle.form("omega")
    split = levi_civita_from_cocycle(circ, omega)
    assert check_rep_equivalence(split_negative_rep(split), coadjoint_rep(circ), omega_sharp(omega))
    assert check_rep_equivalence(
        adjoint_rep(circ), dual_leibniz_rep(split_negative_rep(split)), omega_sharp_dual(omega)
    )


def test_induced_split_of_identity_on_adjoint():
    # circ = 0 on a line: every T is anti-O for the zero rep
    circ = MultTable.zero(1)
    rep = adjoint_rep(circ)
    split = induced_split(Matrix.identity(1), circ, rep)
    assert split.first.is_zero()
    assert split.second.is_zero()


def test_non_anti_O_rejected():
    circ = fixture("leib2").bundle.product("circ")
    rep = adjoint_rep(circ)
    T = Matrix.identity(2)
    # Id is an anti-O-operator for the adjoint rep only when x∘y = −2 x∘y
    assert not check_anti_O(T, circ, rep)
    with pytest.raises(NotAntiO):
        induced_split(T, circ, rep)
    with pytest.raises(NotAntiO):
        compatible_split_from_invertible_anti_O(T, circ, rep)
    assert induced_split(T, circ, rep, force=True).dim == 2


def test_operator_shape_checked():
    circ = fixture("leib2").bundle.product("circ")
    with pytest.raises(DimensionMismatch):
        check_anti_O(Matrix.identity(3), circ, adjoint_rep(circ))


# -- perm algebras ---------------------------------------------------------------


def test_perm_to_leibniz_with_derivation():
    perm4 = fixture("perm4").bundle
    circ = perm_to_leibniz(perm4.product("star"), perm4.map("P"), OperatorMode.DERIVATION)
    # 1∘x = −x² and x∘1 = x²
    assert circ.basis_product(0, 1) == Vector.of([0, 0, -1, 0])
    assert circ.basis_product(1, 0) == Vector.of([0, 0, 1, 0])
    assert holds("leibniz", AlgebraBundle(4, {"circ": circ}))


def test_perm_to_leibniz_with_averaging_operator():
    perm4 = fixture("perm4").bundle
    circ = perm_to_leibniz(perm4.product("star"), perm4.map("Q"), "averaging")
    # multiplication by x on a commutative algebra gives the zero bracket
    assert circ.is_zero()


def test_perm_to_leibniz_on_quadratic_perm():
    qperm2 = fixture("qperm2").bundle
    circ = perm_to_leibniz(qperm2.product("star"), qperm2.map("P"), OperatorMode.DERIVATION)
    assert circ.basis_product(0, 0) == Vector.of([0, -1])
    assert circ.basis_product(0, 1) == Vector.of([0, -1])
    assert circ.basis_product(1, 0) == Vector.zero(2)
    bundle = AlgebraBundle(2, {"circ": circ}, {"omega": qperm2.form("omega")})
    assert holds("two-cocycle", bundle)


def test_perm_to_leibniz_preconditions():
    perm4 = fixture("perm4").bundle
    with pytest.raises(OperatorAxiomFails):
        perm_to_leibniz(perm4.product("star"), perm4.map("Q"), OperatorMode.DERIVATION)
    lie = fixture("lie2").bundle.product("circ")
    with pytest.raises(NotPerm):
        perm_to_leibniz(lie, LinearEndo.of([[0, 0], [0, 0]]), OperatorMode.DERIVATION)
    forced = perm_to_leibniz(perm4.product("star"), perm4.map("Q"), OperatorMode.DERIVATION, force=True)
    assert forced.is_zero()


# -- transforms ----------------------------------------------------------------


def test_minus2_of_nov1():
    split = minus2_transform(nov1())
    assert split.flavor is Flavor.ANTI_PRE_LEIBNIZ
    assert split.first == scalar_table(3)
    assert split.second == scalar_table(-3)
    assert holds("admissible-novikov-dialgebra", split.as_bundle())


def test_plus2_of_apl1():
    pair = plus2_transform(apl1())
    assert pair.flavor is Flavor.NOVIKOV_DIALGEBRA
    assert pair.first == scalar_table(-1)
    assert pair.second == scalar_table(-1)
    assert holds("novikov-dialgebra", pair.as_bundle())


def test_plus2_after_minus2_scales_by_minus_three():
    pair = plus2_transform(minus2_transform(nov1()))
    assert pair == nov1().scaled(-3)


def test_transforms_compose_to_minus_three_on_apl1():
    back = plus2_transform(minus2_transform(apl1()))
    assert (back.first, back.second) == (scalar_table(-3), scalar_table(3))
    there = minus2_transform(plus2_transform(apl1()))
    assert there == apl1().scaled(-3)


def test_transforms_compose_to_minus_three_on_random_tables():
    sampler = Sampler(Settings(seed=7))
    for n in range(200):
        pair = sampler.split_pair(1 + n % 3)
        expected = pair.scaled(-3)
        back = plus2_transform(minus2_transform(pair))
        assert (back.first, back.second) == (expected.first, expected.second)
        there = minus2_transform(plus2_transform(pair))
        assert (there.first, there.second) == (expected.first, expected.second)


def test_pre_and_transformed_are_inverse():
    pair = nov1()
    pre = pre_from_transformed(pair)
    assert pre.flavor is Flavor.PRE_LEIBNIZ
    assert pre.second == scalar_table(-1)
    assert holds("pre-leibniz", pre.as_bundle())
    back = transformed_from_pre(pre)
    assert (back.first, back.second) == (pair.first, pair.second)


# -- double structures ------------------------------------------------------------


def test_double_structures_apl():
    circ1d, circ2d = double_structures_apl(apl1())
    assert circ1d.dim == circ2d.dim == 2
    assert holds("leibniz", AlgebraBundle(2, {"circ": circ1d}))
    assert holds("leibniz", AlgebraBundle(2, {"circ": circ2d}))
    assert holds("compatible-leibniz", AlgebraBundle(2, {"circ1": circ1d, "circ2": circ2d}))


def test_double_structures_apl_precondition():
    split = SplitPair(scalar_table(1), MultTable.zero(1))
    with pytest.raises(NotAntiPreLeibniz):
        double_structures_apl(split)


def test_double_structures_pre():
    bullet1d, bullet2d = double_structures_pre(pre_from_transformed(nov1()))
    assert holds("leibniz", AlgebraBundle(2, {"circ": bullet1d}))
    assert holds("leibniz", AlgebraBundle(2, {"circ": bullet2d}))


# -- symplectic form on A ⊕ A* ---------------------------------------------------------


def test_omega_p_gram():
    assert omega_p(1).gram == Matrix.of([[0, 1], [-1, 0]])
    omega = omega_p(2)
    assert omega(e(4, 0), e(4, 2)) == 1
    assert omega(e(4, 2), e(4, 0)) == -1
    assert omega(e(4, 0), e(4, 1)) == 0
    with pytest.raises(DimensionMismatch):
        omega_p(0)


def test_split_from_omega_p_round_trip():
    split = apl1()
    rep = dual_leibniz_rep(split_negative_rep(split))
    assert split_from_omega_p(split.sub_adjacent(), rep) == split


def test_split_from_omega_p_checks_cocycle():
    circ = scalar_table(1)
    with pytest.raises(NotCocycle):
        split_from_omega_p(circ, adjoint_rep(circ))


# -- Gel'fand-Dorfman ------------------------------------------------------------------


def test_gd_from_novikov_di():
    gd = gd_from_novikov_di(nov1())
    assert gd.product("circ").is_zero()
    assert holds("gd-dialgebra", gd)


def test_gd_from_novikov_di_precondition():
    with pytest.raises(NotNovikovDialgebra):
        gd_from_novikov_di(SplitPair(scalar_table(1), MultTable.zero(1), Flavor.NOVIKOV_DIALGEBRA))


def test_gd_from_averaging():
    gd = AlgebraBundle(1, {"bracket": MultTable.zero(1), "ast": scalar_table(1)})
    P = LinearEndo.of([[Fraction(1, 2)]])
    result = gd_from_averaging(gd, P)
    assert result.product("vdash") == scalar_table(Fraction(1, 2))
    assert result.product("dashv") == scalar_table(Fraction(1, 2))
    assert result.product("circ").is_zero()
    assert holds("gd-dialgebra", result)


def test_gd_from_averaging_rejects_non_gd():
    gd = AlgebraBundle(1, {"bracket": scalar_table(1), "ast": scalar_table(1)})
    with pytest.raises(PreconditionFailed):
        gd_from_averaging(gd, LinearEndo.of([[1]]))


def test_derivation_product_on_gd_der2():
    gd = fixture("gd-der2").bundle
    product = derivation_product(gd, gd.map("P"))
    assert product.basis_product(0, 1) == Vector.of([0, -1])
    assert product.basis_product(1, 0) == Vector.of([0, 1])
    assert product.basis_product(0, 0) == Vector.zero(2)
    assert product.basis_product(1, 1) == Vector.zero(2)
    assert holds("leibniz", AlgebraBundle(2, {"circ": product}))


def test_derivation_product_preconditions():
    gd = fixture("gd-der2").bundle
    with pytest.raises(OperatorAxiomFails):
        derivation_product(gd, LinearEndo.of([[1, 0], [0, 0]]))
    broken = gd.with_members(products={"circ": fixture("leib2-mutated").bundle.product("circ")})
    with pytest.raises(NotGDDialgebra):
        derivation_product(broken, gd.map("P"))
