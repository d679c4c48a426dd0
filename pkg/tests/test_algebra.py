"""Tests for structure-constant tables, bundles and base change."""

from fractions import Fraction

import pytest
from leibsplit.algebra import (
    AlgebraBundle,
    BilinearForm,
    Flavor,
    LinearEndo,
    MultTable,
    RepBundle,
    Side,
    SplitPair,
    dualize_endo,
    form_is_nondegenerate,
    form_is_skew,
    form_is_symmetric,
    mult_operator,
    multiply,
    table_flip,
    table_sum,
    transport,
)
from leibsplit.errors import DimensionMismatch, IndexOutOfRange, UnknownName
from leibsplit.linalg import Matrix, Vector


def create_test_table(**kwargs) -> MultTable:
    # e1·e1 = e2 on a 2-dim space unless overridden
    defaults = {"dim": 2, "entries": [(0, 0, 1, 1)]}
    defaults.update(kwargs)
    return MultTable.from_entries(defaults["dim"], defaults["entries"])


def test_from_entries_accumulates():
    t = MultTable.from_entries(2, [(0, 1, 0, 1), (0, 1, 0, Fraction(1, 2))])
    assert t.basis_product(0, 1) == Vector.of([Fraction(3, 2), 0])


def test_from_entries_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        MultTable.from_entries(2, [(0, 2, 0, 1)])


def test_multiply_is_bilinear():
    t = create_test_table(entries=[(0, 0, 1, 1), (0, 1, 0, 2), (1, 1, 1, -1)])
    u = Vector.of([1, 2])
    v = Vector.of([3, -1])
    expected = (
        multiply(t, Vector.basis(2, 0), Vector.basis(2, 0)).scale(3)
        + multiply(t, Vector.basis(2, 0), Vector.basis(2, 1)).scale(-1)
        + multiply(t, Vector.basis(2, 1), Vector.basis(2, 0)).scale(6)
        + multiply(t, Vector.basis(2, 1), Vector.basis(2, 1)).scale(-2)
    )
    assert multiply(t, u, v) == expected
    assert multiply(t, u, v) == Vector.of([-2, 5])


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        multiply(create_test_table(), Vector.of([1]), Vector.of([1, 0]))


def test_entries_are_sparse_and_ordered():
    t = create_test_table(entries=[(1, 0, 0, 3), (0, 0, 1, 1)])
    assert t.entries() == [(0, 0, 1, Fraction(1)), (1, 0, 0, Fraction(3))]
    assert MultTable.zero(3).is_zero()


def test_flip_and_sum():
    t = create_test_table(entries=[(0, 1, 0, 1)])
    flipped = table_flip(t)
    assert flipped.basis_product(1, 0) == Vector.of([1, 0])
    assert flipped.basis_product(0, 1) == Vector.zero(2)
    assert table_sum(t, flipped).basis_product(0, 1) == Vector.of([1, 0])


def test_mult_operator_columns():
    t = create_test_table(entries=[(0, 1, 0, 1)])
    left = mult_operator(t, Side.LEFT, 0)
    right = mult_operator(t, "right", 1)
    assert left.column(1) == Vector.of([1, 0])
    assert right.column(0) == Vector.of([1, 0])
    with pytest.raises(IndexOutOfRange):
        mult_operator(t, Side.LEFT, 2)


def test_dualize_endo_is_negative_transpose():
    m = Matrix.of([[1, 2], [3, 4]])
    assert dualize_endo(m) == Matrix.of([[-1, -3], [-2, -4]])


def test_form_predicates():
    skew = BilinearForm.of([[0, 1], [-1, 0]])
    assert form_is_skew(skew)
    assert not form_is_symmetric(skew)
    assert form_is_nondegenerate(skew)
    assert not form_is_nondegenerate(BilinearForm.of([[0, 0], [0, 0]]))
    assert skew(Vector.basis(2, 0), Vector.basis(2, 1)) == 1


def test_bundle_dimension_checked():
    with pytest.raises(DimensionMismatch):
        AlgebraBundle(2, products={"circ": MultTable.zero(3)})


def test_bundle_unknown_member():
    bundle = AlgebraBundle(2, products={"circ": create_test_table()})
    with pytest.raises(UnknownName):
        bundle.product("succ")
    with pytest.raises(UnknownName):
        bundle.form("omega")
    with pytest.raises(UnknownName):
        bundle.map("P")


def test_with_members_overrides():
    bundle = AlgebraBundle(2, products={"circ": create_test_table()})
    extended = bundle.with_members(products={"circ": MultTable.zero(2)}, maps={"P": LinearEndo.of([[1, 0], [0, 1]])})
    assert extended.product("circ").is_zero()
    assert "P" in extended.maps
    assert not bundle.product("circ").is_zero()


def test_rep_bundle_action():
    rep = RepBundle(2, 1, {"l": (Matrix.of([[1]]), Matrix.of([[2]]))})
    assert rep.action("l", Vector.of([3, 1])) == Matrix.of([[5]])
    with pytest.raises(UnknownName):
        rep.family("r")
    with pytest.raises(DimensionMismatch):
        RepBundle(2, 1, {"l": (Matrix.of([[1]]),)})


def test_transport_is_isomorphism():
    circ = create_test_table(entries=[(0, 0, 1, 1), (0, 1, 1, 1)])
    bundle = AlgebraBundle(
        2,
        products={"circ": circ},
        forms={"omega": BilinearForm.of([[0, 1], [-1, 0]])},
        maps={"P": LinearEndo.of([[0, 0], [1, 1]])},
    )
    phi = Matrix.of([[1, 2], [0, 1]])
    moved = transport(bundle, phi)
    for x in (Vector.of([1, 0]), Vector.of([2, -1])):
        for y in (Vector.of([0, 1]), Vector.of([1, 3])):
            assert multiply(moved.product("circ"), phi.apply(x), phi.apply(y)) == phi.apply(multiply(circ, x, y))
            assert moved.form("omega")(phi.apply(x), phi.apply(y)) == bundle.form("omega")(x, y)
        assert moved.map("P")(phi.apply(x)) == phi.apply(bundle.map("P")(x))


def test_split_pair_sub_adjacent():
    succ = create_test_table(entries=[(0, 0, 1, 1)])
    prec = create_test_table(entries=[(0, 0, 1, 2)])
    apl = SplitPair(succ, prec, Flavor.ANTI_PRE_LEIBNIZ)
    assert apl.sub_adjacent().basis_product(0, 0) == Vector.of([0, 3])
    assert apl.slot_names == ("succ", "prec")
    nd = SplitPair(succ, prec, Flavor.NOVIKOV_DIALGEBRA)
    # x⊢y − y⊣x
    assert nd.sub_adjacent().basis_product(0, 0) == Vector.of([0, -1])
    assert set(nd.as_bundle().products) == {"vdash", "dashv"}


def test_split_pair_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        SplitPair(MultTable.zero(1), MultTable.zero(2))
