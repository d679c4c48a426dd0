"""Structure-constant data model: products, forms, endomorphisms, representations."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from leibsplit.errors import DimensionMismatch, IndexOutOfRange, UnknownName
from leibsplit.linalg import Matrix, Scalar, Vector, invert, rank


LEIBNIZ_FAMILIES = ("l", "r")
APL_FAMILIES = ("l_succ", "r_succ", "l_prec", "r_prec")


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class MultTable:
    """One bilinear product; ``constants[i][j][k]`` is the e_k coefficient of e_i·e_j."""

    dim: int
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...]
    _sparse: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if len(self.constants) != self.dim or any(
            len(row) != self.dim or any(len(cell) != self.dim for cell in row)
            for row in self.constants
        ):
            raise DimensionMismatch(f"structure constants are not {self.dim}^3")
        sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(cell) if c) for cell in row)
            for row in self.constants
        )
        object.__setattr__(self, "_sparse", sparse)

    @classmethod
    def zero(cls, dim: int) -> MultTable:
        zero = Fraction(0)
        return cls(dim, tuple(tuple((zero,) * dim for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[tuple[int, int, int, Scalar]]) -> MultTable:
        """Build from sparse ``(i, j, k, c)`` entries; repeated keys accumulate."""
        grid = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise IndexOutOfRange(f"constant index ({i}, {j}, {k}) outside dim {dim}")
            grid[i][j][k] += Fraction(c)
        return cls(dim, tuple(tuple(tuple(cell) for cell in row) for row in grid))

    @classmethod
    def from_function(cls, dim: int, product: Callable[[int, int], Vector]) -> MultTable:
        """Build from a function giving e_i·e_j as a vector."""
        return cls(
            dim,
            tuple(tuple(product(i, j).entries for j in range(dim)) for i in range(dim)),
        )

    def basis_product(self, i: int, j: int) -> Vector:
        return Vector(self.constants[i][j])

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        """Nonzero constants in lexicographic ``(i, j, k)`` order."""
        return [
            (i, j, k, c)
            for i, row in enumerate(self._sparse)
            for j, cell in enumerate(row)
            for k, c in cell
        ]

    def is_zero(self) -> bool:
        return not self.entries()


@dataclass(frozen=True)
class BilinearForm:
    """``gram[i][j] = ω(e_i, e_j)``."""

    dim: int
    gram: Matrix

    def __post_init__(self) -> None:
        if self.gram.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"gram matrix {self.gram.shape} for dim {self.dim}")

    @classmethod
    def of(cls, rows: list[list[Scalar]]) -> BilinearForm:
        return cls(len(rows), Matrix.of(rows))

    def __call__(self, u: Vector, v: Vector) -> Fraction:
        return u.dot(self.gram.apply(v))


@dataclass(frozen=True)
class LinearEndo:
    """Square matrix acting on coordinate columns."""

    dim: int
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"endomorphism matrix {self.matrix.shape} for dim {self.dim}")

    @classmethod
    def of(cls, rows: list[list[Scalar]]) -> LinearEndo:
        return cls(len(rows), Matrix.of(rows))

    def __call__(self, v: Vector) -> Vector:
        return self.matrix.apply(v)


@dataclass(frozen=True)
class RepBundle:
    """Named families of ``module_dim``-square matrices, one per basis element of A."""

    algebra_dim: int
    module_dim: int
    maps: Mapping[str, tuple[Matrix, ...]]

    def __post_init__(self) -> None:
        for name, family in self.maps.items():
            if len(family) != self.algebra_dim:
                raise DimensionMismatch(
                    f"family {name!r} has {len(family)} matrices, expected {self.algebra_dim}"
                )
            for m in family:
                if m.shape != (self.module_dim, self.module_dim):
                    raise DimensionMismatch(
                        f"family {name!r} holds a {m.shape} matrix, expected "
                        f"{self.module_dim}x{self.module_dim}"
                    )

    def family(self, name: str) -> tuple[Matrix, ...]:
        try:
            return self.maps[name]
        except KeyError:
            raise UnknownName(f"representation has no map {name!r}") from None

    def action(self, name: str, x: Vector) -> Matrix:
        """Matrix of f(x) = Σ x_t f(e_t)."""
        if len(x) != self.algebra_dim:
            raise DimensionMismatch(f"element of length {len(x)} acting through dim {self.algebra_dim}")
        result = Matrix.zeros(self.module_dim, self.module_dim)
        for t, coeff in enumerate(x):
            if coeff:
                result = result + self.family(name)[t].scale(coeff)
        return result


@dataclass(frozen=True)
class AlgebraBundle:
    """A vector space with named products, bilinear forms and linear maps."""

    dim: int
    products: Mapping[str, MultTable] = field(default_factory=dict)
    forms: Mapping[str, BilinearForm] = field(default_factory=dict)
    maps: Mapping[str, LinearEndo] = field(default_factory=dict)

    def __post_init__(self) -> None:
        members = [*self.products.items(), *self.forms.items(), *self.maps.items()]
        for name, member in members:
            if member.dim != self.dim:
                raise DimensionMismatch(f"{name!r} has dim {member.dim}, bundle has {self.dim}")

    def product(self, name: str) -> MultTable:
        try:
            return self.products[name]
        except KeyError:
            raise UnknownName(f"no product named {name!r}") from None

    def form(self, name: str) -> BilinearForm:
        try:
            return self.forms[name]
        except KeyError:
            raise UnknownName(f"no form named {name!r}") from None

    def map(self, name: str) -> LinearEndo:
        try:
            return self.maps[name]
        except KeyError:
            raise UnknownName(f"no map named {name!r}") from None

    def with_members(
        self,
        products: Mapping[str, MultTable] | None = None,
        forms: Mapping[str, BilinearForm] | None = None,
        maps: Mapping[str, LinearEndo] | None = None,
    ) -> AlgebraBundle:
        """Copy with extra (or overriding) named members."""
        return replace(
            self,
            products={**self.products, **(products or {})},
            forms={**self.forms, **(forms or {})},
            maps={**self.maps, **(maps or {})},
        )


def _check_dim(t: MultTable, *vectors: Vector) -> None:
    for v in vectors:
        if len(v) != t.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for table of dim {t.dim}")


def multiply(t: MultTable, u: Vector, v: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    _check_dim(t, u, v)
    out = [Fraction(0)] * t.dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = t._sparse[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            uv = ui * vj
            for k, c in row[j]:
                out[k] += uv * c
    return Vector(tuple(out))


def _require_same_dim(a: MultTable, b: MultTable) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"tables of dim {a.dim} and {b.dim}")


def table_sum(a: MultTable, b: MultTable) -> MultTable:
    _require_same_dim(a, b)
    return MultTable(
        a.dim,
        tuple(
            tuple(tuple(x + y for x, y in zip(ca, cb)) for ca, cb in zip(ra, rb))
            for ra, rb in zip(a.constants, b.constants)
        ),
    )


def table_flip(t: MultTable) -> MultTable:
    """Opposite product: ``result[i][j] = t[j][i]``."""
    return MultTable(
        t.dim,
        tuple(tuple(t.constants[j][i] for j in range(t.dim)) for i in range(t.dim)),
    )


def table_scale(t: MultTable, c: Scalar) -> MultTable:
    c = Fraction(c)
    return MultTable(
        t.dim,
        tuple(tuple(tuple(c * x for x in cell) for cell in row) for row in t.constants),
    )


def table_combination(*terms: tuple[Scalar, MultTable]) -> MultTable:
    """Linear combination Σ cᵢ·tᵢ of tables of one dimension."""
    result = MultTable.zero(terms[0][1].dim)
    for c, t in terms:
        result = table_sum(result, table_scale(t, c))
    return result


def mult_operator(t: MultTable, side: Side | str, basis_index: int) -> Matrix:
    """L(e_i) (column j = e_i·e_j) or R(e_i) (column j = e_j·e_i)."""
    if not 0 <= basis_index < t.dim:
        raise IndexOutOfRange(f"basis index {basis_index} outside dim {t.dim}")
    side = Side(side)
    if side is Side.LEFT:
        columns = [t.basis_product(basis_index, j) for j in range(t.dim)]
    else:
        columns = [t.basis_product(j, basis_index) for j in range(t.dim)]
    return Matrix.from_columns(columns, t.dim)


def dualize_endo(m: Matrix) -> Matrix:
    """Matrix of f* in the dual basis under ⟨f*(x)u*, v⟩ = −⟨u*, f(x)v⟩."""
    return -m.transpose()


def form_is_skew(omega: BilinearForm) -> bool:
    return omega.gram == -omega.gram.transpose()


def form_is_symmetric(omega: BilinearForm) -> bool:
    return omega.gram == omega.gram.transpose()


def form_is_nondegenerate(omega: BilinearForm) -> bool:
    return rank(omega.gram) == omega.dim


def transport_table(t: MultTable, phi: Matrix, phi_inv: Matrix) -> MultTable:
    columns = [phi_inv.column(i) for i in range(t.dim)]
    return MultTable.from_function(
        t.dim, lambda i, j: phi.apply(multiply(t, columns[i], columns[j]))
    )


def transport(bundle: AlgebraBundle, phi: Matrix) -> AlgebraBundle:
    """Isomorphic copy of ``bundle`` along the invertible change of basis ``phi``."""
    phi_inv = invert(phi)
    return AlgebraBundle(
        bundle.dim,
        products={n: transport_table(t, phi, phi_inv) for n, t in bundle.products.items()},
        forms={
            n: BilinearForm(f.dim, phi_inv.transpose() @ f.gram @ phi_inv)
            for n, f in bundle.forms.items()
        },
        maps={n: LinearEndo(p.dim, phi @ p.matrix @ phi_inv) for n, p in bundle.maps.items()},
    )


class Flavor(str, Enum):
    ANTI_PRE_LEIBNIZ = "anti-pre-leibniz"
    PRE_LEIBNIZ = "pre-leibniz"
    TRANSFORMED = "transformed"
    NOVIKOV_DIALGEBRA = "novikov-dialgebra"


_SLOTS = {
    Flavor.ANTI_PRE_LEIBNIZ: ("succ", "prec"),
    Flavor.PRE_LEIBNIZ: ("rhd", "lhd"),
    Flavor.TRANSFORMED: ("vdash", "dashv"),
    Flavor.NOVIKOV_DIALGEBRA: ("vdash", "dashv"),
}


@dataclass(frozen=True)
class SplitPair:
    """A pair of products (≻,≺), (▷,◁) or (⊢,⊣) on one space."""

    first: MultTable
    second: MultTable
    flavor: Flavor = Flavor.ANTI_PRE_LEIBNIZ

    def __post_init__(self) -> None:
        _require_same_dim(self.first, self.second)

    @classmethod
    def from_bundle(
        cls, bundle: AlgebraBundle, flavor: Flavor, names: tuple[str, str] | None = None
    ) -> SplitPair:
        first, second = names or _SLOTS[flavor]
        return cls(bundle.product(first), bundle.product(second), flavor)

    @property
    def dim(self) -> int:
        return self.first.dim

    @property
    def slot_names(self) -> tuple[str, str]:
        return _SLOTS[self.flavor]

    def sub_adjacent(self) -> MultTable:
        """≻+≺ (or ▷+◁); x⊢y − y⊣x for the dialgebra flavors."""
        if self.flavor in (Flavor.ANTI_PRE_LEIBNIZ, Flavor.PRE_LEIBNIZ):
            return table_sum(self.first, self.second)
        return table_sum(self.first, table_scale(table_flip(self.second), -1))

    def as_bundle(self) -> AlgebraBundle:
        first, second = self.slot_names
        return AlgebraBundle(self.dim, products={first: self.first, second: self.second})

    def scaled(self, c: Scalar) -> SplitPair:
        return SplitPair(table_scale(self.first, c), table_scale(self.second, c), self.flavor)
