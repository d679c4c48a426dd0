"""Seeded random instances for the theorem suites.

Raw tables are drawn with a configurable density. Instances that must satisfy an
identity system are built constructively (transforms, semidirect products,
transports of fixtures), never by rejection.
"""

from __future__ import annotations

import random
from fractions import Fraction

from leibsplit.algebra import (
    AlgebraBundle,
    BilinearForm,
    Flavor,
    LinearEndo,
    MultTable,
    RepBundle,
    SplitPair,
    multiply,
    transport,
    transport_table,
)
from leibsplit.catalog import fixture
from leibsplit.constructions import (
    OperatorMode,
    gd_from_novikov_di,
    levi_civita_from_cocycle,
    minus2_transform,
    omega_p,
    perm_to_leibniz,
    pre_from_transformed,
)
from leibsplit.linalg import Matrix, Vector, invert
from leibsplit.representations import dual_leibniz_rep, semidirect_leibniz, split_negative_rep
from leibsplit.types import Settings


class Sampler:
    """Deterministic generator of tables, matrices and structured instances."""

    def __init__(self, settings: Settings | None = None, seed: int | None = None):
        self.settings = settings or Settings()
        self.rng = random.Random(self.settings.seed if seed is None else seed)

    # -- raw material ---------------------------------------------------------

    def scalar(self, nonzero: bool = False) -> Fraction:
        bound = max(self.settings.coefficient_bound, 1)
        while True:
            value = self.rng.randint(-bound, bound)
            if value or not nonzero:
                return Fraction(value)

    def table(self, dim: int) -> MultTable:
        """Structure constants nonzero with probability ``density`` percent."""
        entries = []
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    if self.rng.randrange(100) < self.settings.density:
                        entries.append((i, j, k, self.scalar()))
        return MultTable.from_entries(dim, entries)

    def matrix(self, n_rows: int, n_cols: int) -> Matrix:
        return Matrix.of([[self.scalar() for _ in range(n_cols)] for _ in range(n_rows)], n_cols)

    def invertible(self, n: int) -> Matrix:
        """L·U with unit diagonals, so always invertible."""
        lower = Matrix.of(
            [[1 if i == j else (self.scalar() if j < i else 0) for j in range(n)] for i in range(n)]
        )
        upper = Matrix.of(
            [[1 if i == j else (self.scalar() if j > i else 0) for j in range(n)] for i in range(n)]
        )
        return lower @ upper

    def skew_form(self, n: int) -> BilinearForm:
        """φᵀ·J·φ for the standard symplectic J; ``n`` must be even."""
        if n % 2:
            raise ValueError(f"a nondegenerate skew form needs even dim, got {n}")
        phi = self.invertible(n)
        return BilinearForm(n, phi.transpose() @ omega_p(n // 2).gram @ phi)

    def transported(self, bundle: AlgebraBundle) -> AlgebraBundle:
        return transport(bundle, self.invertible(bundle.dim))

    def transported_pair(self, pair: SplitPair) -> SplitPair:
        phi = self.invertible(pair.dim)
        phi_inv = invert(phi)
        return SplitPair(
            transport_table(pair.first, phi, phi_inv),
            transport_table(pair.second, phi, phi_inv),
            pair.flavor,
        )

    # -- commutative associative and perm algebras ---------------------------

    @staticmethod
    def truncated_polynomials(dim: int) -> MultTable:
        """K[x]/(x^dim) on the basis 1, x, ..., x^(dim-1)."""
        return MultTable.from_entries(
            dim, [(i, j, i + j, 1) for i in range(dim) for j in range(dim) if i + j < dim]
        )

    def polynomial_derivation(self, dim: int) -> Matrix:
        """Derivation of K[x]/(x^dim) fixed by D(x) = c1·x + c2·x² + ...

        D(x^m) = m·x^(m-1)·D(x); the image of x has no constant term so D descends
        to the quotient.
        """
        dx = [Fraction(0)] + [self.scalar() for _ in range(1, dim)]
        columns = []
        for m in range(dim):
            column = [Fraction(0)] * dim
            for k, c in enumerate(dx):
                if m and c and m - 1 + k < dim:
                    column[m - 1 + k] += m * c
            columns.append(Vector.of(column))
        return Matrix.from_columns(columns, dim)

    def novikov(self, dim: int) -> MultTable:
        """x∘y = x·(D + λ)(y) on K[x]/(x^dim), transported to a random basis."""
        poly = self.truncated_polynomials(dim)
        shifted = self.polynomial_derivation(dim) + Matrix.identity(dim).scale(self.scalar())
        basis = [Vector.basis(dim, i) for i in range(dim)]
        table = MultTable.from_function(
            dim, lambda i, j: multiply(poly, basis[i], shifted.column(j))
        )
        phi = self.invertible(dim)
        return transport_table(table, phi, invert(phi))

    def novikov_dialgebra(self, dim: int) -> SplitPair:
        """(c·N, c·N) for a random Novikov algebra N."""
        table = self.novikov(dim)
        return SplitPair(table, table, Flavor.NOVIKOV_DIALGEBRA).scaled(self.scalar(nonzero=True))

    def functional_perm(self, dim: int) -> tuple[MultTable, Vector]:
        """x⋆y = f(x)·y, a perm algebra for every functional f."""
        f = Vector.of(self.scalar() for _ in range(dim))
        table = MultTable.from_function(dim, lambda i, j: Vector.basis(dim, j).scale(f[i]))
        return table, f

    def kernel_map(self, f: Vector) -> Matrix:
        """A random map with image inside ker f; a derivation of the functional perm algebra."""
        dim = len(f)
        pivot = next((i for i, c in enumerate(f) if c), None)
        if pivot is None:
            return self.matrix(dim, dim)
        if dim == 1:
            return Matrix.zeros(1, 1)
        other = (pivot + 1) % dim
        # k = f[other]·e_pivot − f[pivot]·e_other spans part of ker f.
        k = Vector.basis(dim, pivot).scale(f[other]) - Vector.basis(dim, other).scale(f[pivot])
        g = [self.scalar() for _ in range(dim)]
        return Matrix.from_columns([k.scale(c) for c in g], dim)

    def perm_with_operator(self, dim: int) -> tuple[MultTable, LinearEndo, OperatorMode]:
        """A perm algebra carrying a derivation or an averaging operator."""
        choice = self.rng.randrange(4)
        if choice == 0:
            star, f = self.functional_perm(dim)
            return star, LinearEndo(dim, self.kernel_map(f)), OperatorMode.DERIVATION
        if choice == 1:
            star, _ = self.functional_perm(dim)
            return star, LinearEndo(dim, Matrix.identity(dim).scale(self.scalar())), OperatorMode.AVERAGING
        star = self.truncated_polynomials(dim)
        if choice == 2:
            return star, LinearEndo(dim, self.polynomial_derivation(dim)), OperatorMode.DERIVATION
        # multiplication by a fixed element is averaging on a commutative associative algebra
        a = Vector.of(self.scalar() for _ in range(dim))
        basis = [Vector.basis(dim, i) for i in range(dim)]
        mult = Matrix.from_columns([multiply(star, a, e) for e in basis], dim)
        return star, LinearEndo(dim, mult), OperatorMode.AVERAGING

    def quadratic_perm(self) -> AlgebraBundle:
        """Dim-2 functional perm algebra with a skew form and a derivation.

        In dim 2 every functional perm algebra is invariant for every skew form.
        """
        star, f = self.functional_perm(2)
        bundle = AlgebraBundle(
            2,
            products={"star": star},
            forms={"omega": self.skew_form(2)},
            maps={"P": LinearEndo(2, self.kernel_map(f))},
        )
        return self.transported(bundle)

    # -- Leibniz algebras and their splittings -------------------------------

    def leibniz(self, dim: int) -> MultTable:
        choice = self.rng.randrange(3)
        if choice == 0:
            star, P, mode = self.perm_with_operator(dim)
            table = perm_to_leibniz(star, P, mode, force=True)
        elif choice == 1:
            table = gd_from_novikov_di(self.novikov_dialgebra(dim), force=True).product("circ")
        else:
            table = self.anti_pre_leibniz(dim).sub_adjacent()
        phi = self.invertible(dim)
        return transport_table(table, phi, invert(phi))

    def cocycle_instance(self) -> AlgebraBundle:
        """A Leibniz algebra of dim 2 or 4 with a skew nondegenerate 2-cocycle ``omega``."""
        choice = self.rng.randrange(3)
        if choice == 0:
            qp = self.quadratic_perm()
            circ = perm_to_leibniz(qp.product("star"), qp.map("P"), OperatorMode.DERIVATION, force=True)
            return AlgebraBundle(2, {"circ": circ}, {"omega": qp.form("omega")})
        if choice == 1:
            base = fixture(self.rng.choice(["omega2-on-leib2", "omega-p-on-apl1"])).bundle
            return self.transported(base)
        split = self.admissible_split(self.rng.choice([1, 2]))
        rep = dual_leibniz_rep(split_negative_rep(split))
        circ1d = semidirect_leibniz(split.sub_adjacent(), rep)
        return self.transported(
            AlgebraBundle(circ1d.dim, {"circ": circ1d}, {"omega": omega_p(split.dim)})
        )

    def admissible_split(self, dim: int) -> SplitPair:
        """minus2 transform of a Novikov dialgebra; anti-pre-Leibniz and admissible."""
        return minus2_transform(self.novikov_dialgebra(dim))

    def anti_pre_leibniz(self, dim: int) -> SplitPair:
        """An anti-pre-Leibniz algebra of the requested dim (1, 2 or 4)."""
        if dim in (2, 4) and self.rng.randrange(2):
            if dim == 2:
                instance = self.cocycle_instance()
                while instance.dim != 2:
                    instance = self.cocycle_instance()
            else:
                split = self.admissible_split(2)
                rep = dual_leibniz_rep(split_negative_rep(split))
                circ1d = semidirect_leibniz(split.sub_adjacent(), rep)
                instance = self.transported(
                    AlgebraBundle(4, {"circ": circ1d}, {"omega": omega_p(2)})
                )
            return levi_civita_from_cocycle(
                instance.product("circ"), instance.form("omega"), force=True
            )
        return self.transported_pair(self.admissible_split(dim))

    def pre_leibniz(self, dim: int) -> SplitPair:
        """Either (∘, 0) over a Leibniz algebra or the pre-Leibniz image of a Novikov dialgebra."""
        if self.rng.randrange(2):
            return SplitPair(self.leibniz(dim), MultTable.zero(dim), Flavor.PRE_LEIBNIZ)
        return pre_from_transformed(self.novikov_dialgebra(dim))

    def split_pair(self, dim: int, flavor: Flavor = Flavor.ANTI_PRE_LEIBNIZ) -> SplitPair:
        return SplitPair(self.table(dim), self.table(dim), flavor)

    # -- operators ------------------------------------------------------------

    def anti_O_on_split(self, split: SplitPair) -> tuple[Matrix, RepBundle]:
        """T = [c·id | d·id] on two copies of (−L≻, −R≺); anti-O for all c, d and never invertible."""
        n = split.dim
        rep = split_negative_rep(split)
        c, d = self.scalar(), self.scalar()
        doubled = RepBundle(
            n,
            2 * n,
            {
                name: tuple(Matrix.block([[m, Matrix.zeros(n, n)], [Matrix.zeros(n, n), m]]) for m in rep.family(name))
                for name in ("l", "r")
            },
        )
        T = Matrix.block([[Matrix.identity(n).scale(c), Matrix.identity(n).scale(d)]])
        return T, doubled
