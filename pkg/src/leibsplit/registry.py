"""Named identity systems."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from leibsplit.errors import UnknownSystem
from leibsplit.identities import Equation, IdentitySystem, parse_equation

SPLIT_CIRC = {"circ": ("succ", "prec")}


def _leibniz(o: str) -> list[tuple[str, str]]:
    return [("leibniz", f"x {o} (y {o} z) = (x {o} y) {o} z + y {o} (x {o} z)")]


def _lie(b: str) -> list[tuple[str, str]]:
    return [
        ("skew", f"x {b} y + y {b} x = 0"),
        ("jacobi", f"x {b} (y {b} z) + y {b} (z {b} x) + z {b} (x {b} y) = 0"),
    ]


def _novikov(a: str) -> list[tuple[str, str]]:
    return [
        ("left-symmetric", f"(x {a} y) {a} z - x {a} (y {a} z) = (y {a} x) {a} z - y {a} (x {a} z)"),
        ("right-commutative", f"(x {a} y) {a} z = (x {a} z) {a} y"),
    ]


_ANTI_PRE_LEIBNIZ_234 = [
    ("anLei2", "(x circ y) succ z = y succ (x succ z) - x succ (y succ z)"),
    ("anLei3", "x prec (y circ z) = (y succ x) prec z - y succ (x prec z)"),
    ("anLei4", "(x succ y) prec z = -(y prec x) prec z"),
]

_TRANSFORMED = [
    ("nd1", "x vdash (y vdash z) = (x vdash y) vdash z - (y dashv x) vdash z + y vdash (x vdash z)"),
    ("nd2", "(y vdash z) dashv x = y vdash (z dashv x) - z dashv (y vdash x) + (z dashv y) dashv x"),
    ("nd3", "z dashv (x vdash y) = z dashv (x dashv y)"),
]

_NOVIKOV_DIALGEBRA = _TRANSFORMED + [
    ("nd4", "(z dashv y) dashv x = (z dashv x) dashv y"),
    ("nd5a", "(y dashv x) vdash z = (y vdash z) dashv x"),
    ("nd5b", "(y vdash z) dashv x = (y vdash x) vdash z"),
]

_GD_DIALGEBRA = [
    ("GD-dia1", "x vdash (y circ z) - (x vdash y) circ z - (x circ y) vdash z - y circ (x vdash z) + (x circ z) dashv y = 0"),
    ("GD-dia2", "x circ (y vdash z) - (y circ z) dashv x + (y dashv x) circ z - (x circ y) vdash z - y vdash (x circ z) = 0"),
    ("GD-dia3", "x circ (z dashv y) + (y circ z) dashv x - z dashv (x circ y) - y circ (z dashv x) - (x circ z) dashv y = 0"),
]

# (name, products, forms, maps, derived, each_product, equations, notes)
_DEFINITIONS: list[tuple] = [
    ("leibniz", ("circ",), (), (), {}, False, _leibniz("circ"), ""),
    (
        "quadratic-leibniz-invariance",
        ("circ",), ("omega",), (), {}, False,
        [("invariance", "omega(x, y circ z) = omega(x circ z + z circ x, y)")],
        "",
    ),
    (
        "two-cocycle",
        ("circ",), ("omega",), (), {}, False,
        [("cocycle", "omega(z, x circ y) = omega(x, y circ z + z circ y) - omega(y, x circ z)")],
        "",
    ),
    (
        "anti-pre-leibniz",
        ("succ", "prec"), (), (), SPLIT_CIRC, False,
        [("anLei1", "(x circ y) prec z = x succ (y circ z) - y succ (x circ z)")] + _ANTI_PRE_LEIBNIZ_234,
        "Representations (l_succ, r_succ, l_prec, r_prec) are checked by running this "
        "system on the semidirect product A+V, which is equivalent to the eleven "
        "representation axioms relating l and r of both products.",
    ),
    (
        "anti-pre-leibniz-alt",
        ("succ", "prec"), (), (), SPLIT_CIRC, False,
        _ANTI_PRE_LEIBNIZ_234 + [("anLei-equivalent", "(x circ y) succ z = x prec (y circ z) - y prec (x circ z)")],
        "",
    ),
    (
        "pre-leibniz",
        ("rhd", "lhd"), (), (), {}, False,
        [
            ("pre-L1", "x rhd (y rhd z) = (x rhd y) rhd z + (x lhd y) rhd z + y rhd (x rhd z)"),
            ("pre-L2", "x lhd (y rhd z) = y rhd (x lhd z) - (y rhd x) lhd z - x lhd (y lhd z)"),
            ("pre-L3", "(x rhd y) lhd z = -(y lhd x) lhd z"),
        ],
        "",
    ),
    ("transformed-pre-leibniz", ("vdash", "dashv"), (), (), {}, False, _TRANSFORMED, ""),
    ("novikov-dialgebra", ("vdash", "dashv"), (), (), {}, False, _NOVIKOV_DIALGEBRA, ""),
    (
        "admissible-novikov-dialgebra",
        ("succ", "prec"), (), (), SPLIT_CIRC, False,
        _ANTI_PRE_LEIBNIZ_234
        + [
            ("adm1", "(x succ y) succ z = -(y prec x) succ z"),
            ("adm2", "x prec (y prec z) - y prec (x prec z) = 2 (x prec y) prec z - 2 (y prec x) prec z"),
            ("adm3", "(x succ y) succ z + y prec (x succ z) = 2 x succ (y circ z)"),
        ],
        "The union of both lists; no claim is made that it is minimal.",
    ),
    (
        "perm",
        ("star",), (), (), {}, False,
        [
            ("associative", "x star (y star z) = (x star y) star z"),
            ("left-commutative", "(x star y) star z = (y star x) star z"),
        ],
        "",
    ),
    (
        "quadratic-perm-invariance",
        ("star",), ("omega",), (), {}, False,
        [("invariance", "omega(x star y, z) = omega(x, y star z - z star y)")],
        "",
    ),
    (
        "averaging",
        ("circ",), (), ("P",), {}, True,
        [
            ("averaging-left", "P(x) circ P(y) = P(P(x) circ y)"),
            ("averaging-right", "P(P(x) circ y) = P(x circ P(y))"),
        ],
        "Checked for every product of the bundle.",
    ),
    (
        "derivation",
        ("circ",), (), ("P",), {}, True,
        [("derivation", "P(x circ y) = P(x) circ y + x circ P(y)")],
        "Checked for every product of the bundle.",
    ),
    (
        "compatible-leibniz",
        ("circ1", "circ2"), (), (), {}, False,
        [("leibniz-1", _leibniz("circ1")[0][1]), ("leibniz-2", _leibniz("circ2")[0][1])]
        + [
            (
                "mixed",
                "x circ2 (y circ1 z) + x circ1 (y circ2 z) - (x circ1 y) circ2 z"
                " - (x circ2 y) circ1 z - y circ2 (x circ1 z) - y circ1 (x circ2 z) = 0",
            )
        ],
        "",
    ),
    ("lie-algebra", ("bracket",), (), (), {}, False, _lie("bracket"), ""),
    ("novikov-algebra", ("ast",), (), (), {}, False, _novikov("ast"), ""),
    (
        "gd-algebra",
        ("bracket", "ast"), (), (), {}, False,
        _lie("bracket")
        + _novikov("ast")
        + [
            (
                "GD",
                "(x ast y) bracket z - (x ast z) bracket y + (x bracket y) ast z"
                " - (x bracket z) ast y - x ast (y bracket z) = 0",
            )
        ],
        "",
    ),
    (
        "gd-dialgebra",
        ("circ", "vdash", "dashv"), (), (), {}, False,
        _leibniz("circ") + _NOVIKOV_DIALGEBRA + _GD_DIALGEBRA,
        "",
    ),
    (
        "apl-invariance",
        ("succ", "prec"), ("omega",), (), SPLIT_CIRC, False,
        [
            ("cor3", "omega(x succ y, z) = omega(y, x circ z)"),
            ("cor4", "omega(x prec y, z) = -omega(x, y circ z + z circ y)"),
        ],
        "",
    ),
    (
        "affine-l2",
        ("vdash", "dashv"), (), (), {}, False,
        [("L2", "(y vdash z) dashv x = y vdash (z dashv x) + (z dashv y) dashv x - z dashv (y dashv x)")],
        "Degree-(0,1,1) instance of the affinized Leibniz identity.",
    ),
]


def _build(definition: tuple) -> IdentitySystem:
    name, products, forms, maps, derived, each_product, equations, notes = definition
    known_products = tuple(products) + tuple(derived)
    parsed: tuple[Equation, ...] = tuple(
        parse_equation(text, label, known_products, forms, maps) for label, text in equations
    )
    return IdentitySystem(
        name=name,
        equations=parsed,
        products=tuple(products),
        forms=tuple(forms),
        maps=tuple(maps),
        derived=dict(derived),
        each_product=each_product,
        notes=notes,
    )


@lru_cache(maxsize=None)
def _systems() -> Mapping[str, IdentitySystem]:
    return {definition[0]: _build(definition) for definition in _DEFINITIONS}


def system_names() -> list[str]:
    return list(_systems())


def registry(name: str) -> IdentitySystem:
    """Look up a bundled identity system by name."""
    try:
        return _systems()[name]
    except KeyError:
        raise UnknownSystem(f"unknown identity system {name!r}") from None
