"""Bundled property suites.

Each suite runs one biconditional or implication over the cataloged fixtures and
``Settings.samples`` seeded random instances. An instance verdict holds when both
sides agree; a suite passes when every verdict holds.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterator

from leibsplit.affinization import leibniz_grid_check, windowed_leibniz_check
from leibsplit.algebra import (
    AlgebraBundle,
    Flavor,
    MultTable,
    RepBundle,
    SplitPair,
    form_is_nondegenerate,
    form_is_skew,
)
from leibsplit.catalog import fixture
from leibsplit.constructions import (
    OperatorMode,
    check_anti_O,
    check_strong_anti_O,
    compatible_split_from_invertible_anti_O,
    double_structures_apl,
    double_structures_pre,
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
from leibsplit.errors import UnknownSuite
from leibsplit.identities import check_system
from leibsplit.linalg import Matrix, invert
from leibsplit.registry import registry
from leibsplit.representations import (
    adjoint_rep,
    apl_adjoint_rep,
    check_apl_rep,
    check_leibniz_rep,
    check_rep_equivalence,
    coadjoint_rep,
    dual_apl_rep,
    dual_leibniz_rep,
    semidirect_leibniz,
    split_negative_rep,
)
from leibsplit.sampling import Sampler
from leibsplit.types import Settings, Verdict

logger = logging.getLogger("leibsplit")

COCYCLE_FIXTURES = ("omega2-on-leib2", "omega-p-on-apl1")
WINDOW = range(-2, 3)

SuiteFn = Callable[[Sampler], Iterator[tuple[str, bool, str]]]

_SUITES: dict[str, tuple[str, SuiteFn]] = {}


def suite(name: str, description: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        _SUITES[name] = (description, fn)
        return fn

    return register


def suite_names() -> list[str]:
    return list(_SUITES)


def describe_suite(name: str) -> str:
    return _lookup(name)[0]


def _lookup(name: str) -> tuple[str, SuiteFn]:
    try:
        return _SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown theorem suite {name!r}") from None


def run_suite(name: str, settings: Settings | None = None) -> list[Verdict]:
    """Run one suite; verdict order is fixed by the seed."""
    _, fn = _lookup(name)
    settings = settings or Settings()
    sampler = Sampler(settings)
    verdicts = []
    for label, holds, detail in fn(sampler):
        if settings.debug and not holds:
            logger.info("%s disagrees on %s: %s", name, label, detail)
        verdicts.append(Verdict(name=f"{name}/{label}", holds=holds, detail=detail))
    if settings.debug:
        logger.info("%s: %d instances, %d disagreements", name, len(verdicts), sum(not v.holds for v in verdicts))
    return verdicts


def _holds(system: str, bundle: AlgebraBundle) -> bool:
    return check_system(registry(system), bundle).holds


def _apl(split: SplitPair) -> bool:
    return _holds("anti-pre-leibniz", split.as_bundle())


def _compatible(circ1: MultTable, circ2: MultTable) -> bool:
    return _holds("compatible-leibniz", AlgebraBundle(circ1.dim, {"circ1": circ1, "circ2": circ2}))


def _random(sampler: Sampler) -> Iterator[tuple[str, int]]:
    for n in range(sampler.settings.samples):
        yield f"random-{n}", n


def _split(name: str) -> SplitPair:
    return SplitPair.from_bundle(fixture(name).bundle, Flavor.ANTI_PRE_LEIBNIZ)


def _cocycle_instances(sampler: Sampler) -> Iterator[tuple[str, AlgebraBundle]]:
    for name in COCYCLE_FIXTURES:
        yield name, fixture(name).bundle
    for label, _ in _random(sampler):
        yield label, sampler.cocycle_instance()


def _apl_instances(sampler: Sampler) -> Iterator[tuple[str, SplitPair]]:
    yield "apl1", _split("apl1")
    for label, n in _random(sampler):
        yield label, sampler.anti_pre_leibniz(1 + n % 2)


def _invertible_anti_O_candidates(
    sampler: Sampler,
) -> Iterator[tuple[str, Matrix, MultTable, RepBundle]]:
    """Invertible operators, anti-O by construction for two of every three random draws."""
    apl1 = _split("apl1")
    yield "apl1", Matrix.identity(1), apl1.sub_adjacent(), split_negative_rep(apl1)
    for name in COCYCLE_FIXTURES:
        bundle = fixture(name).bundle
        circ = bundle.product("circ")
        yield name, invert(omega_sharp(bundle.form("omega"))), circ, coadjoint_rep(circ)
    for label, n in _random(sampler):
        if n % 3 == 0:
            split = sampler.anti_pre_leibniz(1 + n % 2)
            T = Matrix.identity(split.dim).scale(sampler.scalar(nonzero=True))
            yield label, T, split.sub_adjacent(), split_negative_rep(split)
        elif n % 3 == 1:
            bundle = sampler.cocycle_instance()
            circ = bundle.product("circ")
            yield label, invert(omega_sharp(bundle.form("omega"))), circ, coadjoint_rep(circ)
        else:
            circ = sampler.leibniz(1 + n % 3)
            yield label, sampler.invertible(circ.dim), circ, adjoint_rep(circ)


@suite("thm-2-12", "invertible T is anti-O iff its compatible split is anti-pre-Leibniz over ∘")
def _thm_2_12(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, T, circ, rep in _invertible_anti_O_candidates(sampler):
        anti_O = check_anti_O(T, circ, rep)
        split = compatible_split_from_invertible_anti_O(T, circ, rep, force=True)
        compatible = split.sub_adjacent() == circ and _apl(split)
        yield label, anti_O == compatible, f"anti-O={anti_O} compatible={compatible}"


@suite("thm-2-14", "a 2-cocycle splits ∘ and makes ω♮ an equivalence of representations")
def _thm_2_14(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, bundle in _cocycle_instances(sampler):
        circ, omega = bundle.product("circ"), bundle.form("omega")
        split = levi_civita_from_cocycle(circ, omega)
        lozenge, black = levi_civita(circ, omega)
        checks = {
            "anti-pre-leibniz": _apl(split),
            "sum": split.sub_adjacent() == circ,
            "levi-civita": (lozenge, black) == (split.second, split.first),
            "coadjoint": check_rep_equivalence(
                split_negative_rep(split), coadjoint_rep(circ), omega_sharp(omega)
            ),
            "adjoint": check_rep_equivalence(
                adjoint_rep(circ), dual_leibniz_rep(split_negative_rep(split)), omega_sharp_dual(omega)
            ),
            "anti-O": check_anti_O(invert(omega_sharp(omega)), circ, coadjoint_rep(circ)),
        }
        failed = [name for name, ok in checks.items() if not ok]
        yield label, not failed, "failed: " + ", ".join(failed) if failed else "all equivalences hold"


@suite("prop-2-6", "anti-pre-Leibniz iff the alternative axioms hold iff (−L≻, −R≺) or its dual represents ∘")
def _prop_2_6(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    def instances() -> Iterator[tuple[str, SplitPair]]:
        yield from _apl_instances(sampler)
        yield "leib2-as-split", SplitPair(fixture("leib2").bundle.product("circ"), MultTable.zero(2))
        for label, n in _random(sampler):
            yield f"raw-{label}", sampler.split_pair(1 + n % 2)

    for label, split in instances():
        circ = split.sub_adjacent()
        rep = split_negative_rep(split)
        verdicts = (
            _apl(split),
            _holds("anti-pre-leibniz-alt", split.as_bundle()),
            check_leibniz_rep(circ, rep).holds,
            check_leibniz_rep(circ, dual_leibniz_rep(rep)).holds,
        )
        yield label, len(set(verdicts)) == 1, f"verdicts={verdicts}"


@suite("prop-2-9", "an invertible anti-O-operator is strong")
def _prop_2_9(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, T, circ, rep in _invertible_anti_O_candidates(sampler):
        anti_O = check_anti_O(T, circ, rep)
        strong = anti_O and check_strong_anti_O(T, circ, rep)
        yield label, (not anti_O) or strong, f"anti-O={anti_O} strong={strong}"


@suite("prop-2-10", "the split induced by an anti-O-operator is anti-pre-Leibniz iff the operator is strong")
def _prop_2_10(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, split in _apl_instances(sampler):
        T, rep = sampler.anti_O_on_split(split)
        circ = split.sub_adjacent()
        if not check_anti_O(T, circ, rep):
            yield label, False, "generated operator is not anti-O"
            continue
        strong = check_strong_anti_O(T, circ, rep)
        induced = _apl(induced_split(T, circ, rep))
        yield label, strong == induced, f"strong={strong} induced-apl={induced}"


@suite("prop-2-11", "a quadratic perm algebra with a derivation gives a Leibniz algebra with ω a 2-cocycle")
def _prop_2_11(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    def instances() -> Iterator[tuple[str, AlgebraBundle]]:
        yield "qperm2", fixture("qperm2").bundle
        for label, _ in _random(sampler):
            yield label, sampler.quadratic_perm()

    for label, bundle in instances():
        circ = perm_to_leibniz(bundle.product("star"), bundle.map("P"), OperatorMode.DERIVATION)
        result = AlgebraBundle(bundle.dim, {"circ": circ}, {"omega": bundle.form("omega")})
        leibniz = _holds("leibniz", result)
        cocycle = _holds("two-cocycle", result)
        yield label, leibniz and cocycle, f"leibniz={leibniz} cocycle={cocycle}"


@suite("prop-2-16", "ω_p is a skew nondegenerate 2-cocycle on A ⋉ A* and recovers the split")
def _prop_2_16(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, split in _apl_instances(sampler):
        circ = split.sub_adjacent()
        rep = dual_leibniz_rep(split_negative_rep(split))
        table = semidirect_leibniz(circ, rep)
        form = omega_p(split.dim)
        checks = {
            "skew": form_is_skew(form),
            "nondegenerate": form_is_nondegenerate(form),
            "cocycle": _holds("two-cocycle", AlgebraBundle(table.dim, {"circ": table}, {"omega": form})),
            "recovered": split_from_omega_p(circ, rep, force=True) == split,
        }
        failed = [name for name, ok in checks.items() if not ok]
        yield label, not failed, "failed: " + ", ".join(failed) if failed else "ok"


@suite("prop-2-22", "ω is a 2-cocycle iff it is invariant on a compatible split of ∘")
def _prop_2_22(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    def instances() -> Iterator[tuple[str, AlgebraBundle]]:
        yield from _cocycle_instances(sampler)
        for label, n in _random(sampler):
            dim = 2 + 2 * (n % 2)
            circ = sampler.leibniz(dim)
            yield f"skew-{label}", AlgebraBundle(dim, {"circ": circ}, {"omega": sampler.skew_form(dim)})

    for label, bundle in instances():
        circ, omega = bundle.product("circ"), bundle.form("omega")
        cocycle = _holds("two-cocycle", bundle)
        split = levi_civita_from_cocycle(circ, omega, force=True)
        invariant = split.sub_adjacent() == circ and _holds(
            "apl-invariance",
            AlgebraBundle(bundle.dim, {"succ": split.first, "prec": split.second}, {"omega": omega}),
        )
        yield label, cocycle == invariant, f"cocycle={cocycle} invariant-split={invariant}"


@suite("prop-2-23", "for a quadratic anti-pre-Leibniz algebra ω♮ intertwines the adjoint and dual quadruples")
def _prop_2_23(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, bundle in _cocycle_instances(sampler):
        omega = bundle.form("omega")
        split = levi_civita_from_cocycle(bundle.product("circ"), omega)
        adjoint = apl_adjoint_rep(split)
        dual = dual_apl_rep(adjoint)
        checks = {
            "anti-pre-leibniz": _apl(split),
            "dual-is-rep": check_apl_rep(split, dual).holds,
            "equivalent": check_rep_equivalence(adjoint, dual, omega_sharp(omega)),
        }
        failed = [name for name, ok in checks.items() if not ok]
        yield label, not failed, "failed: " + ", ".join(failed) if failed else "ok"


def _transformed_instances(sampler: Sampler) -> Iterator[tuple[str, SplitPair]]:
    """Transformed pairs; Novikov dialgebras and (∘, 0) images that mostly are not."""
    yield "nov1", SplitPair.from_bundle(fixture("nov1").bundle, Flavor.TRANSFORMED)
    lie2 = fixture("lie2").bundle.product("circ")
    yield "lie2", transformed_from_pre(SplitPair(lie2, MultTable.zero(2), Flavor.PRE_LEIBNIZ))
    for label, n in _random(sampler):
        if n % 2:
            nd = sampler.novikov_dialgebra(1 + n % 3)
            yield label, SplitPair(nd.first, nd.second, Flavor.TRANSFORMED)
        else:
            yield label, transformed_from_pre(sampler.pre_leibniz(1 + n % 3))


@suite("prop-3-3", "(▷, ◁) is pre-Leibniz iff the transformed pair satisfies nd1-nd3")
def _prop_3_3(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    def instances() -> Iterator[tuple[str, SplitPair]]:
        yield from _transformed_instances(sampler)
        for label, n in _random(sampler):
            yield f"raw-{label}", sampler.split_pair(1 + n % 2, Flavor.TRANSFORMED)

    for label, pair in instances():
        transformed = _holds("transformed-pre-leibniz", pair.as_bundle())
        pre = _holds("pre-leibniz", pre_from_transformed(pair).as_bundle())
        yield label, transformed == pre, f"transformed={transformed} pre-leibniz={pre}"


@suite("prop-3-5", "an admissible Novikov dialgebra is anti-pre-Leibniz")
def _prop_3_5(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    # constructed instances must also pass the admissible check
    def instances() -> Iterator[tuple[str, SplitPair, bool]]:
        yield "apl1", _split("apl1"), True
        yield "nov1-minus2", minus2_transform(
            SplitPair.from_bundle(fixture("nov1").bundle, Flavor.TRANSFORMED)
        ), True
        for label, n in _random(sampler):
            yield label, sampler.transported_pair(sampler.admissible_split(1 + n % 3)), True
            yield f"apl-{label}", sampler.anti_pre_leibniz(1 + n % 2), False
            yield f"raw-{label}", sampler.split_pair(1 + n % 2), False

    for label, split, constructed in instances():
        admissible = _holds("admissible-novikov-dialgebra", split.as_bundle())
        apl = _apl(split)
        ok = (not admissible or apl) and (admissible or not constructed)
        yield label, ok, f"admissible={admissible} apl={apl}"


@suite("prop-3-6","the minus2 transform of a transformed pre-Leibniz algebra is anti-pre-Leibniz iff it is a Novikov dialgebra")
def _prop_3_6(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, pair in _transformed_instances(sampler):
        novikov = _holds("novikov-dialgebra", pair.as_bundle())
        image = minus2_transform(pair)
        apl = _apl(image)
        admissible = _holds("admissible-novikov-dialgebra", image.as_bundle())
        ok = novikov == apl and (not apl or admissible)
        yield label, ok, f"novikov={novikov} apl={apl} admissible={admissible}"


@suite("prop-3-7", "the plus2 transform of an anti-pre-Leibniz algebra is transformed pre-Leibniz iff it is admissible")
def _prop_3_7(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, split in _apl_instances(sampler):
        admissible = _holds("admissible-novikov-dialgebra", split.as_bundle())
        image = plus2_transform(split)
        transformed = _holds("transformed-pre-leibniz", image.as_bundle())
        novikov = _holds("novikov-dialgebra", image.as_bundle())
        ok = admissible == transformed and (not transformed or novikov)
        yield label, ok, f"admissible={admissible} transformed={transformed} novikov={novikov}"


@suite("prop-3-9", "the double structures of an anti-pre-Leibniz algebra are compatible iff it is admissible")
def _prop_3_9(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    for label, split in _apl_instances(sampler):
        admissible = _holds("admissible-novikov-dialgebra", split.as_bundle())
        compatible = _compatible(*double_structures_apl(split))
        yield label, admissible == compatible, f"admissible={admissible} compatible={compatible}"


@suite("prop-3-10", "the double structures of a pre-Leibniz algebra are compatible iff its transform is Novikov")
def _prop_3_10(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    def instances() -> Iterator[tuple[str, SplitPair]]:
        lie2 = fixture("lie2").bundle.product("circ")
        yield "lie2", SplitPair(lie2, MultTable.zero(2), Flavor.PRE_LEIBNIZ)
        yield "nov1", pre_from_transformed(SplitPair.from_bundle(fixture("nov1").bundle, Flavor.TRANSFORMED))
        for label, n in _random(sampler):
            yield label, sampler.pre_leibniz(1 + n % 2)

    for label, pair in instances():
        novikov = _holds("novikov-dialgebra", transformed_from_pre(pair).as_bundle())
        compatible = _compatible(*double_structures_pre(pair))
        yield label, novikov == compatible, f"novikov={novikov} compatible={compatible}"


@suite("prop-3-13", "the affinization is Leibniz for all degrees iff the bundle is a GD dialgebra")
def _prop_3_13(sampler: Sampler) -> Iterator[tuple[str, bool, str]]:
    def instances() -> Iterator[tuple[str, AlgebraBundle]]:
        for name in ("gd-nov1", "gd-der2", "zero1", "zero2"):
            yield name, fixture(name).bundle
        for label, n in _random(sampler):
            dim = 1 + n % 2
            if n % 2:
                yield label, gd_from_novikov_di(sampler.novikov_dialgebra(dim), force=True)
            else:
                yield label, AlgebraBundle(
                    dim, {slot: sampler.table(dim) for slot in ("circ", "vdash", "dashv")}
                )

    for label, bundle in instances():
        gd = _holds("gd-dialgebra", bundle)
        grid = leibniz_grid_check(bundle).holds
        window = windowed_leibniz_check(bundle, WINDOW).holds
        yield label, gd == grid == window, f"gd-dialgebra={gd} grid={grid} window={window}"
