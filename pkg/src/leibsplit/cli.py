"""Command-line interface: check, construct, verify-theorem, catalog.

Every subcommand prints one JSON report on stdout. Exit codes: 0 when everything
holds, 2 when an identity or a suite is violated, 1 on operational errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from pydantic import ValidationError

from leibsplit.affinization import leibniz_grid_check
from leibsplit.algebra import (
    AlgebraBundle,
    Flavor,
    LinearEndo,
    MultTable,
    RepBundle,
    SplitPair,
    table_sum,
)
from leibsplit.catalog import fixture, fixture_names, fixture_source
from leibsplit.codec import document_from_bundle, load_bundle, save_bundle
from leibsplit.constructions import (
    OperatorMode,
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
    perm_to_leibniz,
    plus2_transform,
    pre_from_transformed,
    split_from_omega_p,
    transformed_from_pre,
)
from leibsplit.errors import LeibsplitError, PreconditionFailed, UnknownName, UsageError
from leibsplit.identities import CheckReport, Counterexample, check_system
from leibsplit.registry import registry
from leibsplit.representations import (
    adjoint_rep,
    apl_adjoint_rep,
    coadjoint_rep,
    dual_apl_rep,
    dual_leibniz_rep,
    semidirect_apl,
    semidirect_leibniz,
    split_negative_rep,
)
from leibsplit.theorems import run_suite, suite_names
from leibsplit.types import CounterexampleModel, Report, Settings, Verdict
from leibsplit.utils import format_rational

logger = logging.getLogger("leibsplit")

AFFINIZED = "affinized-leibniz"
EXIT_OK, EXIT_ERROR, EXIT_VIOLATED = 0, 1, 2
REP_KINDS = ("adjoint", "coadjoint", "split", "dual-split")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


# -- report helpers ----------------------------------------------------------


def counterexample_model(c: Counterexample) -> CounterexampleModel:
    defect = (
        format_rational(c.defect)
        if isinstance(c.defect, (Fraction, int))
        else [format_rational(x) for x in c.defect]
    )
    return CounterexampleModel(
        equation_index=c.equation_index,
        equation=c.label,
        basis=list(c.basis),
        defect=defect,
        degrees=list(c.degrees) if c.degrees is not None else None,
    )


def verdict_from(report: CheckReport, name: str | None = None) -> Verdict:
    return Verdict(
        name=name or report.system,
        holds=report.holds,
        counterexample=counterexample_model(report.counterexample) if report.counterexample else None,
    )


def _split_names(value: str | None) -> list[str] | None:
    if not value:
        return None
    return [part.strip() for part in value.split(",") if part.strip()]


# -- check -------------------------------------------------------------------


def cmd_check(args: argparse.Namespace, settings: Settings) -> Report:
    bundle = load_bundle(args.input)
    products = _split_names(args.products)
    if args.system == AFFINIZED:
        slots = tuple(products) if products else ("circ", "vdash", "dashv")
        if len(slots) != 3:
            raise UsageError(f"{AFFINIZED} needs three products, got {list(slots)}")
        report = leibniz_grid_check(bundle, slots, debug=settings.debug)  # type: ignore[arg-type]
    else:
        report = check_system(
            registry(args.system),
            bundle,
            products=products,
            forms=[args.form] if args.form else None,
            maps=[args.map] if args.map else None,
            debug=settings.debug,
        )
    return Report(
        command=[],
        verdicts=[verdict_from(report, args.system)],
        exit_code=EXIT_OK if report.holds else EXIT_VIOLATED,
    )


# -- construct ---------------------------------------------------------------


@dataclass(frozen=True)
class Operation:
    build: Callable[[AlgebraBundle, argparse.Namespace], AlgebraBundle]
    preconditions: tuple[str, ...] = ()
    # (system, product names) run on the output bundle
    postconditions: tuple[tuple[str, tuple[str, ...] | None], ...] = field(default_factory=tuple)


def _circ(bundle: AlgebraBundle) -> MultTable:
    if "circ" in bundle.products:
        return bundle.product("circ")
    return table_sum(bundle.product("succ"), bundle.product("prec"))


def _pair(bundle: AlgebraBundle, flavor: Flavor) -> SplitPair:
    return SplitPair.from_bundle(bundle, flavor)


def _representation(bundle: AlgebraBundle, kind: str) -> RepBundle:
    if kind == "adjoint":
        return adjoint_rep(_circ(bundle))
    if kind == "coadjoint":
        return coadjoint_rep(_circ(bundle))
    split = _pair(bundle, Flavor.ANTI_PRE_LEIBNIZ)
    if kind == "split":
        return split_negative_rep(split)
    if kind == "dual-split":
        return dual_leibniz_rep(split_negative_rep(split))
    raise UnknownName(f"unknown representation {kind!r}; expected one of {REP_KINDS}")


def _split_bundle(split: SplitPair) -> AlgebraBundle:
    first, second = split.slot_names
    return AlgebraBundle(split.dim, {first: split.first, second: split.second})


def _op_levi_civita(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    lozenge, black = levi_civita(b.product("circ"), b.form(args.form or "omega"))
    return AlgebraBundle(b.dim, {"circ": b.product("circ"), "lozenge": lozenge, "black": black})


def _op_levi_civita_from_cocycle(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    omega = b.form(args.form or "omega")
    split = levi_civita_from_cocycle(b.product("circ"), omega, force=args.force, debug=args.debug)
    return AlgebraBundle(b.dim, {"succ": split.first, "prec": split.second}, {"omega": omega})


def _op_semidirect_leibniz(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    table = semidirect_leibniz(_circ(b), _representation(b, args.rep or "adjoint"))
    return AlgebraBundle(table.dim, {"circ": table})


def _op_semidirect_apl(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    split = _pair(b, Flavor.ANTI_PRE_LEIBNIZ)
    kind = args.rep or "adjoint"
    if kind == "adjoint":
        rep = apl_adjoint_rep(split)
    elif kind == "coadjoint":
        rep = dual_apl_rep(apl_adjoint_rep(split))
    else:
        raise UnknownName(f"semidirect-apl takes --rep adjoint or coadjoint, got {kind!r}")
    return _split_bundle(semidirect_apl(split, rep))


def _operator(b: AlgebraBundle, args: argparse.Namespace, default: str) -> LinearEndo:
    return b.map(args.map or default)


def _op_induced_split(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    T = _operator(b, args, "T").matrix
    split = induced_split(T, _circ(b), _representation(b, args.rep or "adjoint"), force=args.force, debug=args.debug)
    return _split_bundle(split)


def _op_compatible_split(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    T = _operator(b, args, "T").matrix
    split = compatible_split_from_invertible_anti_O(
        T, _circ(b), _representation(b, args.rep or "adjoint"), force=args.force, debug=args.debug
    )
    return _split_bundle(split)


def _op_perm_to_leibniz(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    circ = perm_to_leibniz(
        b.product("star"), _operator(b, args, "P"), args.mode, force=args.force, debug=args.debug
    )
    return AlgebraBundle(b.dim, {"circ": circ})


def _op_minus2(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    return _split_bundle(minus2_transform(_pair(b, Flavor.NOVIKOV_DIALGEBRA)))


def _op_plus2(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    return _split_bundle(plus2_transform(_pair(b, Flavor.ANTI_PRE_LEIBNIZ)))


def _op_transformed_from_pre(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    return _split_bundle(transformed_from_pre(_pair(b, Flavor.PRE_LEIBNIZ)))


def _op_pre_from_transformed(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    return _split_bundle(pre_from_transformed(_pair(b, Flavor.TRANSFORMED)))


def _op_double_apl(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    d1, d2 = double_structures_apl(_pair(b, Flavor.ANTI_PRE_LEIBNIZ), force=args.force, debug=args.debug)
    return AlgebraBundle(d1.dim, {"circ1d": d1, "circ2d": d2})


def _op_double_pre(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    d1, d2 = double_structures_pre(_pair(b, Flavor.PRE_LEIBNIZ), force=args.force, debug=args.debug)
    return AlgebraBundle(d1.dim, {"bullet1d": d1, "bullet2d": d2})


def _op_omega_p(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    d1, _ = double_structures_apl(_pair(b, Flavor.ANTI_PRE_LEIBNIZ), force=args.force, debug=args.debug)
    return AlgebraBundle(d1.dim, {"circ": d1}, {"omega": omega_p(b.dim)})


def _op_gd_from_novikov_di(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    return gd_from_novikov_di(_pair(b, Flavor.NOVIKOV_DIALGEBRA), force=args.force, debug=args.debug)


def _op_gd_from_averaging(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    return gd_from_averaging(b, _operator(b, args, "P"), force=args.force, debug=args.debug)


def _op_derivation_product(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    table = derivation_product(b, _operator(b, args, "P"), force=args.force, debug=args.debug)
    return AlgebraBundle(b.dim, {"circ": table})


def _op_split_from_omega_p(b: AlgebraBundle, args: argparse.Namespace) -> AlgebraBundle:
    split = split_from_omega_p(
        _circ(b), _representation(b, args.rep or "dual-split"), force=args.force, debug=args.debug
    )
    return _split_bundle(split)


OPERATIONS: dict[str, Operation] = {
    "levi-civita": Operation(_op_levi_civita),
    "levi-civita-from-cocycle": Operation(
        _op_levi_civita_from_cocycle,
        ("two-cocycle",),
        (("anti-pre-leibniz", None), ("apl-invariance", None)),
    ),
    "semidirect-leibniz": Operation(_op_semidirect_leibniz, (), (("leibniz", None),)),
    "semidirect-apl": Operation(_op_semidirect_apl, (), (("anti-pre-leibniz", None),)),
    "induced-split": Operation(_op_induced_split, ("anti-O",)),
    "compatible-split": Operation(_op_compatible_split, ("anti-O",), (("anti-pre-leibniz", None),)),
    "perm-to-leibniz": Operation(_op_perm_to_leibniz, ("perm", "operator"), (("leibniz", None),)),
    "minus2-transform": Operation(_op_minus2),
    "plus2-transform": Operation(_op_plus2),
    "transformed-from-pre": Operation(_op_transformed_from_pre),
    "pre-from-transformed": Operation(_op_pre_from_transformed),
    "double-structures-apl": Operation(
        _op_double_apl,
        ("anti-pre-leibniz",),
        (("leibniz", ("circ1d",)), ("leibniz", ("circ2d",))),
    ),
    "double-structures-pre": Operation(
        _op_double_pre,
        ("pre-leibniz",),
        (("leibniz", ("bullet1d",)), ("leibniz", ("bullet2d",))),
    ),
    "omega-p": Operation(_op_omega_p, ("anti-pre-leibniz",), (("two-cocycle", None),)),
    "gd-from-novikov-di": Operation(_op_gd_from_novikov_di, ("novikov-dialgebra",), (("gd-dialgebra", None),)),
    "gd-from-averaging": Operation(
        _op_gd_from_averaging, ("gd-algebra", "averaging"), (("gd-dialgebra", None),)
    ),
    "derivation-product": Operation(
        _op_derivation_product, ("gd-dialgebra", "derivation"), (("leibniz", None),)
    ),
    "split-from-omega-p": Operation(_op_split_from_omega_p, ("two-cocycle",), (("anti-pre-leibniz", None),)),
}


def cmd_construct(args: argparse.Namespace, settings: Settings) -> Report:
    op = OPERATIONS.get(args.op)
    if op is None:
        raise UsageError(f"unknown construction {args.op!r}")
    bundle = load_bundle(args.input)
    verdicts = [
        Verdict(name=f"pre:{name}", holds=None if args.force else True, skipped=args.force)
        for name in op.preconditions
    ]
    try:
        result = op.build(bundle, args)
    except PreconditionFailed as e:
        failed = Verdict(name="pre:failed", holds=False, detail=str(e))
        if e.report is not None:
            failed = verdict_from(e.report, f"pre:{e.report.system}")
            failed.detail = str(e)
        return Report(command=[], verdicts=[failed], error=str(e), exit_code=EXIT_VIOLATED)

    for system, products in op.postconditions:
        report = check_system(registry(system), result, products=products, debug=settings.debug)
        label = f"post:{system}" + (f"[{','.join(products)}]" if products else "")
        verdicts.append(verdict_from(report, label))

    report = Report(
        command=[],
        verdicts=verdicts,
        data={"op": args.op, "seed": settings.seed, "forced": args.force},
        exit_code=EXIT_OK if all(v.holds is not False for v in verdicts) else EXIT_VIOLATED,
    )
    if args.output:
        save_bundle(result, args.output)
        report.output = str(args.output)
    else:
        report.data["bundle"] = document_from_bundle(result).model_dump(mode="json")
    return report


# -- verify-theorem ------------------------------------------------------------


def cmd_verify_theorem(args: argparse.Namespace, settings: Settings) -> Report:
    verdicts = run_suite(args.suite, settings)
    failures = sum(1 for v in verdicts if not v.holds)
    return Report(
        command=[],
        verdicts=verdicts,
        data={"suite": args.suite, "seed": settings.seed, "samples": settings.samples, "failures": failures},
        exit_code=EXIT_OK if failures == 0 else EXIT_VIOLATED,
    )


# -- catalog -------------------------------------------------------------------


def cmd_catalog(args: argparse.Namespace, settings: Settings) -> Report | str:
    if args.action == "emit":
        if not args.name:
            raise UsageError("catalog emit needs a fixture name")
        return fixture_source(args.name)
    entries = []
    for name in fixture_names():
        f = fixture(name)
        entries.append({"name": name, "dim": f.bundle.dim, "provenance": f.provenance})
    return Report(command=[], data={"fixtures": entries})


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="leibsplit", description="Identity checks and constructions for Leibniz-type algebras")
    parser.add_argument("--debug", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    check = sub.add_parser("check", help="run an identity system on a bundle")
    check.add_argument("--system", required=True, help=f"registry name or {AFFINIZED}")
    check.add_argument("--input", required=True)
    check.add_argument("--products", help="comma-separated product names bound to the system slots")
    check.add_argument("--form")
    check.add_argument("--map")
    check.set_defaults(handler=cmd_check)

    construct = sub.add_parser("construct", help="build a new bundle from an input bundle")
    construct.add_argument("--op", required=True, choices=sorted(OPERATIONS))
    construct.add_argument("--input", required=True)
    construct.add_argument("--output")
    construct.add_argument("--force", action="store_true", help="skip precondition checks")
    construct.add_argument("--seed", type=int)
    construct.add_argument("--rep", choices=REP_KINDS)
    construct.add_argument("--map", help="operator name (default T or P)")
    construct.add_argument("--form", help="form name (default omega)")
    construct.add_argument("--mode", choices=[m.value for m in OperatorMode], default=OperatorMode.DERIVATION.value)
    construct.set_defaults(handler=cmd_construct)

    verify = sub.add_parser("verify-theorem", help="run a bundled property suite")
    verify.add_argument("suite", help=", ".join(suite_names()))
    verify.add_argument("--seed", type=int)
    verify.add_argument("--samples", type=int)
    verify.set_defaults(handler=cmd_verify_theorem)

    catalog = sub.add_parser("catalog", help="list or emit cataloged fixtures")
    catalog.add_argument("action", choices=["list", "emit"])
    catalog.add_argument("name", nargs="?")
    catalog.set_defaults(handler=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        settings = Settings.from_env(
            seed=getattr(args, "seed", None),
            samples=getattr(args, "samples", None),
            debug=args.debug,
        )
        if settings.debug:
            logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
        result = args.handler(args, settings)
    except (LeibsplitError, OSError, ValidationError) as e:
        result = Report(command=[], error=f"{type(e).__name__}: {e}", exit_code=EXIT_ERROR)

    if isinstance(result, str):
        sys.stdout.write(result if result.endswith("\n") else result + "\n")
        return EXIT_OK
    result.command = argv
    sys.stdout.write(result.model_dump_json(indent=2, exclude_none=True) + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
