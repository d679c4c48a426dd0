"""leibsplit: exact identity checks and splitting constructions for Leibniz algebras."""

from leibsplit.algebra import AlgebraBundle, BilinearForm, LinearEndo, MultTable, RepBundle, SplitPair
from leibsplit.catalog import fixture, fixture_names
from leibsplit.codec import dump_bundle, load_bundle, parse_bundle
from leibsplit.identities import CheckReport, check_system
from leibsplit.registry import registry, system_names
from leibsplit.theorems import run_suite, suite_names

__all__ = [
    "AlgebraBundle",
    "BilinearForm",
    "CheckReport",
    "LinearEndo",
    "MultTable",
    "RepBundle",
    "SplitPair",
    "check_system",
    "dump_bundle",
    "fixture",
    "fixture_names",
    "load_bundle",
    "parse_bundle",
    "registry",
    "run_suite",
    "suite_names",
    "system_names",
]
__version__ = "0.1.0"
