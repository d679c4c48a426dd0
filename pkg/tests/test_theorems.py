"""Tests for the randomized theorem suites."""

import pytest
from leibsplit.errors import UnknownSuite
from leibsplit.theorems import describe_suite, run_suite, suite_names
from leibsplit.types import Settings

SUITES = [
    "thm-2-12",
    "thm-2-14",
    "prop-2-6",
    "prop-2-9",
    "prop-2-10",
    "prop-2-11",
    "prop-2-16",
    "prop-2-22",
    "prop-2-23",
    "prop-3-3",
    "prop-3-5",
    "prop-3-6",
    "prop-3-7",
    "prop-3-9",
    "prop-3-10",
    "prop-3-13",
]


def create_test_settings(**kwargs) -> Settings:
    defaults = {"seed": 1234, "samples": 3}
    defaults.update(kwargs)
    return Settings(**defaults)


def test_all_suites_registered():
    assert set(SUITES) <= set(suite_names())
    for name in SUITES:
        assert describe_suite(name)


@pytest.mark.parametrize("name", SUITES)
def test_suite_holds(name):
    verdicts = run_suite(name, create_test_settings())
    assert verdicts
    failing = [v.name for v in verdicts if not v.holds]
    assert failing == []
    assert all(v.name.startswith(f"{name}/") for v in verdicts)


@pytest.mark.parametrize("seed", [1, 2])
def test_suites_hold_on_other_seeds(seed):
    for name in ("thm-2-12", "prop-2-22", "prop-3-7", "prop-3-13"):
        verdicts = run_suite(name, create_test_settings(seed=seed, samples=2))
        assert all(v.holds for v in verdicts)


def test_suite_is_deterministic():
    first = run_suite("prop-3-6", create_test_settings())
    second = run_suite("prop-3-6", create_test_settings())
    assert first == second


def test_zero_samples_keeps_fixture_instances():
    verdicts = run_suite("thm-2-14", create_test_settings(samples=0))
    assert verdicts
    assert all(not v.name.split("/", 1)[1].startswith("random-") for v in verdicts)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("thm-9-9")
    with pytest.raises(UnknownSuite):
        describe_suite("thm-9-9")


def test_admissible_suite_covers_constructed_and_raw_instances():
    verdicts = run_suite("prop-3-5", create_test_settings(samples=2))
    labels = {v.name.split("/", 1)[1] for v in verdicts}
    assert {"apl1", "nov1-minus2", "random-0", "apl-random-1", "raw-random-1"} <= labels
    constructed = [v for v in verdicts if v.name.split("/", 1)[1] in {"apl1", "nov1-minus2", "random-0", "random-1"}]
    assert all(v.detail == "admissible=True apl=True" for v in constructed)
