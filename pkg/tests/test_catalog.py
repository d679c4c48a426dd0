"""Tests for the shipped fixture catalog."""

import json

import pytest
from leibsplit.catalog import ALL_SYSTEMS, check_claim, fixture, fixture_names, fixture_source
from leibsplit.codec import parse_bundle
from leibsplit.errors import UnknownFixture
from leibsplit.registry import system_names
from leibsplit.types import ClaimModel

EXPECTED_FIXTURES = {
    "leib2",
    "leib2-mutated",
    "omega2-on-leib2",
    "omega-p-on-apl1",
    "lie2",
    "nov1",
    "apl1",
    "perm4",
    "qperm2",
    "gd-nov1",
    "gd-der2",
    "zero1",
    "zero2",
    "zero3",
    "zero4",
}


def test_catalog_lists_all_fixtures():
    assert EXPECTED_FIXTURES <= set(fixture_names())


def test_fixture_loads_through_parser():
    f = fixture("leib2")
    assert f.bundle.dim == 2
    assert f.provenance
    assert parse_bundle(f.source) == f.bundle
    assert json.loads(fixture_source("leib2"))["dim"] == 2


def test_fixture_is_cached():
    assert fixture("apl1") is fixture("apl1")


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("leib3")
    with pytest.raises(UnknownFixture):
        fixture_source("leib3")


@pytest.mark.parametrize("name", sorted(EXPECTED_FIXTURES))
def test_documented_claims_hold(name):
    f = fixture(name)
    claims = f.expanded_claims()
    assert claims
    for claim, expected in claims:
        report = check_claim(f.bundle, claim)
        assert report.holds is expected, f"{name}: {claim.system} expected {expected}"


def test_wildcard_claim_expands_to_every_system():
    claims = fixture("zero2").expanded_claims()
    systems = [claim.system for claim, expected in claims if expected]
    assert ALL_SYSTEMS not in systems
    assert set(system_names()) <= set(systems)


def test_check_claim_binds_map_and_form():
    perm4 = fixture("perm4").bundle
    assert check_claim(perm4, ClaimModel(system="averaging", products=["star"], map="Q")).holds
    assert not check_claim(perm4, ClaimModel(system="derivation", products=["star"], map="Q")).holds
