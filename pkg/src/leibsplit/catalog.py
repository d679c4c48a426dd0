"""Frozen fixture algebras shipped with the package."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib.resources import files

from pydantic import TypeAdapter

from leibsplit.algebra import AlgebraBundle
from leibsplit.codec import parse_bundle
from leibsplit.errors import UnknownFixture
from leibsplit.identities import CheckReport, check_system
from leibsplit.registry import registry, system_names
from leibsplit.types import ClaimModel, FixtureMeta

# A claim on this system name stands for every registered system.
ALL_SYSTEMS = "*"

_index_adapter = TypeAdapter(list[FixtureMeta])


@dataclass(frozen=True)
class Fixture:
    name: str
    bundle: AlgebraBundle
    provenance: str
    passes: list[ClaimModel] = field(default_factory=list)
    fails: list[ClaimModel] = field(default_factory=list)
    source: str = ""

    def expanded_claims(self) -> list[tuple[ClaimModel, bool]]:
        """Each documented claim paired with the verdict it asserts, wildcards expanded."""
        claims: list[tuple[ClaimModel, bool]] = []
        for expected, group in ((True, self.passes), (False, self.fails)):
            for claim in group:
                if claim.system == ALL_SYSTEMS:
                    claims.extend((claim.model_copy(update={"system": name}), expected) for name in system_names())
                else:
                    claims.append((claim, expected))
        return claims


def _fixture_dir():
    return files("leibsplit").joinpath("fixtures")


@lru_cache(maxsize=1)
def _index() -> dict[str, FixtureMeta]:
    raw = _fixture_dir().joinpath("index.json").read_text(encoding="utf-8")
    return {meta.name: meta for meta in _index_adapter.validate_python(json.loads(raw))}


def fixture_names() -> list[str]:
    return list(_index())


def fixture_source(name: str) -> str:
    """Raw JSON text of a fixture, exactly as shipped."""
    meta = _meta(name)
    return _fixture_dir().joinpath(meta.file).read_text(encoding="utf-8")


def _meta(name: str) -> FixtureMeta:
    try:
        return _index()[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}") from None


@lru_cache(maxsize=None)
def fixture(name: str) -> Fixture:
    """Load a cataloged fixture through the same parser the CLI uses."""
    meta = _meta(name)
    source = fixture_source(name)
    return Fixture(
        name=meta.name,
        bundle=parse_bundle(source),
        provenance=meta.provenance,
        passes=list(meta.passes),
        fails=list(meta.fails),
        source=source,
    )


def check_claim(bundle: AlgebraBundle, claim: ClaimModel, debug: bool = False) -> CheckReport:
    return check_system(
        registry(claim.system),
        bundle,
        products=claim.products,
        forms=[claim.form] if claim.form else None,
        maps=[claim.map] if claim.map else None,
        debug=debug,
    )
