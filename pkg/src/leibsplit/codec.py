"""Reading and writing bundles in the JSON structure-constant format."""

from __future__ import annotations

from pathlib import Path

from pydantic import ValidationError

from leibsplit.algebra import AlgebraBundle, BilinearForm, LinearEndo, MultTable
from leibsplit.errors import IndexOutOfRange, ParseError
from leibsplit.linalg import Matrix
from leibsplit.types import BundleDocument, ConstantEntry
from leibsplit.utils import format_rational, parse_rational


def _square(name: str, rows: list[list[str | int]], dim: int) -> Matrix:
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ParseError(f"{name!r} must be a {dim}x{dim} matrix")
    return Matrix.of([[parse_rational(x) for x in row] for row in rows], dim)


def bundle_from_document(doc: BundleDocument) -> AlgebraBundle:
    products = {}
    for name, entries in doc.products.items():
        try:
            products[name] = MultTable.from_entries(
                doc.dim, ((e.i, e.j, e.k, parse_rational(e.c)) for e in entries)
            )
        except IndexOutOfRange as e:
            raise ParseError(f"product {name!r}: {e}") from e
    forms = {n: BilinearForm(doc.dim, _square(n, rows, doc.dim)) for n, rows in doc.forms.items()}
    maps = {n: LinearEndo(doc.dim, _square(n, rows, doc.dim)) for n, rows in doc.maps.items()}
    return AlgebraBundle(doc.dim, products=products, forms=forms, maps=maps)


def document_from_bundle(bundle: AlgebraBundle) -> BundleDocument:
    def rows(m: Matrix) -> list[list[str | int]]:
        return [[format_rational(x) for x in row] for row in m.rows]

    return BundleDocument(
        dim=bundle.dim,
        products={
            name: [ConstantEntry(i=i, j=j, k=k, c=format_rational(c)) for i, j, k, c in t.entries()]
            for name, t in bundle.products.items()
        },
        forms={name: rows(f.gram) for name, f in bundle.forms.items()},
        maps={name: rows(p.matrix) for name, p in bundle.maps.items()},
    )


def parse_bundle(text: str | bytes) -> AlgebraBundle:
    """Parse a JSON document; every malformed input surfaces as ``ParseError``."""
    try:
        doc = BundleDocument.model_validate_json(text)
    except ValidationError as e:
        raise ParseError(str(e)) from e
    return bundle_from_document(doc)


def dump_bundle(bundle: AlgebraBundle) -> str:
    return document_from_bundle(bundle).model_dump_json(indent=2)


def load_bundle(path: str | Path) -> AlgebraBundle:
    return parse_bundle(Path(path).read_bytes())


def save_bundle(bundle: AlgebraBundle, path: str | Path) -> None:
    Path(path).write_text(dump_bundle(bundle) + "\n")
