"""Tests for the leibsplit command line."""

import json

from leibsplit.catalog import fixture, fixture_source
from leibsplit.cli import main
from leibsplit.codec import load_bundle, parse_bundle


def write_fixture(tmp_path, name: str) -> str:
    path = tmp_path / f"{name}.json"
    path.write_text(fixture_source(name))
    return str(path)


def write_document(tmp_path, name: str, document: dict) -> str:
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(document))
    return str(path)


def run(capsys, *argv: str) -> tuple[int, dict]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_holds(tmp_path, capsys):
    code, report = run(capsys, "check", "--system", "leibniz", "--input", write_fixture(tmp_path, "leib2"))
    assert code == 0
    assert report["exit_code"] == 0
    assert report["verdicts"][0]["holds"] is True
    assert report["command"][0] == "check"


def test_check_violation_reports_counterexample(tmp_path, capsys):
    code, report = run(
        capsys, "check", "--system", "leibniz", "--input", write_fixture(tmp_path, "leib2-mutated")
    )
    assert code == 2
    counterexample = report["verdicts"][0]["counterexample"]
    assert counterexample["basis"] == [0, 0, 0]
    assert counterexample["defect"] == ["-1", "0"]
    assert counterexample["equation"] == "leibniz"


def test_check_binds_products_and_map(tmp_path, capsys):
    path = write_fixture(tmp_path, "perm4")
    code, _ = run(capsys, "check", "--system", "averaging", "--input", path, "--products", "star", "--map", "Q")
    assert code == 0
    code, _ = run(capsys, "check", "--system", "derivation", "--input", path, "--products", "star", "--map", "Q")
    assert code == 2


def test_check_affinized(tmp_path, capsys):
    code, report = run(
        capsys, "check", "--system", "affinized-leibniz", "--input", write_fixture(tmp_path, "gd-der2")
    )
    assert code == 0
    assert report["verdicts"][0]["name"] == "affinized-leibniz"


def test_check_affinized_failure_reports_degrees(tmp_path, capsys):
    doc = {
        "dim": 1,
        "products": {"circ": [], "vdash": [{"i": 0, "j": 0, "k": 0, "c": "1"}], "dashv": []},
    }
    code, report = run(capsys, "check", "--system", "affinized-leibniz", "--input", write_document(tmp_path, "nd", doc))
    assert code == 2
    assert len(report["verdicts"][0]["counterexample"]["degrees"]) == 3


def test_check_affinized_needs_three_products(tmp_path, capsys):
    code, report = run(
        capsys,
        "check", "--system", "affinized-leibniz", "--input", write_fixture(tmp_path, "gd-nov1"),
        "--products", "circ,vdash",
    )
    assert code == 1
    assert "UsageError" in report["error"]


def test_unknown_system_is_operational_error(tmp_path, capsys):
    code, report = run(capsys, "check", "--system", "jordan", "--input", write_fixture(tmp_path, "leib2"))
    assert code == 1
    assert "UnknownSystem" in report["error"]


def test_missing_input_file(tmp_path, capsys):
    code, report = run(capsys, "check", "--system", "leibniz", "--input", str(tmp_path / "absent.json"))
    assert code == 1
    assert report["error"]


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{\"dim\": 2, \"products\": {\"circ\": [{\"i\": 5}]}}")
    code, report = run(capsys, "check", "--system", "leibniz", "--input", str(path))
    assert code == 1
    assert "ParseError" in report["error"]


def test_bad_arguments(capsys):
    code, report = run(capsys, "check", "--input", "x.json")
    assert code == 1
    assert "UsageError" in report["error"]


def test_construct_embeds_bundle(tmp_path, capsys):
    code, report = run(capsys, "construct", "--op", "minus2-transform", "--input", write_fixture(tmp_path, "nov1"))
    assert code == 0
    bundle = report["data"]["bundle"]
    assert bundle["products"]["succ"] == [{"i": 0, "j": 0, "k": 0, "c": "3"}]
    assert bundle["products"]["prec"] == [{"i": 0, "j": 0, "k": 0, "c": "-3"}]


def test_construct_writes_output(tmp_path, capsys):
    output = tmp_path / "split.json"
    code, report = run(
        capsys,
        "construct", "--op", "levi-civita-from-cocycle",
        "--input", write_fixture(tmp_path, "omega2-on-leib2"),
        "--output", str(output),
    )
    assert code == 0
    assert report["output"] == str(output)
    names = [v["name"] for v in report["verdicts"]]
    assert names == ["pre:two-cocycle", "post:anti-pre-leibniz", "post:apl-invariance"]
    assert all(v["holds"] for v in report["verdicts"])
    split = load_bundle(output)
    assert set(split.products) == {"succ", "prec"}


def test_construct_precondition_failure(tmp_path, capsys):
    lie2 = json.loads(fixture_source("lie2"))
    lie2["forms"] = {"omega": [["0", "1"], ["-1", "0"]]}
    path = write_document(tmp_path, "lie2-omega", lie2)
    code, report = run(capsys, "construct", "--op", "levi-civita-from-cocycle", "--input", path)
    assert code == 2
    assert report["verdicts"][0]["name"] == "pre:two-cocycle"
    assert report["verdicts"][0]["holds"] is False
    assert report["verdicts"][0]["counterexample"] is not None


def test_construct_force_skips_preconditions(tmp_path, capsys):
    lie2 = json.loads(fixture_source("lie2"))
    lie2["forms"] = {"omega": [["0", "1"], ["-1", "0"]]}
    path = write_document(tmp_path, "lie2-omega", lie2)
    _, report = run(capsys, "construct", "--op", "levi-civita-from-cocycle", "--input", path, "--force")
    assert report["verdicts"][0] == {"name": "pre:two-cocycle", "skipped": True}
    assert report["data"]["forced"] is True


def test_construct_double_structures(tmp_path, capsys):
    code, report = run(capsys, "construct", "--op", "double-structures-apl", "--input", write_fixture(tmp_path, "apl1"))
    assert code == 0
    assert set(report["data"]["bundle"]["products"]) == {"circ1d", "circ2d"}


def test_construct_omega_p(tmp_path, capsys):
    code, report = run(capsys, "construct", "--op", "omega-p", "--input", write_fixture(tmp_path, "apl1"))
    assert code == 0
    bundle = parse_bundle(json.dumps(report["data"]["bundle"]))
    assert bundle == fixture("omega-p-on-apl1").bundle


def test_construct_perm_to_leibniz_modes(tmp_path, capsys):
    path = write_fixture(tmp_path, "perm4")
    code, _ = run(capsys, "construct", "--op", "perm-to-leibniz", "--input", path)
    assert code == 0
    code, _ = run(capsys, "construct", "--op", "perm-to-leibniz", "--input", path, "--map", "Q", "--mode", "averaging")
    assert code == 0
    code, _ = run(capsys, "construct", "--op", "perm-to-leibniz", "--input", path, "--map", "Q")
    assert code == 2


def test_construct_semidirect_with_rep(tmp_path, capsys):
    path = write_fixture(tmp_path, "apl1")
    for rep in ("adjoint", "coadjoint", "split", "dual-split"):
        code, report = run(capsys, "construct", "--op", "semidirect-leibniz", "--input", path, "--rep", rep)
        assert code == 0, rep
        assert report["data"]["bundle"]["dim"] == 2


def test_construct_unknown_op(tmp_path, capsys):
    code, _ = run(capsys, "construct", "--op", "tensor", "--input", write_fixture(tmp_path, "leib2"))
    assert code == 1


def test_verify_theorem(capsys):
    code, report = run(capsys, "verify-theorem", "prop-3-6", "--samples", "2", "--seed", "5")
    assert code == 0
    assert report["data"] == {"suite": "prop-3-6", "seed": 5, "samples": 2, "failures": 0}


def test_verify_theorem_seed_from_env(monkeypatch, capsys):
    monkeypatch.setenv("LEIBSPLIT_SEED", "77")
    _, report = run(capsys, "verify-theorem", "prop-3-5", "--samples", "1")
    assert report["data"]["seed"] == 77


def test_malformed_env_seed_is_a_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("LEIBSPLIT_SEED", "abc")
    code, report = run(capsys, "verify-theorem", "thm-2-12", "--samples", "1")
    assert code == 1
    assert "UsageError" in report["error"]
    assert "'abc'" in report["error"]
    # an explicit --seed wins over the environment
    code, report = run(capsys, "verify-theorem", "thm-2-12", "--samples", "1", "--seed", "3")
    assert code == 0
    assert report["data"]["seed"] == 3


def test_verify_unknown_theorem(capsys):
    code, report = run(capsys, "verify-theorem", "thm-9-9")
    assert code == 1
    assert "UnknownSuite" in report["error"]


def test_catalog_list(capsys):
    code, report = run(capsys, "catalog", "list")
    assert code == 0
    names = {entry["name"] for entry in report["data"]["fixtures"]}
    assert {"leib2", "apl1", "gd-der2"} <= names


def test_catalog_emit(capsys):
    code = main(["catalog", "emit", "leib2"])
    out = capsys.readouterr().out
    assert code == 0
    assert parse_bundle(out) == fixture("leib2").bundle


def test_catalog_emit_needs_name(capsys):
    code, _ = run(capsys, "catalog", "emit")
    assert code == 1


def test_debug_logs_to_stderr(tmp_path, capsys):
    code = main(["--debug", "check", "--system", "leibniz", "--input", write_fixture(tmp_path, "leib2")])
    captured = capsys.readouterr()
    assert code == 0
    assert json.loads(captured.out)["verdicts"][0]["holds"] is True
