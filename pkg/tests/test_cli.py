import json

import pytest

from quadrics.cli import main

EXAMPLE_CONFIG = {
    "family": [1, 2, 2],
    "components": [
        "z0^2",
        "z1^2 + z0*z1 + z0*z2 + (1/25)*z1*z2",
        "z2^2 + 50*z0*z1 - 10*z0*z2 + 9*z1*z2",
    ],
}

TRIPLE_CONFIG = {
    "family": [2, 2, 2],
    "components": [
        "z0^2 - 4*z0*z1 - 3*z0*z2 - 2*z1^2 + 4*z1*z2 + 2*z2^2",
        "-3*z0^2 + 4*z0*z1 - z0*z2 + z1^2 - 4*z1*z2 - 4*z2^2",
        "-3*z0^2 - 3*z0*z1 - z0*z2 + 2*z1^2 - 3*z1*z2 + 2*z2^2",
    ],
}


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def _run(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(["--timestamp", "T", "--json-out", str(out)] + args)
    doc = json.loads(out.read_text()) if out.exists() else None
    return code, doc


def test_check_config_example_exit_zero(tmp_path):
    cfg = _write(tmp_path, "cfg.json", EXAMPLE_CONFIG)
    code, doc = _run(["check-config", cfg], tmp_path)
    assert code == 0
    assert doc["report"]["passed"] is True
    conds = doc["report"]["genericity"]["conditions"]
    assert conds["s4.1"]["verdict"] == "pass"
    assert conds["s4.2"]["verdict"] == "pass"
    assert doc["manifest"]["version"]
    assert doc["manifest"]["input_digest"] != "-"


def test_check_config_duplicate_component_exit_one(tmp_path):
    bad = {"family": [2, 2, 2],
           "components": ["z0^2 - z1*z2", "z0^2 - z1*z2", "z1^2 - z0*z2"]}
    cfg = _write(tmp_path, "bad.json", bad)
    code, doc = _run(["check-config", cfg], tmp_path)
    assert code == 1
    assert doc["report"]["genericity"]["conditions"]["s4.2"]["verdict"] == "fail"


def test_check_config_parse_error_exit_two(tmp_path):
    cfg = tmp_path / "broken.json"
    cfg.write_text("{not json")
    code, _ = _run(["check-config", str(cfg)], tmp_path)
    assert code == 2
    cfg2 = _write(tmp_path, "badpoly.json",
                  {"family": [2], "components": ["z0^2 + z1"]})
    code2, _ = _run(["check-config", cfg2], tmp_path)
    assert code2 == 2


def test_check_config_triple_emits_line_system(tmp_path):
    cfg = _write(tmp_path, "triple.json", TRIPLE_CONFIG)
    code, doc = _run(["check-config", cfg], tmp_path)
    assert code == 0
    groups = doc["report"]["line_system"]["groups"]
    assert {k: len(v) for k, v in groups.items()} == {
        "L12": 6, "L13": 6, "L23": 6}


def test_lines_subcommand(tmp_path):
    cfg = _write(tmp_path, "triple.json", TRIPLE_CONFIG)
    code, doc = _run(["lines", cfg], tmp_path)
    assert code == 0
    assert len(doc["report"]["selected_12"]) == 12
    assert doc["report"]["genericity"]["conditions"]["s6.4"]["verdict"] == "pass"


def test_square_subcommand(tmp_path):
    cfg = _write(tmp_path, "cfg.json", EXAMPLE_CONFIG)
    code, doc = _run(["square", cfg], tmp_path)
    assert code == 0
    combos = doc["report"]["square_combinations"]
    assert any(s["coefficients"] == ["225", "100", "4"] for s in combos)
    target = next(s for s in combos if s["coefficients"] == ["225", "100", "4"])
    assert target["root_form"] == "15*z0 + 10*z1 + 2*z2"


def test_nevanlinna_subcommand(tmp_path):
    curve = _write(tmp_path, "curve.json", {"exponents": [["0"], ["0", "1"]]})
    code, doc = _run(["nevanlinna", curve, "--divisor", "z1 - z0",
                      "--radii", "logspace:1:3:10", "--order", "--defect",
                      "--main-theorem", "first"], tmp_path)
    assert code == 0
    rep = doc["report"]
    assert abs(rep["order"]["value"] - 1.0) < 0.05
    assert rep["main_theorem"]["passed"]
    assert abs(rep["defects"][0]["defect"]) < 0.05


def test_nevanlinna_degenerate_exit_four(tmp_path):
    curve = _write(tmp_path, "curve.json",
                   {"exponents": [["0"], ["0", "1"], ["0", "2"]]})
    code, doc = _run(["nevanlinna", curve, "--divisor", "z1^2 - z0*z2",
                      "--radii", "10,20"], tmp_path)
    assert code == 4


def test_nevanlinna_parse_error(tmp_path):
    curve = tmp_path / "nope.json"
    curve.write_text("[")
    code, _ = _run(["nevanlinna", str(curve), "--radii", "10"], tmp_path)
    assert code == 2


def test_demo_three_quadrics(tmp_path):
    code, doc = _run(["demo-three-quadrics", "--alphas", "0,1,2",
                      "--quadrature-check"], tmp_path)
    assert code == 0
    rep = doc["report"]
    assert rep["contradiction"] is True
    assert rep["lhs_9X"] > rep["rhs_8X"]
    code2, doc2 = _run(["demo-three-quadrics", "--alphas", "1+1i,1+1i,1+1i"],
                       tmp_path, "out2.json")
    assert doc2["report"]["contradiction"] is False


def test_reports_byte_identical(tmp_path):
    cfg = _write(tmp_path, "cfg.json", EXAMPLE_CONFIG)
    _, _ = _run(["check-config", cfg], tmp_path, "a.json")
    _, _ = _run(["check-config", cfg], tmp_path, "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_reports_validate_against_schema(tmp_path):
    import jsonschema
    from pathlib import Path
    import quadrics

    schema = json.loads(
        (Path(quadrics.__file__).parent / "report_schema.json").read_text())
    cfg = _write(tmp_path, "cfg.json", EXAMPLE_CONFIG)
    triple = _write(tmp_path, "triple.json", TRIPLE_CONFIG)
    curve = _write(tmp_path, "curve.json", {"exponents": [["0"], ["0", "1"]]})
    runs = [
        (["check-config", cfg], "r1.json"),
        (["lines", triple], "r2.json"),
        (["square", cfg], "r3.json"),
        (["nevanlinna", curve, "--divisor", "z1 - z0", "--radii", "10,20"], "r4.json"),
        (["demo-three-quadrics", "--alphas", "0,1,2"], "r5.json"),
    ]
    for args, name in runs:
        _, doc = _run(args, tmp_path, name)
        jsonschema.validate(doc, schema)
