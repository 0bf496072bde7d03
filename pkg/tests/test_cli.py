"""End-to-end tests of the command-line interface."""

import json
import math
import os

import pytest

from cauchyjump.cli import run

CIRCLE = '{"kind": "circle", "center": [0, 0], "radius": 1}'
SEGMENT = '{"kind": "segment", "a": [-1, 0], "b": [1, 0]}'


def invoke(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def invoke_json(capsys, argv):
    code, out, err = invoke(capsys, argv)
    assert code == 0, err
    return json.loads(out)


def test_pv_unit_density_reports_i_pi(capsys):
    rep = invoke_json(capsys, [
        "pv", "--contour", CIRCLE, "--density", "one", "--tau0", "0.25"])
    assert rep["command"] == "pv"
    value = rep["results"]["value"]
    assert abs(value[0]) < 1e-12
    assert abs(value[1] - math.pi) < 1e-12
    assert rep["results"]["error_estimate"] == 0.0


def test_report_envelope_fields(capsys):
    rep = invoke_json(capsys, [
        "pv", "--contour", CIRCLE, "--density", "one", "--tau0", "0.25"])
    for key in ("command", "inputs", "results", "version", "wall_time_s"):
        assert key in rep


def test_reports_are_deterministic_modulo_wall_time(capsys):
    argv = ["eval", "--contour", CIRCLE, "--density", "re(t)",
            "--z", "0.5,0", "--z", "2,0"]
    rep1 = invoke_json(capsys, argv)
    rep2 = invoke_json(capsys, argv)
    rep1.pop("wall_time_s")
    rep2.pop("wall_time_s")
    assert json.dumps(rep1, sort_keys=True) == json.dumps(rep2, sort_keys=True)


def test_eval_interior_value(capsys):
    rep = invoke_json(capsys, [
        "eval", "--contour", CIRCLE, "--density", "re(t)", "--z", "0.5,0"])
    row = rep["results"]["rows"][0]
    assert abs(row["value"][0] - 0.25) < 1e-10
    assert row["z"] == [0.5, 0.0]


def test_jump_triple_and_identity(capsys):
    rep = invoke_json(capsys, [
        "jump", "--contour", CIRCLE, "--density", "re(t)", "--t0", "0"])
    row = rep["results"]["rows"][0]
    assert abs(row["plus"][0] - 0.5) < 1e-9
    assert abs(row["minus"][0] + 0.5) < 1e-9
    assert rep["results"]["max_jump_deviation"] < 1e-8


def test_bvp_witness_at_two(capsys):
    rep = invoke_json(capsys, [
        "bvp", "--contour", CIRCLE, "--u", "1/t"])
    res = rep["results"]
    assert res["solvable"] is False
    witness = res["witness"]
    assert abs(witness["probe"][0] - 2.0) < 1e-9
    assert abs(witness["probe"][1]) < 1e-9
    assert abs(witness["modulus"] - 0.5) < 1e-9


def test_bvp_solvable_case(capsys):
    rep = invoke_json(capsys, [
        "bvp", "--contour", CIRCLE, "--u", "t^2"])
    res = rep["results"]
    assert res["solvable"] is True
    assert res["boundary_residual"] <= 1e-8


def test_faber_disk_exact_rationals(capsys):
    rep = invoke_json(capsys, ["faber", "--map", "disk:2", "--n", "3"])
    polys = rep["results"]["basis"]
    assert polys == [[1], [0, "1/2"], [0, 0, "1/4"], [0, 0, 0, "1/8"]]


def test_faber_quadrature_route(capsys):
    rep = invoke_json(capsys, [
        "faber", "--map", "segment:2", "--n", "2", "--route", "quadrature"])
    polys = rep["results"]["basis"]
    last = polys[2]
    assert abs(last[0][0] + 2.0) < 1e-8
    assert abs(last[2][0] - 1.0) < 1e-8
    assert rep["results"]["source"] == "quadrature"


def test_faber_series_coefficients(capsys):
    rep = invoke_json(capsys, [
        "faber-series", "--map", "disk:2", "--f", "z", "--n", "3"])
    coeffs = rep["results"]["coefficients"]
    assert abs(coeffs[1][0] - 2.0) < 1e-10
    assert rep["results"]["max_error"] < 1e-9


def test_faber_series_rejects_non_analytic_expression(capsys):
    code, out, err = invoke(capsys, [
        "faber-series", "--map", "disk:2", "--f", "re(z)", "--n", "3"])
    assert code == 2
    assert "holomorphic" in err


def test_holder_certify_and_estimate(capsys):
    rep = invoke_json(capsys, [
        "holder", "--contour", SEGMENT, "--density", "sqrt_pullback",
        "--index", "0.5", "--constant", "1.0"])
    assert rep["results"]["pass"] is True

    rep2 = invoke_json(capsys, [
        "holder", "--contour", SEGMENT, "--density", "sqrt_pullback"])
    assert 0.45 <= rep2["results"]["index"] <= 0.55


def test_holder_constant_without_index_rejected(capsys):
    code, out, err = invoke(capsys, [
        "holder", "--contour", SEGMENT, "--density", "one", "--constant", "2.0"])
    assert code == 2


def test_series_inf_re_tau(capsys):
    rep = invoke_json(capsys, [
        "series-inf", "--contour", CIRCLE, "--density", "re(t)", "--n", "3"])
    rows = rep["results"]["coefficients"]
    assert rows[0]["n"] == 1
    assert abs(rows[0]["a"][0] + 0.5) < 1e-10
    assert abs(rows[1]["a"][0]) < 1e-10


def test_verify_cif_kind_two(capsys):
    rep = invoke_json(capsys, [
        "verify-cif", "--contour", CIRCLE, "--f", "1/z", "--kind", "2",
        "--f-inf", "0,0", "--probe", "2,0", "--probe", "0.5,0.1"])
    assert rep["results"]["max_deviation"] < 1e-9


def test_verify_cif_requires_probes(capsys):
    code, out, err = invoke(capsys, [
        "verify-cif", "--contour", CIRCLE, "--f", "z", "--kind", "1"])
    assert code == 2


def test_convergence_csv_shape(capsys):
    code, out, err = invoke(capsys, [
        "convergence", "--target", "pv", "--contour", CIRCLE,
        "--density", "re(t)", "--tau0", "0.25", "--schedule", "32,64,128"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "N,value_re,value_im,error_estimate"
    assert len(lines) == 4
    for line in lines[1:]:
        parts = line.split(",")
        assert len(parts) == 4
        int(parts[0])
        float(parts[3])


def test_convergence_error_decays_with_nodes(capsys):
    code, out, err = invoke(capsys, [
        "convergence", "--target", "eval", "--contour", CIRCLE,
        "--density", "one", "--z", "0.9,0", "--schedule", "32,64,128"])
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    errs = [float(r[3]) for r in rows]
    assert errs[0] / errs[1] >= 10.0
    assert errs[1] / errs[2] >= 10.0


def test_convergence_writes_csv_and_plot(tmp_path, capsys):
    csv_file = tmp_path / "table.csv"
    png_file = tmp_path / "plot.png"
    code, out, err = invoke(capsys, [
        "convergence", "--target", "length", "--contour", CIRCLE,
        "--schedule", "16,32", "--csv", str(csv_file), "--plot", str(png_file)])
    assert code == 0
    assert csv_file.read_text().startswith("N,value_re,value_im,error_estimate")
    assert png_file.stat().st_size > 0


def test_convergence_schedule_must_increase(capsys):
    code, out, err = invoke(capsys, [
        "convergence", "--target", "pv", "--contour", CIRCLE,
        "--density", "one", "--tau0", "0.25", "--schedule", "64,32"])
    assert code == 2


def test_exit_code_2_on_bad_json(capsys):
    code, out, err = invoke(capsys, [
        "pv", "--contour", '{"kind": "circle",', "--density", "one",
        "--tau0", "0.25"])
    assert code == 2
    assert "line" in err


def test_exit_code_2_on_unknown_expression_name(capsys):
    code, out, err = invoke(capsys, [
        "eval", "--contour", CIRCLE, "--density", "frobnicate(t)",
        "--z", "0.5,0"])
    assert code == 2


def test_exit_code_3_on_singular_density(capsys):
    code, out, err = invoke(capsys, [
        "pv", "--contour", SEGMENT, "--density", "1/(t)", "--tau0", "0.5"])
    assert code == 3


def test_env_var_sets_default_nodes(capsys, monkeypatch):
    monkeypatch.setenv("CAUCHY_JUMP_NODES", "64")
    rep = invoke_json(capsys, [
        "pv", "--contour", CIRCLE, "--density", "re(t)", "--tau0", "0.25"])
    assert rep["results"]["nodes_used"] == 64
    # an explicit flag still wins
    rep2 = invoke_json(capsys, [
        "pv", "--contour", CIRCLE, "--density", "re(t)", "--tau0", "0.25",
        "--nodes", "128"])
    assert rep2["results"]["nodes_used"] == 128


def test_table_format_renders_eight_digits(capsys):
    code, out, err = invoke(capsys, [
        "eval", "--contour", CIRCLE, "--density", "re(t)", "--z", "0.5,0",
        "--format", "table"])
    assert code == 0
    assert "0.25" in out
    assert "{" not in out


def test_contour_from_file(tmp_path, capsys):
    path = tmp_path / "circle.json"
    path.write_text(CIRCLE)
    rep = invoke_json(capsys, [
        "pv", "--contour", str(path), "--density", "one", "--tau0", "0.5"])
    assert abs(rep["results"]["value"][1] - math.pi) < 1e-12


def test_density_from_csv(tmp_path, capsys):
    path = tmp_path / "dens.csv"
    rows = ["t,re,im"]
    for k in range(65):
        t = k / 64.0
        rows.append(f"{t},{math.cos(2 * math.pi * t)},0.0")
    path.write_text("\n".join(rows) + "\n")
    rep = invoke_json(capsys, [
        "eval", "--contour", CIRCLE, "--density", f"csv:{path}",
        "--z", "0.5,0"])
    # tabulated Re(tau) interpolates the residue oracle value z/2
    assert abs(rep["results"]["rows"][0]["value"][0] - 0.25) < 1e-3


def test_unknown_subcommand_exits_2(capsys):
    assert run(["frobnicate"]) == 2


def test_float_formatting_fifteen_digits(capsys):
    rep = invoke_json(capsys, [
        "pv", "--contour", CIRCLE, "--density", "one", "--tau0", "0.25"])
    # round-trip through repr must not exceed 15 significant digits
    text = json.dumps(rep["results"]["value"][1])
    mantissa = text.replace(".", "").replace("-", "").lstrip("0")
    assert len(mantissa) <= 15
