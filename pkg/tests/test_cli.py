"""Command-line interface: flags, outputs, formats, and exit codes."""

import csv
import json
import math

import pytest

from spirochain import (
    LinkProbabilities,
    coefficients,
    evaluate,
    generate,
    registry_lookup,
)
from spirochain.cli import main

UNIFORM_FLAGS = []


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_seed_chain(capsys):
    code, out, _ = run(capsys, "generate", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["links"] == ""
    assert payload["vertices"] == 11
    assert len(payload["edges"]) == 12
    assert payload["edge_profile"] == {"m22": 8, "m24": 4, "m44": 0}
    assert payload["rng"] == "philox4x64-10"


def test_generate_degenerate_probabilities(capsys):
    code, out, _ = run(
        capsys, "generate", "--n", "5",
        "--p-ortho", "1", "--p-meta", "0", "--p-para", "0",
    )
    assert code == 0
    assert json.loads(out)["links"] == "OOO"


def test_generate_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "generate", "--n", "5", "--seed", "7")
    _, second, _ = run(capsys, "generate", "--n", "5", "--seed", "7")
    assert first == second


def test_generate_validation_failures(capsys):
    code, _, err = run(capsys, "generate", "--n", "1")
    assert code == 2 and "--n" in err
    code, _, err = run(
        capsys, "generate", "--n", "4",
        "--p-ortho", "0.5", "--p-meta", "0.4", "--p-para", "0.4",
    )
    assert code == 2 and "--p-ortho" in err
    code, _, err = run(capsys, "generate", "--n", "4", "--p-meta", "0.5")
    assert code == 2


def test_compute_on_explicit_links(capsys):
    code, out, _ = run(capsys, "compute", "--index", "first-zagreb", "--links", "OMP")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"index": "first-zagreb", "n": 5, "value": 152.0, "m44": 1}

    code, out, _ = run(capsys, "compute", "--index", "second-zagreb", "--links", "")
    assert json.loads(out)["value"] == 64.0

    code, out, _ = run(capsys, "compute", "--index", "nirmala", "--links", "O")
    expected = 22 + 6 * math.sqrt(6) + 2 * math.sqrt(2)
    assert math.isclose(json.loads(out)["value"], expected, rel_tol=1e-12)


def test_compute_on_a_generated_chain(capsys):
    code, out, _ = run(capsys, "compute", "--index", "sombor", "--n", "6", "--seed", "3")
    assert code == 0
    chain = generate(6, LinkProbabilities.uniform(), 3)
    assert json.loads(out)["value"] == evaluate(registry_lookup("sombor"), chain.graph)


def test_compute_validation(capsys):
    code, _, err = run(capsys, "compute", "--index", "randic", "--links", "OMX")
    assert code == 2 and "--links" in err
    code, _, err = run(capsys, "compute", "--index", "randic")
    assert code == 2
    code, _, err = run(
        capsys, "compute", "--index", "randic", "--links", "O", "--n", "4"
    )
    assert code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["compute", "--index", "wiener", "--links", "O"])
    assert excinfo.value.code == 2


def test_analyze_fields_round_trip_exactly(capsys):
    code, out, _ = run(
        capsys, "analyze", "--index", "sombor", "--n", "100", "--p-ortho", "0.3"
    )
    assert code == 0
    payload = json.loads(out)
    spec = registry_lookup("sombor")
    c = coefficients(spec, LinkProbabilities.from_ortho(0.3))
    assert payload["B"] == c.B  # exact: JSON floats round-trip
    assert abs(payload["B"] - (6 * math.sqrt(2) - 4 * math.sqrt(5))) < 1e-12
    assert payload["alpha"] == [c.alpha_ortho, c.alpha_meta, c.alpha_para]
    assert payload["deterministic"] is False
    assert list(payload) == [
        "index", "n", "p_ortho", "p_meta", "p_para", "ti2", "alpha",
        "alpha_bar", "beta", "A", "B", "C", "mean", "variance", "deterministic",
    ]


def test_analyze_variable_index_requires_exponent(capsys):
    code, _, err = run(capsys, "analyze", "--index", "variable-sum-connectivity", "--n", "5")
    assert code == 2 and "--a" in err
    code, out, _ = run(
        capsys, "analyze", "--index", "variable-sum-connectivity", "--n", "5", "--a", "1.0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["a"] == 1.0
    assert payload["deterministic"] is True
    code, _, err = run(capsys, "analyze", "--index", "randic", "--n", "5", "--a", "2")
    assert code == 2 and "--a" in err


def test_distribution_csv(capsys):
    code, out, _ = run(
        capsys, "distribution", "--index", "second-zagreb", "--n", "4",
        "--p-ortho", "0.3333333", "--p-meta", "0.3333333", "--p-para", "0.3333334",
    )
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["k", "value", "probability"]
    assert len(rows) == 4
    assert [row[0] for row in rows[1:]] == ["0", "1", "2"]
    assert [float(row[1]) for row in rows[1:]] == [144.0, 148.0, 152.0]
    total = sum(float(row[2]) for row in rows[1:])
    assert math.isclose(total, 1.0, abs_tol=1e-9)


def test_distribution_json_and_deterministic_atom(capsys):
    code, out, _ = run(
        capsys, "distribution", "--index", "first-zagreb", "--n", "6",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows == [{"k": None, "value": 184.0, "probability": 1.0}]


def test_simulate_summary_and_artifacts(capsys, tmp_path):
    samples_path = tmp_path / "samples.csv"
    hist_path = tmp_path / "hist.csv"
    code, out, _ = run(
        capsys, "simulate", "--index", "second-zagreb", "--n", "300",
        "--reps", "400", "--seed", "5", "--standardize",
        "--samples-out", str(samples_path), "--histogram-out", str(hist_path),
        "--bins", "20",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["standardized"] is True
    assert payload["summary"]["count"] == 400
    assert abs(payload["summary"]["mean"]) < 0.3
    assert payload["normality"] is not None
    assert payload["rng"] == "philox4x64-10+splitmix64"

    values = [float(line) for line in samples_path.read_text().splitlines()]
    assert len(values) == 400
    assert math.isclose(values[0], payload["summary"]["mean"], abs_tol=10)

    rows = list(csv.reader(hist_path.read_text().splitlines()))
    assert rows[0] == ["bin_left", "bin_right", "count", "density"]
    assert sum(int(row[2]) for row in rows[1:]) == 400


def test_simulate_raw_summary_for_deterministic_index(capsys):
    code, out, _ = run(
        capsys, "simulate", "--index", "first-zagreb", "--n", "50", "--reps", "20"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["standardized"] is False
    assert payload["summary"]["mean"] == 32 * 50 - 8
    assert payload["summary"]["variance"] == 0.0
    assert payload["normality"] is None


def test_simulate_standardized_deterministic_exits_3(capsys):
    code, _, err = run(
        capsys, "simulate", "--index", "first-zagreb", "--n", "50",
        "--reps", "20", "--standardize",
    )
    assert code == 3 and "variance" in err


def test_simulate_validation(capsys):
    code, _, _ = run(capsys, "simulate", "--index", "nirmala", "--n", "5", "--reps", "0")
    assert code == 2


def test_compare_json(capsys):
    code, out, _ = run(capsys, "compare", "--n", "50", "--p-ortho", "0.5")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_ordered"] is True
    assert list(payload["expectations"]) == [
        "randic", "nirmala", "sombor", "first-zagreb", "second-zagreb"
    ]
    assert len(payload["orderings"]) == 4
    assert all(entry["holds"] for entry in payload["orderings"])


def test_compare_csv(capsys):
    code, out, _ = run(capsys, "compare", "--n", "10", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["index", "expectation", "ordered_after_previous"]
    assert len(rows) == 6
    assert rows[1][2] == "" and rows[2][2] == "True"


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "analyze", "--index", "randic", "--n", "9", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["index"] == "randic"


def test_ortho_shorthand_matches_explicit_triple(capsys):
    _, shorthand, _ = run(capsys, "analyze", "--index", "nirmala", "--n", "7",
                          "--p-ortho", "0.4")
    _, explicit, _ = run(capsys, "analyze", "--index", "nirmala", "--n", "7",
                         "--p-ortho", "0.4", "--p-meta", "0.3", "--p-para", "0.3")
    assert json.loads(shorthand) == json.loads(explicit)


def test_csv_format_rejected_where_unsupported(capsys):
    code, _, err = run(capsys, "generate", "--n", "3", "--format", "csv")
    assert code == 2 and "csv" in err
    code, _, err = run(capsys, "simulate", "--index", "nirmala", "--n", "4",
                       "--reps", "5", "--format", "csv")
    assert code == 2
