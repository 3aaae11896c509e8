import json

import pytest
from click.testing import CliRunner

from atdist import build_counterexample, serialize_adtool_xml
from atdist.cli import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def corpus_dir(tmp_path):
    for name in ("base", "order-reversed", "changed-leaf"):
        path = tmp_path / f"{name.replace('-', '_')}.xml"
        path.write_bytes(serialize_adtool_xml(build_counterexample(name)))
    return tmp_path


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_compare_identical_files(runner, corpus_dir):
    base = str(corpus_dir / "base.xml")
    result = invoke(runner, "compare", base, base)
    assert result.exit_code == 0
    assert "wsd" in result.output
    report = invoke(runner, "compare", base, base, "--output", "json")
    payload = json.loads(report.output)
    assert payload["wsd"] == 0.0
    assert all(m["absolute"] == 0.0 for m in payload["measures"].values())


def test_compare_order_reversed_no_reorder(runner, corpus_dir):
    result = invoke(
        runner, "compare", str(corpus_dir / "base.xml"), str(corpus_dir / "order_reversed.xml"),
        "--reorder", "off", "--epsilon", "1", "--provider", "exact", "--output", "json",
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["measures"]["ted"]["absolute"] == 7.0
    assert payload["config"]["epsilon"] == 1.0
    assert payload["config"]["reorder"] == "off"


def test_compare_with_reorder_min(runner, corpus_dir):
    result = invoke(
        runner, "compare", str(corpus_dir / "base.xml"), str(corpus_dir / "order_reversed.xml"),
        "--epsilon", "1", "--output", "json",
    )
    payload = json.loads(result.output)
    assert payload["measures"]["ted"]["absolute"] == 0.0
    assert payload["measures"]["ted"]["reordered"] is True


def test_config_echo_round_trips_flags(runner, corpus_dir):
    base = str(corpus_dir / "base.xml")
    result = invoke(
        runner, "compare", base, base, "--epsilon", "0.42", "--provider", "levenshtein",
        "--gamma-delta", "0.25", "--alpha", "1,0,0,0", "--reorder", "on",
        "--no-lowercase", "--output", "json",
    )
    conf = json.loads(result.output)["config"]
    assert conf == {
        "epsilon": 0.42,
        "gamma_delta": 0.25,
        "costs": {"remove": 1.0, "add": 1.0, "label_change": 1.0},
        "alpha": [1.0, 0.0, 0.0, 0.0],
        "provider": "levenshtein",
        "lowercase": False,
        "reorder": "on",
    }


def test_compare_rejects_bad_gamma(runner, corpus_dir):
    base = str(corpus_dir / "base.xml")
    result = runner.invoke(main, ["compare", base, base, "--gamma-delta", "3"])
    assert result.exit_code == 4
    assert "configuration error" in result.output


def test_compare_parse_error_exit_code(runner, tmp_path):
    bad = tmp_path / "bad.xml"
    bad.write_text("<adtree><node><label>R</label>")
    good = tmp_path / "good.xml"
    good.write_bytes(serialize_adtool_xml(build_counterexample("base")))
    result = runner.invoke(main, ["compare", str(good), str(bad)])
    assert result.exit_code == 2
    assert "parse error" in result.output


def test_compare_missing_embedding_exit_code(runner, corpus_dir, tmp_path):
    table = tmp_path / "embeddings.json"
    table.write_text(json.dumps({"dimension": 2, "embeddings": {"r": [1.0, 0.0]}}))
    result = runner.invoke(
        main,
        ["compare", str(corpus_dir / "base.xml"), str(corpus_dir / "base.xml"),
         "--provider", f"embedding:{table}"],
    )
    assert result.exit_code == 3
    assert "embedding error" in result.output


def test_embedding_path_from_environment(runner, corpus_dir, tmp_path, monkeypatch):
    labels = "rijabcd"
    vectors = {l: [1.0 if i == k else 0.0 for i in range(7)] for k, l in enumerate(labels)}
    table = tmp_path / "embeddings.json"
    table.write_text(json.dumps({"dimension": 7, "embeddings": vectors}))
    monkeypatch.setenv("ATDIST_EMBEDDINGS", str(table))
    base = str(corpus_dir / "base.xml")
    result = invoke(runner, "compare", base, base, "--provider", "embedding", "--output", "json")
    assert result.exit_code == 0
    assert json.loads(result.output)["wsd"] == 0.0


def test_emit_side_outputs(runner, corpus_dir, tmp_path):
    mapping_path = tmp_path / "mapping.json"
    script_path = tmp_path / "script.jsonl"
    radicals_path = tmp_path / "radicals.json"
    suites_path = tmp_path / "suites.json"
    result = invoke(
        runner, "compare", str(corpus_dir / "base.xml"), str(corpus_dir / "changed_leaf.xml"),
        "--epsilon", "1",
        "--emit-mapping", str(mapping_path),
        "--emit-script", str(script_path),
        "--emit-radicals", str(radicals_path),
        "--emit-suites", str(suites_path),
    )
    assert result.exit_code == 0
    mapping = json.loads(mapping_path.read_text())
    assert {"source_id", "target_id", "similarity"} <= set(mapping[0])
    script = [json.loads(line) for line in script_path.read_text().splitlines()]
    assert sum(op["cost"] for op in script) == 1.0
    assert {op["kind"] for op in script} <= {"remove", "add", "change", "match"}
    radicals = json.loads(radicals_path.read_text())
    assert len(radicals["a"]) == 3 and len(radicals["b"]) == 3
    suites = json.loads(suites_path.read_text())
    assert suites["a"] == [["A"], ["B"], ["C", "D"]]
    assert suites["b"] == [["B"], ["C", "D"], ["E"]]


def test_sweep_row_count_and_determinism(runner, corpus_dir):
    args = ["sweep", str(corpus_dir / "base.xml"), str(corpus_dir / "changed_leaf.xml"),
            "--provider", "levenshtein"]
    first = invoke(runner, *args)
    second = invoke(runner, *args)
    assert first.exit_code == 0
    lines = first.output.strip().splitlines()
    assert len(lines) == 102  # header + 101 grid points
    assert first.output == second.output


def test_sweep_identical_files_zero_columns(runner, corpus_dir):
    base = str(corpus_dir / "base.xml")
    result = invoke(runner, "sweep", base, base, "--step", "0.5")
    lines = result.output.strip().splitlines()
    header = lines[0].split(",")
    assert len(lines) == 4
    for line in lines[1:]:
        row = dict(zip(header, line.split(",")))
        for measure in ("label", "ted", "radical", "multiset"):
            assert float(row[f"{measure}_norm"]) == 0.0


def test_sweep_custom_grid(runner, corpus_dir):
    base = str(corpus_dir / "base.xml")
    result = invoke(runner, "sweep", base, base, "--start", "0", "--stop", "1", "--step", "0.5")
    rows = result.output.strip().splitlines()[1:]
    assert [r.split(",")[0] for r in rows] == ["0", "0.5", "1"]


def test_sweep_figures(runner, corpus_dir, tmp_path):
    outdir = tmp_path / "figs"
    result = invoke(
        runner, "sweep", str(corpus_dir / "base.xml"), str(corpus_dir / "changed_leaf.xml"),
        "--step", "0.25", "--figures", str(outdir),
    )
    assert result.exit_code == 0
    assert (outdir / "sweep_distances.png").stat().st_size > 0
    assert (outdir / "sweep_operations.png").stat().st_size > 0


def test_matrix_identical_files(runner, tmp_path):
    doc = serialize_adtool_xml(build_counterexample("base"))
    (tmp_path / "one.xml").write_bytes(doc)
    (tmp_path / "two.xml").write_bytes(doc)
    result = invoke(runner, "matrix", str(tmp_path), "--epsilon", "1")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == ",one,two"
    assert lines[1].split(",")[1:] == ["0", "0"]


def test_matrix_figures_and_json(runner, corpus_dir, tmp_path):
    outdir = tmp_path / "figs"
    result = invoke(runner, "matrix", str(corpus_dir), "--output", "json",
                    "--figures", str(outdir), "--measure", "label")
    payload = json.loads(result.output)
    assert payload["measure"] == "label"
    assert len(payload["matrix"]) == 3
    assert (outdir / "matrix_label.png").stat().st_size > 0


def test_matrix_needs_two_files(runner, tmp_path):
    (tmp_path / "one.xml").write_bytes(serialize_adtool_xml(build_counterexample("base")))
    result = runner.invoke(main, ["matrix", str(tmp_path)])
    assert result.exit_code == 4


def test_counterexamples_command(runner, tmp_path):
    result = invoke(runner, "counterexamples")
    assert result.exit_code == 0
    assert "Order Reversed" in result.output

    csv_out = invoke(runner, "counterexamples", "--output", "csv")
    lines = csv_out.output.strip().splitlines()
    assert lines[0].startswith("name,label,ted,radical,multiset,wsd")
    assert len(lines) == 13

    json_out = invoke(runner, "counterexamples", "--output", "json")
    rows = json.loads(json_out.output)
    assert len(rows) == 12
    assert all(not row["failures"] for row in rows)

    figs = tmp_path / "figs"
    fig_run = invoke(runner, "counterexamples", "--figures", str(figs))
    assert fig_run.exit_code == 0
    assert (figs / "counterexamples.png").stat().st_size > 0


def test_counterexamples_determinism(runner):
    first = invoke(runner, "counterexamples", "--output", "csv")
    second = invoke(runner, "counterexamples", "--output", "csv")
    assert first.output == second.output


def test_validate_ok(runner, corpus_dir):
    result = invoke(runner, "validate", str(corpus_dir / "base.xml"))
    assert result.exit_code == 0
    assert "valid attack tree" in result.output


def test_validate_rejects_switch_role(runner, tmp_path):
    path = tmp_path / "defense.xml"
    path.write_text(
        "<adtree><node><label>R</label>"
        '<node switchRole="yes"><label>D</label></node>'
        "</node></adtree>"
    )
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 2
    assert "/adtree/node/node[1]" in result.output
