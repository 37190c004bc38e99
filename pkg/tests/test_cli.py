"""End-to-end tests for the qmain command line."""

import io
import json
import sys
from contextlib import redirect_stdout

import jsonschema
import pytest

from helpers import cycle_graph, star_graph
from qmain.cli import analysis_schema, main
from qmain.graph_core import graph6_decode, graph6_encode


def run_cli(argv, stdin_text=None, capsys=None):
    """Invoke main() capturing stdout; stderr rides through capsys if given."""
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
    return code, buf.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def test_analyze_star_and_cycle():
    stdin = graph6_encode(star_graph(3)) + "\n" + graph6_encode(cycle_graph(4)) + "\n"
    code, out = run_cli(["analyze"], stdin_text=stdin)
    assert code == 0
    star, cyc = json_lines(out)
    assert star["ab"] == {"kind": "unique", "a": 4, "b": 0, "integral": True, "degree": None}
    assert star["main_count"] == 2
    assert star["regular"] is False
    assert cyc["regular"] is True
    assert cyc["main_count"] == 1
    assert cyc["ab"]["kind"] == "underdetermined"
    assert cyc["ab"]["degree"] == 2


def test_analyze_family_instance_gets_matched():
    code, out = run_cli(["family", "--id", "G12", "--emit"])
    assert code == 0
    g6_line = out.splitlines()[0]
    code, out = run_cli(["analyze"], stdin_text=g6_line + "\n")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["family"] == "G12"
    assert rec["ab"] == {"kind": "unique", "a": 6, "b": 0, "integral": True, "degree": None}
    assert rec["cyclomatic"] == 3
    assert rec["base_shape"] is not None
    assert rec["checklist"] is not None and all(rec["checklist"].values())


def test_analyze_bad_line_is_inline_and_stream_continues():
    stdin = "this is not graph6 \x7f\n" + graph6_encode(star_graph(3)) + "\n"
    code, out = run_cli(["analyze"], stdin_text=stdin)
    assert code == 0
    bad, good = json_lines(out)
    assert "error" in bad and "message" in bad["error"]
    assert good["main_count"] == 2


def test_analyze_header_prefix_and_blank_lines():
    stdin = "\n>>graph6<<" + graph6_encode(star_graph(3)) + "\n\n"
    code, out = run_cli(["analyze"], stdin_text=stdin)
    records = json_lines(out)
    assert code == 0 and len(records) == 1
    assert records[0]["graph6"] == graph6_encode(star_graph(3))


def test_analyze_records_validate_against_shipped_schema():
    schema = analysis_schema()
    stdin = "\n".join(
        [
            graph6_encode(star_graph(3)),
            graph6_encode(cycle_graph(5)),
            "Ii?HOocD?",  # tricyclic with pendants, positive, uncatalogued
            "not-graph6 \x01",
        ]
    )
    code, out = run_cli(["analyze"], stdin_text=stdin + "\n")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 4
    for rec in records:
        jsonschema.validate(rec, schema)
    assert records[2]["family"] is None
    assert records[2]["base_shape"] == "T15"


def test_analyze_pretty_prints_indented():
    stdin = graph6_encode(star_graph(3)) + "\n"
    code, out = run_cli(["analyze", "--pretty"], stdin_text=stdin)
    assert code == 0
    assert out.startswith("{\n  ")
    assert json.loads(out)["main_count"] == 2


def test_analyze_file_input(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text(graph6_encode(cycle_graph(4)) + "\n", encoding="utf-8")
    code, out = run_cli(["analyze", str(path)])
    assert code == 0
    assert json_lines(out)[0]["regular"] is True


def test_analyze_missing_file_is_io_error(capsys):
    code, out = run_cli(["analyze", "/no/such/file.g6"])
    assert code == 1


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def test_enumerate_streams_graph6():
    code, out = run_cli(["enumerate", "--n", "4"])
    assert code == 0
    assert out.split() == ["C~"]  # K4


def test_enumerate_verify_small():
    code, out = run_cli(["enumerate", "--n", "5", "--verify"])
    assert code == 0
    report = json.loads(out)
    assert report["n"] == 5
    assert report["positives"] == 2
    assert report["ok"] is True
    fams = sorted(c["family"] for c in report["checks"])
    assert fams == ["G10", "G38"]


def test_enumerate_emit_positives(tmp_path):
    path = tmp_path / "pos.g6"
    code, out = run_cli(["enumerate", "--n", "5", "--verify", "--emit-positives", str(path)])
    assert code == 0
    lines = path.read_text(encoding="utf-8").split()
    assert len(lines) == 2
    for g6 in lines:
        g = graph6_decode(g6)
        assert g.n == 5 and g.m == 7


def test_enumerate_jobs_agree():
    code1, out1 = run_cli(["enumerate", "--n", "6"])
    code2, out2 = run_cli(["enumerate", "--n", "6", "--jobs", "3"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_enumerate_guard_violation_is_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("QMAIN_GUARD_N", "5")
    code, out = run_cli(["enumerate", "--n", "6"])
    assert code == 1
    assert out == ""


def test_enumerate_missing_n_is_usage_error(capsys):
    code, out = run_cli(["enumerate"])
    assert code == 1


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def test_family_list_table():
    code, out = run_cli(["family", "--list"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 43  # header + 42 rows
    assert lines[0].split()[:5] == ["id", "a", "b", "n", "m"]
    by_id = {line.split()[0]: line.split() for line in lines[1:]}
    assert by_id["G3"][1:5] == ["9", "-6", "7", "9"]
    assert by_id["G42"][1:5] == ["8", "-3", "8", "10"]
    assert "k=1" in " ".join(by_id["G42"])


def test_family_emit_single():
    code, out = run_cli(["family", "--id", "G3", "--emit"])
    assert code == 0
    g6_line, sidecar_line = out.splitlines()
    sidecar = json.loads(sidecar_line)
    g = graph6_decode(g6_line)
    assert (g.n, g.m) == (sidecar["n"], sidecar["m"]) == (7, 9)
    assert sidecar == {"id": "G3", "params": {}, "a": 9, "b": -6, "n": 7, "m": 9}


def test_family_without_emit_prints_sidecar_only():
    code, out = run_cli(["family", "--id", "G38"])
    assert code == 0
    (sidecar,) = json_lines(out)
    assert sidecar["id"] == "G38" and sidecar["n"] == 5


def test_family_g42_accepts_class_parameters():
    code, out = run_cli(["family", "--id", "G42", "--params", "b=-3,a=10", "--emit"])
    assert code == 0
    g6_line, sidecar_line = out.splitlines()
    sidecar = json.loads(sidecar_line)
    assert sidecar["params"] == {"k": 3}
    assert sidecar["a"] == 10 and sidecar["b"] == -3
    assert graph6_decode(g6_line).n == 16


def test_family_g42_rejects_wrong_class(capsys):
    assert run_cli(["family", "--id", "G42", "--params", "b=-2,a=8"])[0] == 1
    assert run_cli(["family", "--id", "G42", "--params", "a=7,b=-3"])[0] == 1
    assert run_cli(["family", "--id", "G42", "--params", "k=1,a=8,b=-3"])[0] == 1


def test_family_unknown_id_and_params_are_usage_errors(capsys):
    assert run_cli(["family", "--id", "G99"])[0] == 1
    assert run_cli(["family", "--id", "G32", "--params", "k=1"])[0] == 1
    assert run_cli(["family", "--id", "G3", "--params", "k=2"])[0] == 1
    assert run_cli(["family", "--id", "G32", "--params", "k=two"])[0] == 1
    assert run_cli(["family"])[0] == 1


def test_family_atlas_export():
    code, out = run_cli(["family", "--max-n", "6", "--emit"])
    assert code == 0
    lines = out.splitlines()
    pairs = [(lines[i], json.loads(lines[i + 1])) for i in range(0, len(lines), 2)]
    ids = sorted(side["id"] for _, side in pairs)
    assert ids == ["G10", "G12", "G14", "G22", "G38", "G7"]
    for g6_line, side in pairs:
        g = graph6_decode(g6_line)
        assert g.n == side["n"] <= 6


def test_family_atlas_single_id():
    code, out = run_cli(["family", "--id", "G34", "--max-n", "12", "--emit"])
    assert code == 0
    sidecars = [json.loads(line) for line in out.splitlines()[1::2]]
    assert [s["n"] for s in sidecars] == [10, 12, 12]
    assert sidecars[0]["params"] == {"k3": 1, "k4": 2}
    assert {tuple(sorted(s["params"].items())) for s in sidecars[1:]} == {
        (("k3", 1), ("k4", 3)),
        (("k3", 2), ("k4", 2)),
    }


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def test_spectrum_k2_by_hand():
    code, out = run_cli(["spectrum"], stdin_text="A_\n")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["main_count"] == 1
    groups = sorted(rec["groups"], key=lambda g: g["value"])
    assert [round(g["value"], 9) for g in groups] == [0, 2]
    assert [g["main"] for g in groups] == [False, True]


def test_spectrum_star_has_two_mains():
    code, out = run_cli(["spectrum"], stdin_text=graph6_encode(star_graph(3)) + "\n")
    (rec,) = json_lines(out)
    assert rec["main_count"] == 2
    assert sum(1 for g in rec["groups"] if g["main"]) == 2


def test_spectrum_exact_only_omits_groups():
    code, out = run_cli(["spectrum", "--exact-only"], stdin_text="A_\n")
    (rec,) = json_lines(out)
    assert code == 0
    assert rec == {"graph6": "A_", "n": 2, "main_count": 1}


def test_spectrum_bad_line_inline():
    code, out = run_cli(["spectrum"], stdin_text="!!\nA_\n")
    bad, good = json_lines(out)
    assert code == 0
    assert "error" in bad and good["main_count"] == 1


# ---------------------------------------------------------------------------
# top level
# ---------------------------------------------------------------------------


def test_usage_errors_exit_one(capsys):
    assert main(["no-such-command"]) == 1
    assert main([]) == 1


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
