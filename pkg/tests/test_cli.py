import json
import os
import subprocess
import sys

import pytest

from commorder.cli import CommandPlan, emit_report, execute_plan, main, parse_args
from commorder.verify import ASSERTION_SUITES, SUITES, CheckReport


def test_parse_single_suite():
    plan = parse_args(["check", "--suite", "commutator_p", "--corpus", "builtin", "--out", "r.json"])
    assert plan.command == "check" and plan.suites == ["commutator_p"]
    assert plan.out == "r.json" and plan.corpus == "builtin" and len(plan.entries) >= 60


def test_parse_all_expands_to_assertion_suites():
    plan = parse_args(["check", "--suite", "all", "--suite", "three_class"])
    assert plan.suites == ASSERTION_SUITES


def test_parse_inspect():
    plan = parse_args(["inspect", "--group", "GL(2,3)"])
    assert plan.command == "inspect" and plan.group == "GL(2,3)" and plan.cap == 100_000


@pytest.mark.parametrize("argv", [
    ["check", "--suite", "nope"],
    ["frobnicate"],
    ["inspect", "--group", "PSL(2,9)"],
    ["inspect"],
    ["check", "--corpus", "/nonexistent/manifest.json"],
    ["check", "--cap", "0"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as ei:
        parse_args(argv)
    assert ei.value.code != 0


def test_malformed_manifest(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SystemExit):
        parse_args(["check", "--corpus", str(bad)])


def _rep(suite, n_bad=0):
    return CheckReport(suite, "G", 6, 1, [{"x": []}] * n_bad, [], 0)


def test_emit_empty(tmp_path):
    path = tmp_path / "e.json"
    emit_report([], str(path))
    assert path.read_text() == "[]\n"


def test_emit_roundtrip_and_order(tmp_path):
    path = tmp_path / "r.json"
    reps = [_rep("three_class"), _rep("equal_order", 1)]
    emit_report(reps, str(path))
    text = path.read_text()
    assert text.endswith("\n")
    back = [CheckReport.from_dict(d) for d in json.loads(text)]
    assert back == reps
    assert list(json.loads(text)[0]) == ["suite", "group_name", "group_order", "instances_checked",
                                         "violations", "witnesses", "elapsed_ms"]
    assert sorted(os.listdir(tmp_path)) == ["r.json"]


def test_emit_io_error(tmp_path):
    with pytest.raises(OSError):
        emit_report([], str(tmp_path / "missing" / "r.json"))


def test_remarks_command(tmp_path, capsys):
    out = tmp_path / "remarks.json"
    assert execute_plan(parse_args(["remarks", "--out", str(out)])) == 0
    (rep,) = json.loads(out.read_text())
    assert rep["suite"] == "remarks" and rep["violations"] == []
    assert {w["bundle"] for w in rep["witnesses"]} == {"GL(2,3)", "C3:Q8"}
    # JSON goes only to --out
    assert "PASS" in capsys.readouterr().out


def test_cap_breach_names_entry(capsys):
    plan = parse_args(["check", "--suite", "three_class", "--cap", "500"])
    first_big = next(e.name for e in plan.entries if e.expected_order > 500)
    assert execute_plan(plan) != 0
    assert repr(first_big) in capsys.readouterr().err


def test_exit_code_depends_only_on_assertion_violations(monkeypatch, capsys):
    plan = CommandPlan("check", group="S3", suites=["equal_order", "explore_p_singular"])
    assert execute_plan(plan) == 0
    monkeypatch.setitem(SUITES, "explore_p_singular", (lambda G, e=None: _rep("explore_p_singular", 3), False))
    assert execute_plan(plan) == 0
    monkeypatch.setitem(SUITES, "equal_order", (lambda G, e=None: _rep("equal_order", 1), True))
    assert execute_plan(plan) == 1


def test_group_check_uses_entry_metadata(capsys):
    assert execute_plan(parse_args(["check", "--group", "PSL(2,7)", "--suite", "lemmas",
                                    "--suite", "almost_simple_witness"])) == 0
    out = capsys.readouterr().out
    assert "almost_simple_witness" in out and "lemmas" in out


def test_inspect_classes_chartab(tmp_path, capsys):
    assert main(["inspect", "--group", "C3:Q8"]) == 0
    out = capsys.readouterr().out
    assert "order: 24" in out and "fitting: 12" in out
    path = tmp_path / "t.json"
    assert main(["chartab", "--group", "S4", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["degrees"] == [1, 1, 2, 3, 3]
    assert main(["classes", "--group", "A4"]) == 0
    assert "size=4" in capsys.readouterr().out


def test_threads_match_serial(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ["check", "--suite", "two_prime", "--suite", "three_class"]
    assert execute_plan(parse_args(base + ["--out", str(a)])) == 0
    assert execute_plan(parse_args(base + ["--threads", "2", "--out", str(b)])) == 0
    strip = lambda p: [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in json.loads(p.read_text())]  # noqa: E731
    assert strip(a) == strip(b)


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "commorder", "remarks"], capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout
