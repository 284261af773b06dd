import json

import pytest

from scripts.biquotient.config import ENGINE_VERSION
from scripts.biquotient.grassmann.cases import GrassmannCase
from scripts.biquotient.grassmann.verify import verify_case
from scripts.biquotient.presentations.serialization import model_from_dict
from scripts.biquotient.reporting.formatter import (
    batch_summary_text, hilbert_line, render_batch, to_json, verification_text,
)
from scripts.biquotient.reporting.writer import append_step_summary, report_filename, write_output
from scripts.biquotient import runner
from scripts.biquotient.runner import EXIT_FAILED, EXIT_INPUT, EXIT_OK, cli
from scripts.biquotient.sullivan.cohomology import cohomology
from scripts.biquotient.utils.run_tracker import RunTracker

CASE = "n=1,k=1,a=0,b=0,two-sided"


def failing_report():
    report = verify_case(GrassmannCase(1, 1), 4)
    report = dict(report, passed=False, label="broken")
    return report


# ── Commands ────────────────────────────────────────────────────────────────

def test_hilbert_of_fixture(fixture_path, capsys):
    assert cli(["hilbert", "--file", fixture_path("p1_free.json"), "--max-degree", "8"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 0 0 0 1 0 0 0 1"


def test_hilbert_json(fixture_path, capsys):
    assert cli(["hilbert", "--file", fixture_path("s2xs2.json"), "--max-degree", "6", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["dims"] == [1, 0, 2, 0, 1, 0, 0]
    assert data["label"] == "H(S2 x S2)"
    assert data["engine_version"] == ENGINE_VERSION


def test_model_of_case(capsys):
    assert cli(["model", "--case", CASE, "--max-degree", "6"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 0 4 0 8 0 12"


def test_model_of_file(fixture_path, capsys):
    assert cli(["model", "--file", fixture_path("koszul.json"), "--max-degree", "4"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 0 0 0 0"


def test_model_with_representatives(capsys):
    assert cli(["model", "--case", "n=1,k=1,ordinary", "--max-degree", "4", "--representatives"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "1 0 2 0 1"
    assert [line.split(":")[0] for line in lines[1:]] == ["H^0", "H^2", "H^4"]


def test_verify_case(capsys):
    assert cli(["verify", "--case", CASE, "--max-degree", "6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[PASS] case" in out
    assert "[PASS] pushout" in out
    assert "2/2 checks passed" in out


def test_verify_writes_one_file_per_report(tmp_path):
    assert cli(["verify", "--case", CASE, "--max-degree", "6", "--out", str(tmp_path)]) == EXIT_OK
    names = sorted(p.name for p in tmp_path.iterdir())
    assert "summary.txt" in names
    assert len(names) == 3
    assert all(n.endswith(".txt") for n in names)


def test_output_to_file(fixture_path, tmp_path):
    out = tmp_path / "nested" / "p1.txt"
    assert cli(["hilbert", "--file", fixture_path("p1_free.json"), "--max-degree", "4", "--out", str(out)]) == EXIT_OK
    assert out.read_text().strip() == "1 0 0 0 1"


# ── Input errors ────────────────────────────────────────────────────────────

@pytest.mark.parametrize("argv", [
    ["hilbert", "--file", "malformed.json"],
    ["hilbert", "--file", "inconsistent.json"],
    ["model", "--file", "bad_degree_model.json"],
    ["hilbert", "--file", "missing.json"],
])
def test_bad_files_exit_2(fixture_path, argv):
    argv = [fixture_path(a) if a.endswith(".json") else a for a in argv]
    assert cli(argv) == EXIT_INPUT


@pytest.mark.parametrize("argv", [
    ["model", "--case", "n=0,k=1,a=0,b=0"],
    ["model", "--case", "n=1,k=1,a=0,b=0,unoriented,two-sided"],
    ["verify", "--case", "n=3,k=2"],
    ["hilbert"],
    ["model"],
    ["verify"],
    ["verify", "--case", CASE, "--all-small"],
    ["model", "--case", CASE, "--max-degree", "-1"],
    ["verify", "--case", CASE, "--workers", "0"],
])
def test_bad_arguments_exit_2(argv):
    assert cli(argv) == EXIT_INPUT


def test_unknown_command_is_rejected_by_argparse():
    with pytest.raises(SystemExit) as excinfo:
        cli(["frobnicate"])
    assert excinfo.value.code == 2


def test_errors_go_to_stderr(capsys):
    cli(["model", "--case", "n=0,k=1"])
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "Degenerate block" in captured.err


# ── Reporting ───────────────────────────────────────────────────────────────

def test_hilbert_line():
    assert hilbert_line([1, 0, 2]) == "1 0 2"


def test_verification_text_layout():
    text = verification_text(verify_case(GrassmannCase(1, 1), 4))
    assert text.splitlines()[0] == "[PASS] case: G~2(R4) oriented two-sided (D=4)"
    assert "checksum: A=13 B=13" in text


def test_json_is_deterministic():
    report = verify_case(GrassmannCase(1, 1), 4)
    assert to_json(dict(report)) == to_json(dict(report))
    assert json.loads(render_batch([report], "json"))["passed"] == 1


def test_batch_summary_counts_failures():
    text = batch_summary_text([verify_case(GrassmannCase(1, 1), 4), failing_report()])
    assert "1/2 checks passed" in text
    assert "FAIL" in text


def test_report_filename_is_slugified():
    name = report_filename(verify_case(GrassmannCase(1, 1), 4), "json")
    assert name.startswith("case-g")
    assert name.endswith(".json")
    assert " " not in name and "(" not in name


def test_write_output_to_stdout(capsys):
    write_output("hello")
    assert capsys.readouterr().out == "hello\n"


def test_step_summary(tmp_path, monkeypatch):
    summary = tmp_path / "summary.md"
    monkeypatch.setenv("GITHUB_STEP_SUMMARY", str(summary))
    append_step_summary([verify_case(GrassmannCase(1, 1), 4)], "Checks: 1 run")
    text = summary.read_text()
    assert "| case | G~2(R4) oriented two-sided | 4 | PASS |" in text


def test_step_summary_skipped_without_env(monkeypatch):
    monkeypatch.delenv("GITHUB_STEP_SUMMARY", raising=False)
    append_step_summary([], "nothing")


def test_run_tracker():
    tracker = RunTracker()
    tracker.add_all([verify_case(GrassmannCase(1, 1), 4), failing_report()])
    assert tracker.total == 2
    assert not tracker.all_passed
    assert tracker.failures == ["case: broken"]
    assert tracker.summary() == "Checks: 2 run | 1 passed | 1 failed | case 2"


def test_failed_check_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(runner, "run_batch", lambda jobs, workers=1: [failing_report()])
    assert cli(["verify", "--case", CASE]) == EXIT_FAILED


@pytest.mark.slow
def test_all_small_batch(tmp_path):
    assert cli(["verify", "--all-small", "--max-degree", "12", "--workers", "2", "--out", str(tmp_path)]) == EXIT_OK


def test_model_json_carries_the_model(capsys):
    assert cli(["model", "--case", CASE, "--max-degree", "6", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["dims"] == [1, 0, 4, 0, 8, 0, 12]
    assert sorted(data["model"]["differential"]) == ["eta3", "z3"]
    back = model_from_dict(data["model"])
    assert cohomology(back, 6)["dims"] == data["dims"]
