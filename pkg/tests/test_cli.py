import json
import shutil
import subprocess

import pytest

from proccat.cli import build_parser, main

DUMP_FULL = """\
index (0, 2)
size 3
  term(1; ; ())
  term(2; 1 -> (); ())
  ongoing(1 -> (), 2 -> ())
"""

DUMP_BEHAVIOR = """\
index (0, 2)
size 1
  now (); ongoing(1 -> (), 2 -> ())
"""


def run(capsys, argv):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_scale_validate_accepts_finite(capsys):
    code, out, _ = run(capsys, ["scale", "validate", "finite(0, 1/2, 1)"])
    assert (code, out) == (0, "Accept\n")


def test_scale_validate_accepts_descending_union(capsys):
    code, out, _ = run(
        capsys, ["scale", "validate", "union(finite(10), desc_above(5))"])
    assert (code, out) == (0, "Accept\n")


def test_scale_validate_rejects_nested_ascents(capsys):
    code, out, _ = run(
        capsys,
        ["scale", "validate", "union(asc_below(1), asc_below(2))"])
    assert code == 1
    assert out.startswith("Reject: ")


def test_scale_validate_parse_error(capsys):
    code, _, err = run(capsys, ["scale", "validate", "finite(0, oops)"])
    assert code == 2
    assert "error:" in err


def test_dump_full_process_space(capsys):
    argv = ["dump", "unit |>''[inf] unit", "0", "2"]
    code, out, _ = run(capsys, argv)
    assert (code, out) == (0, DUMP_FULL)


def test_dump_behavior_space(capsys):
    code, out, _ = run(capsys, ["dump", "box' unit", "0", "2"])
    assert (code, out) == (0, DUMP_BEHAVIOR)


def test_dump_expired_bound_is_empty(capsys):
    code, out, _ = run(capsys, ["dump", "unit |>''[1] unit", "2", "2"])
    assert code == 0
    assert out == "index (2, 2)\nsize 0\n"


def test_dump_rejects_bad_descriptor(capsys):
    code, _, err = run(capsys, ["dump", "unit |> |>", "0", "0"])
    assert code == 2 and "error:" in err


def test_dump_rejects_off_scale_index(capsys):
    code, _, err = run(capsys, ["dump", "unit", "2", "1"])
    assert code == 2 and "not an index" in err


def test_check_writes_reports_deterministically(capsys, tmp_path):
    argv = ["check", "--suites", "nonstop,corecursion",
            "--out", str(tmp_path / "a")]
    code, out, _ = run(capsys, argv)
    assert code == 0
    assert "passed" in out and "0 failed" in out
    argv2 = ["check", "--suites", "nonstop,corecursion",
             "--out", str(tmp_path / "b")]
    code2, out2, _ = run(capsys, argv2)
    assert code2 == 0 and out2 == out
    for name in ("report.txt", "report.jsonl"):
        first = (tmp_path / "a" / name).read_bytes()
        second = (tmp_path / "b" / name).read_bytes()
        assert first == second


def test_check_machine_format_is_jsonl(capsys, tmp_path):
    argv = ["check", "--suites", "nonstop", "--out", str(tmp_path),
            "--format", "machine"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    for line in out.splitlines():
        rec = json.loads(line)
        assert set(rec) == {"suite", "instance", "verdict",
                            "witness", "millis"}
        assert rec["verdict"] == "pass" and rec["millis"] == 0


def test_check_mutation_fails_loudly(capsys, tmp_path):
    argv = ["check", "--suites", "nonstop", "--mutate", "nonstop",
            "--out", str(tmp_path)]
    code, out, _ = run(capsys, argv)
    assert code == 1
    assert "FAIL" in out


def test_check_cap_exit_code(capsys, tmp_path):
    argv = ["check", "--suites", "uniqueness", "--cap", "1",
            "--out", str(tmp_path)]
    code, out, _ = run(capsys, argv)
    assert code == 3
    assert "capped" in out


def test_check_rejects_unknown_suite(capsys, tmp_path):
    argv = ["check", "--suites", "nope", "--out", str(tmp_path)]
    code, _, err = run(capsys, argv)
    assert code == 2 and "unknown suites" in err


def test_check_rejects_mismatched_mutation(capsys, tmp_path):
    argv = ["check", "--suites", "functor", "--mutate", "nonstop",
            "--out", str(tmp_path)]
    code, _, err = run(capsys, argv)
    assert code == 2 and "error:" in err


@pytest.mark.parametrize("scale,hint", [
    ("finite(0, 1)", "law grid"),
    ("asc_below(1)", "scale rejected"),
])
def test_check_pins_the_grid_scale(capsys, tmp_path, scale, hint):
    argv = ["check", "--scale", scale, "--out", str(tmp_path)]
    code, _, err = run(capsys, argv)
    assert code == 2 and hint in err


def test_cap_environment_override(monkeypatch):
    monkeypatch.setenv("PROCCAT_CAP", "123")
    args = build_parser().parse_args(["check"])
    assert args.cap == 123
    monkeypatch.delenv("PROCCAT_CAP")
    args = build_parser().parse_args(["check"])
    assert args.cap == 10 ** 6


def test_installed_entry_point():
    exe = shutil.which("proccat")
    assert exe, "proccat should be on PATH after pip install"
    done = subprocess.run([exe, "scale", "validate", "finite(0, 1)"],
                          capture_output=True, text=True)
    assert done.returncode == 0
    assert done.stdout == "Accept\n"
