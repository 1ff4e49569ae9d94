"""End-to-end CLI behavior: outputs, exit codes, replay checks, determinism."""

import contextlib
import io
import json
import subprocess
import sys

from colorquot.cli import main

HINGED = {"n": 2, "a": [2, 3], "lambda": [4, 1]}
NEITHER = {"n": 2, "a": [2, 1], "lambda": [1, 1]}
SMALL = {"n": 2, "a": [1, 1], "lambda": [2, 2]}
CX = {"n": 2, "a": [1, 2], "lambda": [2, 3]}
ONES = {"n": 2, "a": [1, 1], "lambda": [2, 3]}
N1 = {"n": 1, "a": [2], "lambda": [3], "phi": [1, 2, 2]}


def run_cli(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:
                code = exc.code if isinstance(exc.code, int) else 1
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj) if isinstance(obj, dict) else obj)
    return str(path)


def test_classify_json_and_text(tmp_path):
    spec = write(tmp_path, "spec.json", HINGED)
    code, out, err = run_cli(["classify", "--spec", spec])
    assert code == 0 and err == ""
    assert json.loads(out) == {"schema": "colorquot/v1", "kind": "Hinged"}
    code, out, _ = run_cli(["classify", "--spec", spec, "--format", "text"])
    assert code == 0 and out == "Hinged\n"
    spec = write(tmp_path, "mixed.json", {"n": 3, "a": [1, 1, 1], "lambda": [3, 2, 4]})
    code, out, _ = run_cli(["classify", "--spec", spec])
    assert json.loads(out) == {"schema": "colorquot/v1", "kind": "Mixed", "r": 3}
    spec = write(tmp_path, "neither.json", NEITHER)
    code, out, _ = run_cli(["classify", "--spec", spec, "--format", "text"])
    assert code == 0 and out.startswith("Neither: ")


def test_classify_from_stdin():
    code, out, _ = run_cli(["classify", "--spec", "-", "--format", "text"], json.dumps(HINGED))
    assert code == 0 and out == "Hinged\n"


def test_enumerate(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    code, out, _ = run_cli(["enumerate", "--spec", spec, "--degree", "2"])
    assert code == 0
    assert out.splitlines() == [
        "x[1,1]^1*x[2,1]^1",
        "x[2,2]^1*x[1,1]^1",
        "x[1,2]^1*x[2,1]^1",
        "x[1,2]^1*x[2,2]^1",
    ]
    code, out, _ = run_cli(["enumerate", "--spec", spec, "--degree", "5"])
    assert code == 0 and out == ""


def test_shadow(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    members = write(tmp_path, "members.txt", "x[1,1]^1*x[2,1]^1\n")
    code, out, _ = run_cli(
        ["shadow", "--spec", spec, "--degree", "2", "--input", members]
    )
    assert code == 0
    assert out.splitlines() == ["x[2,1]^1", "x[1,1]^1"]
    code, out, _ = run_cli(
        ["shadow", "--spec", spec, "--degree", "2", "--input", members, "--direction", "upper"]
    )
    assert code == 0 and out == ""  # a = (1,1) kills every degree-3 multiple


def test_segment(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    code, out, _ = run_cli(["segment", "--spec", spec, "--degree", "2", "--size", "2"])
    assert out.splitlines() == ["x[1,1]^1*x[2,1]^1", "x[2,2]^1*x[1,1]^1"]
    code, out, _ = run_cli(
        ["segment", "--spec", spec, "--degree", "2", "--size", "2", "--kind", "lex"]
    )
    assert out.splitlines() == ["x[1,2]^1*x[2,1]^1", "x[1,2]^1*x[2,2]^1"]
    code, _, err = run_cli(["segment", "--spec", spec, "--degree", "2", "--size", "9"])
    assert code == 1 and "out of range" in err


def test_compress(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    members = write(tmp_path, "members.txt", "x[2,2]^1*x[1,1]^1\nx[1,2]^1*x[2,1]^1\n")
    code, out, _ = run_cli(
        ["compress", "--spec", spec, "--degree", "2", "--input", members,
         "--color", "1", "--format", "text"]
    )
    assert code == 0
    assert out.splitlines() == ["x[1,1]^1*x[2,1]^1", "x[1,2]^1*x[2,1]^1"]
    code, out, _ = run_cli(
        ["compress", "--spec", spec, "--degree", "2", "--input", members,
         "--quasi", "--format", "json"]
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "compress" and obj["norm"] == 4 and obj["trace"] == [[1, 4]]
    code, _, err = run_cli(
        ["compress", "--spec", spec, "--degree", "2", "--input", members]
    )
    assert code == 1 and "color" in err
    code, _, err = run_cli(
        ["compress", "--spec", spec, "--degree", "2", "--input", members,
         "--color", "1", "--quasi"]
    )
    assert code == 1


def test_verify_exit_codes_and_check(tmp_path):
    spec = write(tmp_path, "hinged.json", HINGED)
    code, out, _ = run_cli(["verify", "--spec", spec, "--max-degree", "3"])
    assert code == 0
    assert json.loads(out)["verdict"] == "Verified-up-to-budget"
    spec = write(tmp_path, "neither.json", NEITHER)
    report = str(tmp_path / "report.json")
    code, out, _ = run_cli(
        ["verify", "--spec", spec, "--max-degree", "3", "--out", report]
    )
    assert code == 2
    obj = json.loads(open(report).read())
    assert obj["verdict"] == "Refuted" and obj["witness"]["degree"] == 2
    code, out, _ = run_cli(["verify", "--check", report])
    assert code == 0 and out == "check passed: verify-report\n"
    obj["evals"] += 1
    tampered = write(tmp_path, "tampered.json", obj)
    code, _, err = run_cli(["verify", "--check", tampered])
    assert code == 1 and err != ""


def test_verify_budget_exhaustion(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    code, out, _ = run_cli(
        ["verify", "--spec", spec, "--max-degree", "3", "--max-evals", "4"]
    )
    assert code == 3
    assert json.loads(out)["truncation"]["degree"] == 1


def test_counterexample(tmp_path):
    spec = write(tmp_path, "cx.json", CX)
    art_path = str(tmp_path / "art.json")
    code, out, _ = run_cli(
        ["counterexample", "--spec", spec, "--degree", "2", "--out", art_path]
    )
    assert code == 0
    obj = json.loads(open(art_path).read())
    assert obj["kind"] == "counterexample"
    assert obj["s"] == 1 and obj["q"] == "x[1,2]^1" and obj["qtilde"] == "x[2,3]^1"
    assert obj["shadow_sizes"] == [4, 5]
    code, out, _ = run_cli(["counterexample", "--check", art_path])
    assert code == 0 and out == "check passed: counterexample\n"
    code, out, _ = run_cli(
        ["counterexample", "--spec", spec, "--degree", "2", "--format", "text"]
    )
    assert code == 0 and out.splitlines()[0] == "s = 1"
    code, _, err = run_cli(["counterexample", "--spec", spec, "--degree", "9"])
    assert code == 1 and "exceed" in err


def test_fvector_of(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    members = write(tmp_path, "members.txt", "x[1,1]^1\nx[2,1]^1\nx[1,1]^1*x[2,1]^1\n")
    faces = write(tmp_path, "faces.txt", "1:1\n2:1\n1:1 2:1\n")
    for flag, path in (("--members", members), ("--faces", faces)):
        code, out, _ = run_cli(
            ["fvector", "of", "--spec", spec, flag, path, "--format", "text"]
        )
        assert code == 0 and out == "1,2,1\n"
    code, _, err = run_cli(
        ["fvector", "of", "--spec", spec, "--members", members, "--faces", faces]
    )
    assert code == 1
    code, _, err = run_cli(["fvector", "of", "--spec", spec])
    assert code == 1
    broken = write(tmp_path, "broken.txt", "x[1,1]^1*x[2,1]^1\n")
    code, _, err = run_cli(["fvector", "of", "--spec", spec, "--members", broken])
    assert code == 1 and "divisor" in err


def test_fvector_compress(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    code, out, _ = run_cli(["fvector", "compress", "--spec", spec, "--f", "1,2,1"])
    obj = json.loads(out)
    assert code == 0 and obj["ok"] and len(obj["members"]) == 4
    code, out, _ = run_cli(
        ["fvector", "compress", "--spec", spec, "--f", "1,0,1", "--format", "text"]
    )
    assert code == 0
    assert out == "failure: x[1,1]^1*x[2,1]^1 lacks x[2,1]^1\n"
    code, _, err = run_cli(["fvector", "compress", "--spec", spec, "--f", "1,9"])
    assert code == 1 and "exceeds" in err


def test_fvector_search_and_hunt(tmp_path):
    spec = write(tmp_path, "spec.json", SMALL)
    code, out, _ = run_cli(["fvector", "search", "--spec", spec, "--f", "1,2,1"])
    obj = json.loads(out)
    assert code == 0 and obj["found"] is not None and not obj["exhausted"]
    code, out, _ = run_cli(["fvector", "search", "--spec", spec, "--f", "1,1,2"])
    obj = json.loads(out)
    assert code == 0 and obj["found"] is None and not obj["exhausted"]
    code, out, _ = run_cli(
        ["fvector", "search", "--spec", spec, "--f", "1,2,2", "--budget", "2"]
    )
    obj = json.loads(out)
    assert code == 3 and obj["exhausted"]
    cx = write(tmp_path, "cx.json", CX)
    hunt_path = str(tmp_path / "hunt.json")
    code, out, _ = run_cli(
        ["fvector", "search", "--spec", cx, "--hunt", "--out", hunt_path]
    )
    assert code == 0
    obj = json.loads(open(hunt_path).read())
    assert obj["kind"] == "fvector-hunt"
    assert obj["f"] == [1, 2, 3]
    assert obj["offender"] == {
        "member": "x[2,2]^1*x[2,1]^1",
        "missing_divisor": "x[2,2]^1",
    }
    code, out, _ = run_cli(["fvector", "search", "--check", hunt_path])
    assert code == 0 and out == "check passed: fvector-hunt\n"


def test_fvector_characterizes(tmp_path):
    cx = write(tmp_path, "cx.json", CX)
    ones = write(tmp_path, "ones.json", ONES)
    n1 = write(tmp_path, "n1.json", N1)
    for path, want in ((cx, False), (ones, True), (n1, False)):
        code, out, _ = run_cli(["fvector", "characterizes", "--spec", path])
        obj = json.loads(out)
        assert code == 0 and obj["characterizes"] is want
    bad = write(tmp_path, "bad.json", {"n": 2, "a": [1, 1], "lambda": [2, 2]})
    code, _, err = run_cli(["fvector", "characterizes", "--spec", bad])
    assert code == 1 and "at least 3 variables" in err


def test_bad_inputs(tmp_path):
    code, _, err = run_cli(["classify", "--spec", str(tmp_path / "missing.json")])
    assert code == 1 and err != ""
    bad = write(tmp_path, "bad.json", "not json at all")
    code, _, err = run_cli(["classify", "--spec", bad])
    assert code == 1
    code, _, _ = run_cli(["frobnicate"])
    assert code == 1
    spec = write(tmp_path, "spec.json", SMALL)
    code, _, _ = run_cli(["enumerate", "--spec", spec])
    assert code == 1


def test_in_process_determinism(tmp_path):
    spec = write(tmp_path, "cx.json", CX)
    runs = [
        ["classify", "--spec", spec],
        ["enumerate", "--spec", spec, "--degree", "2"],
        ["verify", "--spec", spec, "--max-degree", "2"],
        ["counterexample", "--spec", spec, "--degree", "2"],
        ["fvector", "search", "--spec", spec, "--hunt"],
    ]
    for argv in runs:
        first = run_cli(argv)
        second = run_cli(argv)
        assert first == second


def test_module_entry_point(tmp_path):
    spec = write(tmp_path, "spec.json", HINGED)
    cmd = [sys.executable, "-m", "colorquot.cli", "classify", "--spec", spec]
    one = subprocess.run(cmd, capture_output=True)
    two = subprocess.run(cmd, capture_output=True)
    assert one.returncode == 0
    assert one.stdout == two.stdout
    assert json.loads(one.stdout)["kind"] == "Hinged"
