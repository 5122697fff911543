import io
import json

import pytest

from pentagram.cli import run


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_puzzle_examples():
    assert call(["puzzle", "--sentence", "ABAXA", "--kind", "cyclic"])[:2] == (0, "-2*t^2\n")
    code, out, _ = call(["puzzle", "--sentence", "ABAXA", "--kind", "open", "--table", "tight"])
    assert (code, out) == (0, "-t^2 + t^3\n")


def test_puzzle_json_and_listing():
    code, out, _ = call(["puzzle", "--sentence", "AAXABA", "--kind", "open", "--table", "tight",
                         "--list-parsings", "--limit", "2"])
    data = json.loads(out)
    assert code == 0
    assert data["coefficients"] == {"2": -1, "3": 1}
    assert len(data["parsings"]) == 2 and data["truncated"] is True
    code, out, _ = call(["puzzle", "--sentence", "ABAXA", "--list-parsings"])
    assert json.loads(out)["truncated"] is False


def test_gen_map_invariants_pipeline(tmp_path, monkeypatch):
    code, poly, _ = call(["gen", "--n", "7", "--seed", "4"])
    assert code == 0
    path = tmp_path / "p.json"
    path.write_text(poly)
    _, mapped, _ = call(["map", str(path), "--iterations", "2"])
    reports = {}
    for method in ("combinatorial", "determinantal"):
        code, out, _ = call(["invariants", "-", "--method", method], stdin=mapped, monkeypatch=monkeypatch)
        assert code == 0
        reports[method] = json.loads(out)
    _, before, _ = call(["invariants", str(path)])
    assert reports["combinatorial"]["O"] == reports["determinantal"]["O"] == json.loads(before)["O"]
    assert reports["combinatorial"]["E"] == reports["determinantal"]["E"]
    assert reports["determinantal"]["weight0"] == {"O": "1", "E": "1"}
    code, out, _ = call(["invariants", str(path), "--method", "geometric"])
    assert code == 0 and "alternating_O" in json.loads(out)


def test_output_is_deterministic():
    a = call(["gen", "--n", "6", "--seed", "9", "--inscribed"])
    b = call(["gen", "--n", "6", "--seed", "9", "--inscribed"])
    assert a == b and a[0] == 0


def test_inscribed_check(tmp_path):
    _, data, _ = call(["gen", "--n", "7", "--seed", "1", "--inscribed"])
    path = tmp_path / "i.json"
    path.write_text(data)
    code, out, _ = call(["inscribed", str(path), "--check"])
    report = json.loads(out)
    assert code == 0 and report["all_equal"] and report["corner_match"]
    path.write_text(json.dumps({"n": 5, "p": ["1/2", "1/3", "2", "-1", "5"]}))
    code, out, _ = call(["inscribed", str(path), "--check"])
    assert code == 0 and json.loads(out)["all_equal"]
    code, out, _ = call(["inscribed", str(path)])
    assert code == 0 and json.loads(out)["x"][0] == "3/2"


def test_inscribed_polygon_output(tmp_path):
    _, data, _ = call(["gen", "--n", "6", "--seed", "1", "--inscribed"])
    path = tmp_path / "i.json"
    path.write_text(data)
    code, out, _ = call(["inscribed", str(path)])
    assert code == 0 and len(json.loads(out)["vertices"]) == 6


def test_expand():
    code, out, _ = call(["expand", "--n", "5", "--k", "1"])
    terms = json.loads(out)
    assert code == 0 and terms == sorted(terms, key=lambda t: t["exps"])
    code, out, _ = call(["expand", "--n", "6", "--k", "2", "--compare"])
    assert code == 0 and json.loads(out)["equal"]


@pytest.mark.parametrize("suite,bound", [
    ("palindrome-cyclic", 6),
    ("palindrome-open", 5),
    ("identities", 3),
    ("tight-equiv", 5),
    ("pentagram-invariance", 6),
    ("theorem1", 6),
])
def test_verify_suites(suite, bound):
    code, out, _ = call(["verify", "--suite", suite, "--bound", str(bound), "--samples", "3"])
    report = json.loads(out)
    assert code == 0
    assert report["bound"] == bound and report["checked"] > 0 and report["counterexamples"] == []


def test_verify_reports_raw_count():
    code, out, _ = call(["verify", "--suite", "palindrome-cyclic", "--bound", "8"])
    assert code == 0 and json.loads(out)["raw_strings"] == 3 ** 8


@pytest.mark.parametrize("argv", [
    ["puzzle", "--sentence", "ABQ"],
    ["puzzle"],
    ["bogus"],
    ["gen", "--n", "4"],
    ["gen", "--n", "five"],
    ["map", "/nonexistent/file.json"],
    ["expand", "--n", "6", "--k", "4"],
    ["verify", "--suite", "theorem1", "--bound", "3"],
    ["verify", "--suite", "nope"],
    ["puzzle", "--sentence", "A", "--limit", "-1"],
])
def test_invalid_input_exits_2(argv):
    code, out, err = call(argv)
    assert code == 2 and out == "" and err.startswith("pentagram: error:")
    assert err.count("\n") == 1


def test_malformed_json_exits_2(monkeypatch):
    code, _, err = call(["map", "-"], stdin="{", monkeypatch=monkeypatch)
    assert code == 2 and "malformed JSON" in err
    code, _, err = call(["invariants"], stdin='{"vertices": [[1, 2]]}', monkeypatch=monkeypatch)
    assert code == 2


def test_failed_check_exits_1(tmp_path, monkeypatch):
    import pentagram.bridge as bridge

    monkeypatch.setattr(bridge, "theorem1_check", lambda p: {"all_equal": False, "per_k": {}})
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"p": ["2", "3", "4", "5", "6"]}))
    assert call(["inscribed", str(path), "--check"])[0] == 1
