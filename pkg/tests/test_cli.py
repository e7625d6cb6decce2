import json

import pytest

from matroidcolor import harness
from matroidcolor.cli import main
from matroidcolor.formats import matroid_to_json
from matroidcolor.harness import Case, Outcome, Suite, SuiteConfig, make_bundle, tightness_example


@pytest.fixture
def files(tmp_path):
    t = tightness_example(1, 1)
    out = {}

    def put(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        out[name.split(".")[0]] = str(path)

    put("m.json", matroid_to_json(t.m))
    put("n.json", matroid_to_json(t.n))
    put("u23.json", {"type": "uniform", "n": 3, "k": 2})
    put("hollow.json", {"n": 3, "facets": [[0, 1], [0, 2], [1, 2]]})
    put("edge.json", {"n": 3, "edges": [[0, 1, 2]]})
    put("path.json", {"n": 3, "edges": [[0, 1], [1, 2]]})
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eta_and_betti(capsys, files):
    code, out, _ = run(capsys, "--json", "eta", files["hollow"])
    assert code == 0 and json.loads(out)["eta"] == 2
    code, out, _ = run(capsys, "eta", files["m"], files["n"], "--json")
    assert json.loads(out)["eta"] == 1
    code, out, _ = run(capsys, "betti", files["hollow"], "--delta", "--json")
    data = json.loads(out)
    assert data["betti"] == [0, 0, 1] and data["delta_eta"] == "3/2"
    code, out, _ = run(capsys, "eta", files["hollow"], "--field", "gf2")
    assert code == 0 and "2" in out


def test_chi_verbs(capsys, files):
    code, out, _ = run(capsys, "--json", "chi", files["m"])
    assert json.loads(out)["chi"] == 2
    code, out, _ = run(capsys, "--json", "chi-list", files["m"], files["n"], "--kmax", "3")
    assert json.loads(out)["chi_list"] == 2
    code, out, _ = run(capsys, "--json", "chi-sum", files["m"], files["n"])
    data = json.loads(out)
    assert code == 0 and data["chi_MN"] == 2 and data["chi_list_MN"] == 2 and data["bound"] == 4


def test_nu_and_intersect(capsys, files):
    code, out, _ = run(capsys, "--json", "nu", files["m"], files["n"], "--p", "2", "--q", "2", "--witness")
    data = json.loads(out)
    assert data["value"] == 4 and len(data["A"]) == 2
    code, out, _ = run(capsys, "--json", "nu", files["u23"], files["u23"], "--equalize", "--witness")
    assert json.loads(out)["value"] == 2
    code, out, _ = run(capsys, "--json", "intersect", files["m"], files["n"])
    data = json.loads(out)
    assert data["size"] == 2 and sorted(data["V1"] + data["V2"]) == [0, 1, 2, 3]


def test_game_circ_minor(capsys, files):
    code, out, _ = run(capsys, "--json", "game", files["edge"], "--check")
    data = json.loads(out)
    assert data["game_value"] == 2 and data["eta"] == 2
    code, out, _ = run(capsys, "--json", "--trace", "game", files["edge"])
    assert "move" in json.loads(out)["derivation"]
    code, out, _ = run(capsys, "--json", "circ", files["hollow"])
    assert json.loads(out)["circ"] == [[0, 1, 2]]
    code, out, _ = run(capsys, "--json", "minor", files["path"], "--op", "contract", "--set", "1")
    assert json.loads(out)["edges"] == [[0], [2]]
    code, out, _ = run(capsys, "--json", "minor", files["u23"], "--op", "contract", "--set", "0")
    assert json.loads(out)["circuits"] == [[1, 2]]


def test_tightness_verb(capsys):
    code, out, _ = run(capsys, "--json", "tightness", "--pmax", "2", "--qmax", "1")
    data = json.loads(out)
    assert code == 0 and [r["delta_eta"] for r in data["rows"]] == ["4/1", "6/1"]


def test_verify_suites(capsys, files):
    code, out, _ = run(capsys, "verify", "tightness", "--pmax", "3", "--qmax", "3")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "eta-nu", "--seed", "7", "--cases", "10", "--no-corpus", "--nmax", "6")
    assert code == 0
    code, out, _ = run(capsys, "--json", "verify", "coloop", files["m"], files["n"], "--v", "1")
    assert code == 0 and json.loads(out.splitlines()[-1])["passed"]


def test_gen(capsys, files):
    out_path = files["dir"] / "g.json"
    assert main(["--seed", "3", "gen", "matroid", "--n", "4", "--out", str(out_path)]) == 0
    assert json.loads(out_path.read_text())["type"] == "circuits"
    code, out, _ = run(capsys, "gen", "pair", "--n", "3")
    assert set(json.loads(out)) == {"M", "N"}
    code, out, _ = run(capsys, "gen", "complex", "--n", "3", "--seed", "2")
    assert json.loads(out)["n"] == 3


def test_exit_codes(capsys, files):
    assert run(capsys, "eta", str(files["dir"] / "missing.json"))[0] == 2
    assert run(capsys, "verify", "bogus")[0] == 2
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "eta", files["hollow"], "--field", "gf4")[0] == 2
    assert run(capsys, "--budget", "5", "nu", files["u23"], files["u23"], "--p", "3", "--q", "3")[0] == 3
    assert run(capsys, "verify", "eta-nu", "--nmax", "9")[0] == 2


def test_replay_roundtrip(capsys, files, monkeypatch):
    t = tightness_example(1, 1)
    path = files["dir"] / "ok.json"
    path.write_text(json.dumps(make_bundle("eta-nu", Case("c4", {"M": t.m, "N": t.n}), SuiteConfig(), "")))
    code, out, _ = run(capsys, "verify", "--replay", str(path))
    assert code == 0

    monkeypatch.setitem(harness.SUITES, "nuqq", Suite("pairs", 7, lambda inp, cfg: Outcome({}, ok=False)))
    code, out, _ = run(capsys, "verify", "nuqq", "--bundle-dir", str(files["dir"] / "b"))
    assert code == 1 and "replay with" in out
    bundle_path = next((files["dir"] / "b").iterdir())
    code, out, _ = run(capsys, "verify", "--replay", str(bundle_path))
    assert code == 1
    monkeypatch.undo()
    code, out, _ = run(capsys, "verify", "--replay", str(bundle_path))
    assert code == 0
