import json
import subprocess
import sys

import pytest

from scottdcpo.cli import main
from scottdcpo.errors import FormatError
from scottdcpo.io import InputError, parse_document, poset_to_json, space_to_json, to_dot
from scottdcpo.isomorphism import is_isomorphic
from scottdcpo.poset import chain
from scottdcpo.topology import scott_space

CHAIN2 = {"elements": ["a", "b"], "covers": [["a", "b"]]}
DIAMOND = {"elements": ["0", "x", "y", "1"], "covers": [["0", "x"], ["0", "y"], ["x", "1"], ["y", "1"]]}
ANTICHAIN2 = {"elements": ["a", "b"]}
FLAG_KEYS = ["sober", "bounded_sober", "T_D", "d_space", "quasicontinuous", "dl_sup", "cor16", "thm15", "thm22", "property_M"]


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_poset_and_space():
    kind, P = parse_document(json.dumps(CHAIN2))
    assert kind == "poset" and is_isomorphic(P, chain(2))
    kind, X = parse_document('{"points": ["a","b"], "closed": [[],["a"],["a","b"]]}')
    assert kind == "space" and X.m == 2


def test_parse_errors_carry_position():
    with pytest.raises(InputError) as e:
        parse_document('{"elements": ["a",\n "b"],\n "covers": [["a","c"]]}')
    assert e.value.line == 3
    with pytest.raises(InputError) as e:
        parse_document("{\n  oops")
    assert e.value.line == 2
    with pytest.raises(FormatError):
        parse_document('{"elements": ["a"], "extra": 1}')
    with pytest.raises(FormatError):
        parse_document('{"points": ["a","b"], "closed": [[],["a","b"]]}')
    with pytest.raises(FormatError):
        parse_document("[1, 2]")
    with pytest.raises(FormatError):
        parse_document('{"elements": ["a","b"], "covers": [["a","b"],["b","a"]]}')


def test_json_round_trips():
    _, P = parse_document(json.dumps(DIAMOND))
    _, Q = parse_document(json.dumps(poset_to_json(P)))
    assert Q == P
    X = scott_space(P)
    _, Y = parse_document(json.dumps(space_to_json(X)))
    assert Y == X


def test_dot_output():
    dot = to_dot(chain(2))
    assert dot.count("->") == 1 and "rankdir=BT" in dot


def test_analyze_chain(capsys, write):
    code, out, _ = run(capsys, "analyze", write("c2.json", CHAIN2))
    assert code == 0
    rep = json.loads(out)
    assert list(rep) == ["counts", "flags", "classification", "property_m", "irreducible_closed_sets",
                         "non_point_closures", "c_compact", "size_limited"]
    assert rep["counts"]["scott_closed_sets"] == 3
    assert list(rep["flags"]) == FLAG_KEYS
    assert rep["flags"]["sober"] and rep["flags"]["dl_sup"]


def test_analyze_diamond(capsys, write):
    code, out, _ = run(capsys, "analyze", write("d.json", DIAMOND), "--canonical")
    rep = json.loads(out)
    assert code == 0 and rep["flags"]["quasicontinuous"]
    cls = rep["classification"]
    for key in ("labels", "down_linear", "quasicontinuous_element", "quasicontinuous", "dl_sup",
                "thm15_hypotheses", "cor16_hypotheses", "thm22_hypotheses"):
        assert key in cls
    top = cls["labels"].index("1")
    assert cls["down_linear"][top] is False
    assert rep["canonical_form"].startswith("0004")


def test_analyze_space_input(capsys, write):
    path = write("s.json", {"points": ["a", "b"], "closed": [[], ["a"], ["a", "b"]]})
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0 and json.loads(out)["counts"]["elements"] == 2


def test_analyze_verbose_goes_to_stderr(capsys, write):
    code, out, err = run(capsys, "analyze", write("c2.json", CHAIN2), "--verbose")
    assert code == 0 and "sober=True" in err and json.loads(out)


def test_malformed_input(capsys, write):
    code, _, err = run(capsys, "analyze", write("bad.json", "{not json"))
    assert code == 2 and "bad.json:1:2:" in err
    code, _, err = run(capsys, "analyze", write("cyc.json", {"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}))
    assert code == 2
    code, _, err = run(capsys, "analyze", "/nonexistent/file.json")
    assert code == 2


def test_unknown_flag_is_error(capsys, write):
    with pytest.raises(SystemExit) as e:
        main(["analyze", write("c2.json", CHAIN2), "--bogus"])
    assert e.value.code == 2


def test_export(capsys, write):
    code, out, _ = run(capsys, "export", write("c2.json", CHAIN2), "--dot")
    assert code == 0 and out.count("->") == 1 and out.count(";") == 4
    code, out, _ = run(capsys, "export", write("d.json", DIAMOND), "--dot")
    assert out.count("->") == 4
    code, out, _ = run(capsys, "export", write("a2.json", ANTICHAIN2), "--target", "lattice", "--dot")
    assert out.count("->") == 4 and '"{a,b}"' in out
    code, out, _ = run(capsys, "export", write("d.json", DIAMOND), "--target", "irr", "--dot")
    assert out.count("->") == 4
    code, _, _ = run(capsys, "export", write("d.json", DIAMOND))
    assert code == 2
    with pytest.raises(SystemExit) as e:
        main(["export", write("d.json", DIAMOND), "--target", "nope", "--dot"])
    assert e.value.code == 2


def test_sobrify(capsys, write):
    code, out, _ = run(capsys, "sobrify", write("d.json", DIAMOND))
    doc = json.loads(out)
    assert code == 0 and len(doc["points"]) == 4 and len(doc["closed"]) == 6
    assert doc["eta"]["x"] == ["0", "x"]
    # the output is itself a valid space document
    kind, Y = parse_document(out)
    assert kind == "space" and Y.m == 4


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 5 and len(doc["posets"]) == 5


def test_enumerate_verify(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, err = run(capsys, "enumerate", "--n", "4", "--verify", "uniqueness", "--json", str(target))
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == [] and doc["details"]["pairs_at_n"] == 136
    assert "elapsed_ms" in json.loads(target.read_text())
    assert "pass" in err


def test_enumerate_deterministic_across_jobs(capsys):
    _, a, _ = run(capsys, "enumerate", "--n", "4", "--verify", "all")
    _, b, _ = run(capsys, "enumerate", "--n", "4", "--verify", "all", "--jobs", "2")
    assert a == b


def test_enumerate_errors(capsys):
    assert run(capsys, "enumerate", "--n", "9")[0] == 2
    assert run(capsys, "enumerate", "--n", "3", "--jobs", "0")[0] == 2
    assert run(capsys, "enumerate", "--n", "6", "--verify", "kappa")[0] == 2


def test_enumerate_failure_exit_code(capsys, monkeypatch):
    from scottdcpo import harness

    monkeypatch.setitem(harness.CHECKS, "kappa", lambda P: ["planted"])
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--verify", "kappa")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_truncate(capsys, tmp_path):
    target = tmp_path / "j.json"
    code, _, _ = run(capsys, "truncate", "johnstone", "--m", "2", "--n", "2", "-o", str(target))
    assert code == 0
    kind, P = parse_document(target.read_text())
    assert kind == "poset" and P.n == 6
    assert run(capsys, "truncate", "johnstone", "--m", "0", "--n", "2", "-o", str(target))[0] == 2


def test_sample(capsys):
    code, out, _ = run(capsys, "sample", "kou", "--trials", "500", "--seed", "3")
    assert code == 0 and json.loads(out)["ok"]
    assert run(capsys, "sample", "johnstone", "--trials", "0", "--seed", "3")[0] == 2


def test_module_entry_point(tmp_path):
    p = tmp_path / "c2.json"
    p.write_text(json.dumps(CHAIN2))
    r1 = subprocess.run([sys.executable, "-m", "scottdcpo", "analyze", str(p)], capture_output=True, text=True)
    r2 = subprocess.run([sys.executable, "-m", "scottdcpo", "analyze", str(p)], capture_output=True, text=True)
    assert r1.returncode == 0 and r1.stdout == r2.stdout
