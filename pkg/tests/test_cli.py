import io
import json
import subprocess
import sys

import jsonschema
import pytest

from coxdiv.cli import load_schema, main, schema_name


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    env = json.loads(out)
    jsonschema.validate(env, load_schema("envelope"))
    jsonschema.validate(env["result"], load_schema(schema_name(argv)))
    assert env["command"] == list(argv)
    return env["result"]


@pytest.fixture
def f(data_dir):
    return lambda name: str(data_dir / name)


def test_classify(f):
    assert run_json("classify", "--input", f("c4.json"))["verdict"] == "linear"
    r = run_json("classify", "--input", f("c5.adj"))
    assert r["verdict"] == "at-least-cubic" and r["rank_lower_bound"] == "all degrees"
    assert run_json("classify", "--input", f("lad8.dot"), "--rank-max", "3")["verdict"] == "quadratic"
    assert run_json("classify", "--input", f("c5.adj"), "--format", "adjacency")["verdict"] == "at-least-cubic"


def test_classify_malformed(f):
    code, out, err = run("classify", "--input", f("malformed.dot"))
    assert code == 1 and out == "" and "line 3" in err


def test_wrong_format_flag_is_input_error(f):
    code, _, err = run("classify", "--input", f("c4.json"), "--format", "dot")
    assert code == 1 and err


def test_unknown_flag_and_missing_file(f):
    assert run("classify", "--input", f("c4.json"), "--bogus")[0] == 1
    assert run("coxeter", "--input", "/nonexistent/g.json")[0] == 1
    assert run()[0] == 1
    assert run("frobnicate")[0] == 1


def test_coxeter(f):
    r = run_json("coxeter", "--input", f("even_path4.json"))
    assert r["quadratic"]["holds"] and r["hat_diameter"] == 3
    r = run_json("coxeter", "--input", f("odd_triangle.dot"), "--n-max", "2")
    assert not r["quadratic"]["holds"] and r["hat_diameter"] == 0 and r["higher_degree"] == []


def test_cayley_ball(f):
    r = run_json("cayley", "ball", "--input", f("c4.json"), "--radius", "2")
    assert r["count"] == 13 and r["sphere_sizes"] == [1, 4, 8]
    code, out, _ = run("cayley", "ball", "--input", f("c4.json"), "--radius", "2", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "index,length,word" and len(lines) == 14


def test_cayley_walls(f):
    r = run_json("cayley", "walls", "--input", f("c4.json"), "--radius", "2")
    assert sum(w["n_edges"] for w in r["walls"]) == 16
    code, out, _ = run("cayley", "walls", "--input", f("c4.json"), "--radius", "2", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 17


def test_cayley_separation(f):
    r = run_json("cayley", "separation", "--input", f("c5.adj"), "--word", "auto", "--radius", "6")
    assert r["radii"][0]["common_crossers"] == 0
    assert r["word"] == ["1", "3", "5", "2", "4"]


def test_cayley_separation_join_is_input_error(f):
    assert run("cayley", "separation", "--input", f("c4.json"), "--word", "auto")[0] == 1


def test_cayley_divergence(f):
    r = run_json("cayley", "divergence", "--input", f("c4.json"), "--u", "a", "--v", "c", "--r", "2,3,4")
    assert [s["path_length"] for s in r["samples"]] == [12, 18, 24]
    assert r["fit"]["slope"] == pytest.approx(1.0)
    r = run_json("cayley", "divergence", "--input", f("dinf.json"), "--u", "s", "--v", "t", "--r", "2,3")
    assert all(s["path_length"] == "exceeds-budget" for s in r["samples"]) and r["fit"] is None


def test_cayley_divergence_budget(f):
    code, out, err = run("cayley", "divergence", "--input", f("lad8.dot"), "--max-elements", "100")
    assert code == 2 and out == "" and "budget" in err


def test_env_budget(f, monkeypatch):
    monkeypatch.setenv("COXDIV_MAX_ELEMENTS", "10")
    assert run("cayley", "ball", "--input", f("c5.adj"), "--radius", "3")[0] == 2


def test_cayley_rejects_labels(f):
    assert run("cayley", "ball", "--input", f("even_path4.json"), "--radius", "1")[0] == 1


def test_cayley_hdiv(f):
    r = run_json("cayley", "hdiv", "--input", f("c5.adj"), "--r", "2,4")
    v = [s["value"] for s in r["samples"]]
    assert v[1] > v[0]
    r = run_json("cayley", "hdiv", "--input", f("c4.json"), "--wall-y", ":a", "--wall-z", "ac:a",
                 "--r", "1,2,3")
    assert len({s["value"] for s in r["samples"]}) == 1


def test_random_sweep():
    argv = ("random", "sweep", "--n", "12", "--p", "auto:-0.7,-0.3,3", "--samples", "20", "--seed", "7")
    code, out, _ = run(*argv)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,p,samples,cfs_count,join_count,fraction,seed" and len(lines) == 4
    assert run(*argv)[1] == out
    r = run_json(*argv, "--format", "json")
    assert len(r["rows"]) == 3


def test_random_bad_args():
    assert run("random", "sweep", "--n", "10", "--p", "0.5", "--samples", "0")[0] == 1
    assert run("random", "sweep", "--n", "10", "--p", "1.5")[0] == 1
    assert run("random", "sweep", "--n", "10", "--p", "auto:-0.7")[0] == 1


def test_word_commands(f):
    r = run_json("word", "normalize", "--input", f("c4.json"), "--word", "abba")
    assert r["normal_form"] == [] and r["length"] == 0
    r = run_json("word", "normalize", "--input", f("c4.json"), "--word", "ba")
    assert r["normal_form"] == ["a", "b"]
    assert run_json("word", "geodesic", "--input", f("c4.json"), "--word", "ac")["geodesic"]
    assert not run_json("word", "geodesic", "--input", f("c4.json"), "--word", "abab")["geodesic"]
    r = run_json("word", "complete", "--input", f("c5.adj"))
    assert r["word"] == ["1", "3", "5", "2", "4"] and r["valid"]
    assert run("word", "complete", "--input", f("c4.json"))[0] == 1
    assert run("word", "normalize", "--input", f("c4.json"), "--word", "xyz")[0] == 1


def test_deterministic_bytes(f):
    argv = ("classify", "--input", f("lad8.dot"))
    assert run(*argv)[1] == run(*argv)[1]


def test_module_entry_point(f):
    p = subprocess.run([sys.executable, "-m", "coxdiv", "classify", "--input", f("c4.json")],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["result"]["verdict"] == "linear"
    p = subprocess.run([sys.executable, "-m", "coxdiv", "classify", "--input", f("malformed.dot")],
                       capture_output=True, text=True)
    assert p.returncode == 1 and p.stdout == "" and p.stderr
