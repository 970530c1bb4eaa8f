import json
import subprocess
import sys

import pytest

from stitchlab.cli import main
from stitchlab.families import bicycle, w13
from stitchlab.graph import graph6_decode, graph6_encode
from stitchlab.canon import are_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_graph6(capsys):
    code, out, _ = run(capsys, "construct", "bicycle:4", "w13")
    assert code == 0
    lines = out.split()
    assert graph6_decode(lines[0]) == bicycle(4) and graph6_decode(lines[1]) == w13()


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "chain:3", "--format", "json")
    assert code == 0 and json.loads(out) == {"family": "chain:3", "graph6": json.loads(out)["graph6"], "n": 8, "e": 10}


def test_construct_bad_spec(capsys):
    code, _, err = run(capsys, "construct", "chain:x")
    assert code == 2 and "chain:x" in err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "Dhc")
    rec = json.loads(out)
    assert code == 0
    assert (rec["n"], rec["e"], rec["alpha"], rec["t"], rec["q"], rec["girth"]) == (5, 5, 2, 1, 0, 5)
    assert rec["degree_histogram"] == {"2": 5} and rec["triangle_free"]


def test_analyze_infinite_girth(capsys):
    _, out, _ = run(capsys, "analyze", "D??")
    assert json.loads(out)["girth"] == "infinity"


def test_analyze_bad_line_continues(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Dhc\n\nnot-graph6!\nD??\n")
    code, out, _ = run(capsys, "analyze", "-i", str(f))
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 2
    assert [r["line"] for r in recs] == [1, 3, 4]
    assert "error" in recs[1] and recs[1]["input"] == "not-graph6!"


def test_analyze_table(capsys):
    code, out, _ = run(capsys, "analyze", "Dhc", "D??", "--format", "table")
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[:3] == ["line", "graph6", "n"] and len(lines) == 3


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", graph6_encode(bicycle(4)))
    rec = json.loads(out)
    assert code == 0 and rec["class"] == "Gamma" and rec["components"][0]["k"] == 4


def test_classify_triangle_is_error(capsys):
    code, out, _ = run(capsys, "classify", "Bw")
    assert code == 2 and "error" in json.loads(out)


def test_destabilizers(capsys):
    code, out, _ = run(capsys, "destabilizers", "--max-size", "4", graph6_encode(bicycle(4)))
    assert code == 0 and json.loads(out)["count"] == 16
    code, _, _ = run(capsys, "destabilizers", "--max-size", "9", "Dhc")
    assert code == 2


def test_enumber(capsys):
    code, out, _ = run(capsys, "enumber", "--j", "4", "--n", "8")
    assert code == 0 and json.loads(out)["value"] == 10
    code, out, _ = run(capsys, "enumber", "--j", "4", "--n", "9")
    assert json.loads(out)["value"] == "infinity"


def test_enumber_graph6_realisers(capsys):
    code, out, _ = run(capsys, "enumber", "--j", "5", "--n", "13", "--format", "graph6")
    assert code == 0 and are_isomorphic(graph6_decode(out.strip()), w13())


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--n", "6")
    assert code == 0 and len(out.split()) == 38
    _, out, _ = run(capsys, "generate", "--n", "6", "--connected", "--min-degree", "2")
    assert all(graph6_decode(x).n == 6 for x in out.split())


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--k-max", "5", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["passed"] and rec["check"] == "lemmas"


def test_verify_theorem3_small(capsys):
    code, out, _ = run(capsys, "verify", "theorem3", "--n-max", "8")
    rec = json.loads(out)
    assert code == 0 and rec["gamma_prime_hits"] == ["Chain(2)", "Chain(3)"]


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["analyze", "--workers", "0", "Dhc"]) == 2
    assert main(["verify", "t-nonneg", "--n-max", "99"]) == 2
    capsys.readouterr()


def test_console_entry_point_module():
    r = subprocess.run([sys.executable, "-m", "stitchlab.cli", "analyze", "Dhc"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["alpha"] == 2
