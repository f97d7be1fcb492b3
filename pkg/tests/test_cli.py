import io
import json
import subprocess
import sys

import pytest

from layered_hilbert import complete_layered, graph_to_json
from layered_hilbert.cli import run
from layered_hilbert.generators import named_families


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def write(*gen_args):
        code, text, _ = call("generate", *gen_args)
        assert code == 0
        path = tmp_path / ("g_" + "_".join(gen_args).replace("-", "") + ".json")
        path.write_text(text)
        return str(path)

    return write


def test_boolean_hilbert_b_golden(graph_file):
    code, out, _ = call("hilbert-b", "--json", "-i", graph_file("boolean", "3"))
    assert code == 0
    assert out.strip() == '{"coeffs":[1,7,5,1],"truncation":3}'


def test_pipe_through_subprocess():
    gen = subprocess.run([sys.executable, "-m", "layered_hilbert.cli", "generate", "boolean", "3"],
                         capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "layered_hilbert.cli", "hilbert-b", "--json"],
                         input=gen.stdout, capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"coeffs": [1, 7, 5, 1], "truncation": 3}


def test_cassidy_shelton_koszul(graph_file):
    code, out, _ = call("koszul", "--json", "-i", graph_file("cassidy-shelton"))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is False and doc["defects"]["4"] != 0 and doc["consistent"]


def test_validate_malformed_edge(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": [{"id": "a", "level": 2}, {"id": "b", "level": 0}], "edges": [["a", "b"]]}))
    code, out, _ = call("validate", "--json", "-i", str(path))
    assert code == 1
    doc = json.loads(out)
    assert not doc["valid"] and doc["violations"]


def test_unparseable_input_is_domain_error(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert call("hilbert-b", "-i", str(path))[0] == 1
    assert call("hilbert-b", "-i", str(tmp_path / "missing.json"))[0] == 1


def test_usage_errors(graph_file):
    g = graph_file("boolean", "2")
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("homology", "-i", g, "--window", "2")[0] == 2
    assert call("koszul", "-i", g, "--both-fields")[0] == 2
    assert call("hilbert-b", "-i", g, "--field", "p:4")[0] == 2


def test_json_output_is_deterministic(graph_file):
    g = graph_file("cassidy-shelton")
    for cmd in ("report", "homology", "hilbert-b", "inv-hilbert-a", "koszul", "oracle", "uniform"):
        first = call(cmd, "--json", "-i", g)
        assert first == call(cmd, "--json", "-i", g)
    assert call("generate", "random", "--seed", "4", "1", "3", "3", "1") == call(
        "generate", "random", "--seed", "4", "1", "3", "3", "1")


def test_report_never_mismatches_on_named_families(tmp_path):
    for k, spec in enumerate(named_families()):
        path = tmp_path / f"f{k}.json"
        path.write_text(json.dumps(graph_to_json(spec.build())))
        code, out, _ = call("report", "--json", "-i", str(path))
        doc = json.loads(out)
        assert code == 0, spec
        assert doc["oracle"]["matches_hilbert_B"], spec
        assert doc.get("routes_agree", True), spec
        assert doc.get("low_degree_agrees", True), spec


def test_homology_window_and_both_fields(graph_file):
    g = graph_file("boolean", "3")
    code, out, _ = call("homology", "--json", "-i", g, "--vertex", "{1,2,3}", "--window", "3", "--both-fields")
    assert code == 0
    doc = json.loads(out)
    # the window of depth 3 below the top of the rank-3 cube is a hexagon
    assert doc["agree"]
    assert [f["dims"] for f in doc["fields"]] == [{"-1": 0, "0": 0, "1": 1}] * 2


def test_hilbert_b_both_fields(graph_file):
    code, out, _ = call("hilbert-b", "--json", "--both-fields", "-i", graph_file("cassidy-shelton"))
    assert code == 0
    assert "coeffs" in out


def test_strict_mode_on_non_uniform(tmp_path):
    path = tmp_path / "c22.json"
    path.write_text(json.dumps(graph_to_json(complete_layered(2, 2))))
    code, out, _ = call("hilbert-b", "--json", "-i", str(path))
    assert code == 0 and "warnings" in json.loads(out)
    assert call("hilbert-b", "--strict", "-i", str(path))[0] == 1
    assert call("koszul", "-i", str(path))[0] == 1
    assert call("uniform", "--strict", "-i", str(path))[0] == 1
    assert call("uniform", "-i", str(path))[0] == 0


def test_inv_hilbert_a_routes(graph_file):
    g = graph_file("palindromic", "9")
    code, out, _ = call("inv-hilbert-a", "--json", "--route", "both", "--max-degree", "3", "-i", g)
    assert code == 0
    assert "[1,-9,9,-1]" in out


def test_mobius_and_cm(graph_file):
    g = graph_file("boolean", "3")
    assert call("mobius", "-i", g)[0] == 0
    assert call("cm-check", "--json", "-i", g)[0] == 0
    assert call("cm-check", "--json", "--intervals-hat", "-i", g)[0] == 0


def test_generate_errors():
    assert call("generate", "prescribed", "4", "3")[0] == 1
    assert call("generate", "boolean", "0")[0] == 1
