import json

import pytest

from enqcover.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    doc = json.loads(cap.out) if cap.out.strip() else None
    return code, doc, cap.err


def test_hesse_model(capsys):
    code, doc, _ = run(capsys, "hesse", "--a", "1", "--b", "2")
    assert code == EXIT_OK
    assert doc["kind"] == "model" and doc["field"] == {"type": "Q"}
    assert len(doc["entries"]) == 10


def test_pfaffians_from_model_file(capsys, tmp_path):
    _, doc, _ = run(capsys, "u1", "--lambda", "1,2,3,4,5")
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    code, q, _ = run(capsys, "pfaffians", str(path))
    assert code == EXIT_OK
    assert q["kind"] == "form" and len(q["forms"]) == 5


def test_invariants(capsys):
    code, doc, _ = run(capsys, "invariants", "--a", "1", "--b", "2")
    assert code == EXIT_OK
    assert doc["D"] == "-2750"
    code, doc, _ = run(capsys, "invariants", "--lambda", "0,1,1,1,1")
    assert (doc["c4"], doc["c6"], doc["j"]) == ("1", "-1", None)


def test_covariants_subset(capsys):
    code, doc, _ = run(capsys, "covariants", "--a", "1", "--b", "2", "--which", "Z")
    assert code == EXIT_OK
    assert set(doc["forms"]) == {"Z"}


def test_map_flex_to_infinity(capsys):
    code, doc, _ = run(capsys, "map", "--a", "1", "--b", "2", "--point", "0,1,2,-2,-1")
    assert code == EXIT_OK and doc["point"] == "infinity"


def test_map_nodal_point(capsys):
    code, doc, _ = run(capsys, "map", "--lambda", "0,1,1,1,1", "--point", "31,2,4,-8,-16")
    assert code == EXIT_OK
    assert doc["singular_curve"] and doc["point"] != "infinity"


def test_map_refuses_the_node(capsys):
    code, _, err = run(capsys, "map", "--lambda", "0,1,1,1,1", "--point", "1,0,0,0,0")
    assert code == EXIT_FAIL and "singular" in err


def test_map_off_curve_point(capsys):
    code, doc, err = run(capsys, "map", "--lambda", "0,1,1,1,1", "--point", "1,1,0,0,0")
    assert code == EXIT_FAIL and doc is None
    assert "residuals" in err


def test_enumerate(capsys):
    code, doc, _ = run(capsys, "enumerate", "--a", "1", "--b", "2", "--p", "31")
    assert code == EXIT_OK
    assert doc["count"] == 25 == len(doc["points"])


@pytest.mark.parametrize(
    "argv",
    [
        ["hesse", "--a", "1"],
        ["hesse", "--a", "x", "--b", "1"],
        ["invariants", "--a", "1", "--b", "2", "--lambda", "1,1,1,1,1"],
        ["invariants"],
        ["u1", "--lambda", "1,2,3"],
        ["enumerate", "--a", "1", "--b", "2", "--p", "5"],
        ["verify", "--suite", "nope"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_bad_model_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": "model"}')
    assert run(capsys, "pfaffians", str(path))[0] == EXIT_USAGE


def test_verify_suite(capsys):
    code, doc, err = run(capsys, "verify", "--suite", "pfaffians", "--seed", "4")
    assert code == EXIT_OK
    assert doc["ok"] and doc["seed"] == 4
    assert err.strip()
