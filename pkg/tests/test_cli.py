import json

import pytest

from voaplus import algebra_from_json, build, validate
from voaplus.cli import main


@pytest.fixture()
def gram_file(tmp_path):
    def write(gram, name="lat.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"gram": gram}))
        return str(path)

    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_classify_command(gram_file, capsys):
    code, out = run(capsys, ["classify", gram_file([[4, 1], [1, 4]])])
    assert code == 0
    payload = json.loads(out)
    assert payload["label"] == "rootless-two-norm4-classes"
    assert payload["params"]["b"] == 1


def test_build_round_trip(gram_file, capsys, tmp_path):
    path = gram_file([[4, -1], [-1, 4]])
    out_path = tmp_path / "alg.json"
    code, _ = run(capsys, ["build", path, "--out", str(out_path)])
    assert code == 0
    payload = json.loads(out_path.read_text())
    rebuilt = algebra_from_json(payload)
    fresh = build(validate([[4, -1], [-1, 4]]))
    assert rebuilt.mult == fresh.mult
    assert rebuilt.form == fresh.form


def test_output_is_deterministic(gram_file, capsys):
    path = gram_file([[4, 1], [1, 4]])
    _, first = run(capsys, ["idempotents", path, "--type", "1"])
    _, second = run(capsys, ["idempotents", path, "--type", "1"])
    assert first == second


def test_idempotent_command_counts(gram_file, capsys):
    path = gram_file([[4, 1], [1, 4]])
    code, out = run(capsys, ["idempotents", path, "--type", "1", "--norm", "1/16"])
    assert code == 0
    assert json.loads(out)["count"] == 4


def test_virasoro_command(gram_file, capsys):
    code, out = run(capsys, ["virasoro", gram_file([[4, -2], [-2, 4]]), "--central-charge", "1/2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "finite" and payload["count"] == 6


def test_spectrum_identity(gram_file, capsys):
    code, out = run(capsys, ["spectrum", gram_file([[4, 1], [1, 4]]), "--element", "2/15,-1/15,2/15,0,0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["eigenvalues"] == [
        {
            "value": "2",
            "algebraic_multiplicity": 5,
            "geometric_multiplicity": 5,
            "eigenbasis": payload["eigenvalues"][0]["eigenbasis"],
        }
    ]


def test_aut_command(gram_file, capsys):
    code, out = run(capsys, ["aut", gram_file([[4, 1], [1, 4]])])
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 8 and payload["structure"] == "dihedral-8"


def test_input_errors_exit_2(gram_file, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["classify", str(bad)]) == 2
    assert main(["build", gram_file([[2, -1], [-1, 2]], "roots.json")]) == 2
    assert main(["spectrum", gram_file([[4, 1], [1, 4]]), "--element", "1,2"]) == 2
    assert main(["idempotents", gram_file([[4, 1], [1, 4]]), "--type", "1", "--norm", "x"]) == 2


def test_verify_paper_passes(capsys):
    code, out = run(capsys, ["verify-paper"])
    payload = json.loads(out)
    assert code == 0
    assert payload["passed"] is True
    assert len(payload["checks"]) == 9
