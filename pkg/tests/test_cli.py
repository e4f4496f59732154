import json

from sympclif.cli import main
from sympclif.spinor import Spinor


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_symmetry(capsys):
    code, out, _ = run(capsys, "verify", "symmetry", "--degree", "3")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert {"suite", "check_id", "anchor", "status", "detail"} <= set(lines[0])
    assert any(l["detail"] == "dimension: 7" for l in lines)


def test_apply_and_parse_error(capsys):
    code, out, _ = run(capsys, "apply", "--op", "i*q*dy - dx*dq")
    assert code == 0 and json.loads(out)["operator"]["n"] == 1
    code, _, err = run(capsys, "apply", "--op", "Z1 + (")
    assert code == 2 and "offset 5" in err


def test_basis_and_pair(capsys):
    code, out, _ = run(capsys, "basis", "--family", "complex", "--parity", "odd", "--h", "1", "--k", "0")
    data = json.loads(out)
    assert data["rescale"]["sqrt2"] is True
    spinor = json.dumps(data["spinor"])
    code, out, _ = run(capsys, "pair", "--form", "fischer1", "--left", spinor, "--right", spinor)
    assert code == 0 and json.loads(out)["value"] == "0"
    code, out, _ = run(capsys, "apply", "--op", "Ds", "--spinor", spinor)
    assert Spinor.from_json(json.loads(out)["spinor"]) == Spinor.zero(1)


def test_kernel(capsys):
    code, out, _ = run(capsys, "kernel", "--k", "1", "--type", "K")
    assert code == 0 and len(json.loads(out)["terms"]) == 2


def test_spectral(capsys):
    code, out, _ = run(capsys, "spectral", "verify", "--j", "2", "--k", "1", "--n", "1")
    assert code == 0 and json.loads(out)["eigenvalue"] == "(-4*i)*a^1"
    code, out, _ = run(capsys, "spectral", "exp-lemma", "--order", "4")
    assert code == 0


def test_symmetry_solve(capsys):
    code, out, _ = run(capsys, "symmetry", "solve", "--degree", "0")
    assert json.loads(out)["dimension"] == 3
