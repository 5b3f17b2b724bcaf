import json
import subprocess
import sys

import pytest

from almosttoric.cli import main
from golden import H_A, H_F, H_POLY, Z_A, Z_F, parse_poly_text


@pytest.fixture
def files(tmp_path):
    def write(name, doc):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_newton_text_and_json(files, capsys):
    path = files("h.json", {"A": H_A, "f": H_F})
    code, out, _ = run(capsys, "newton", path)
    assert code == 0 and "AlmostToric" in out and "(3,8,6,0,5)" in out
    code, out, _ = run(capsys, "newton", "--format", "json", path)
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 6 and len(doc["lattice_points"]) == 24


def test_implicitize_text_is_lex_descending(files, capsys):
    code, out, _ = run(capsys, "implicitize", files("h.json", {"A": H_A, "f": H_F}))
    first = out.splitlines()[0]
    assert code == 0 and first.startswith("4*u0^8*u1^4*u3^2*u4^8 + 12*u0^7")
    assert "degree: 22" in out and "terms: 24" in out


def test_implicitize_json(files, capsys):
    code, out, _ = run(capsys, "implicitize", "--format", "json", files("h.json", {"A": H_A, "f": H_F}))
    doc = json.loads(out)
    got = {tuple(t["exps"]): int(t["coeff"]) for t in doc["terms"]}
    assert code == 0 and got == parse_poly_text(H_POLY, 5)


def test_degree_all(files, capsys):
    code, out, _ = run(capsys, "degree", "--method", "all", files("h.json", {"A": H_A, "f": H_F}))
    assert code == 0 and out.strip() == "22 22 22 agree"
    code, out, _ = run(capsys, "degree", "--method", "tropical", "--seed", "3", files("z.json", {"A": Z_A, "f": Z_F}))
    assert code == 0 and out.strip() == "12"


def test_verify_good_and_tampered(files, capsys):
    inst = files("z.json", {"A": Z_A, "f": Z_F})
    code, out, _ = run(capsys, "implicitize", "--format", "json", inst)
    doc = json.loads(out)
    good = files("p.json", doc)
    code, out, _ = run(capsys, "verify", inst, "--poly", good, "--trials", "30")
    assert code == 0 and out.strip().endswith("pass")
    doc["terms"][5]["coeff"] = str(int(doc["terms"][5]["coeff"]) * 2)
    code, out, _ = run(capsys, "verify", inst, "--poly", files("bad.json", doc))
    assert code == 4 and "witness" in out


def test_verify_without_poly(files, capsys):
    code, out, _ = run(capsys, "verify", files("z.json", {"A": Z_A, "f": Z_F}), "--trials", "10")
    assert code == 0 and "random: 10/10" in out


def test_not_a_hypersurface(files, capsys):
    path = files("c.json", {"A": [[1, 1, 1]], "f": ["2", "3", "5"]})
    for cmd in ("newton", "implicitize", "degree"):
        code, out, _ = run(capsys, cmd, path)
        assert code == 2 and "not a hypersurface" in out


def test_toric(files, capsys):
    path = files("t.json", {"A": [[1, 1, 1]], "f": ["1", "1", "x"]})
    code, out, _ = run(capsys, "newton", path)
    assert code == 0 and "ToricHypersurface" in out
    code, out, _ = run(capsys, "implicitize", path)
    assert out.splitlines()[0] == "u0 - u1"


@pytest.mark.parametrize("doc", ["{oops", {"A": [[1, 1, 1]], "f": ["1", "1", "3x"]}, {"A": [[1, 1]], "f": ["1", "x"]}])
def test_input_errors(files, capsys, doc):
    code, _, err = run(capsys, "newton", files("bad.json", doc))
    assert code == 1 and err.startswith("error:")


def test_missing_file(capsys):
    code, _, err = run(capsys, "newton", "/nonexistent/instance.json")
    assert code == 1


def test_gen_is_deterministic(capsys, tmp_path):
    _, a, _ = run(capsys, "gen", "--n", "2", "--d", "3", "--k", "2", "--seed", "9")
    _, b, _ = run(capsys, "gen", "--n", "2", "--d", "3", "--k", "2", "--seed", "9")
    assert a == b and set(json.loads(a)) == {"A", "f"}
    out = tmp_path / "g.json"
    run(capsys, "gen", "--n", "2", "--d", "3", "--k", "2", "--seed", "9", "-o", str(out))
    assert out.read_text() == a


def test_gen_bad_parameters(capsys):
    code, _, _ = run(capsys, "gen", "--n", "0", "--d", "3", "--k", "2")
    assert code == 1


def test_module_entry_point(files):
    path = files("z.json", {"A": Z_A, "f": Z_F})
    res = subprocess.run([sys.executable, "-m", "almosttoric", "degree", path], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "12 12 12 agree"
