import json
from importlib import resources

import pytest

from discpf import constructions as C
from discpf.cli import main
from discpf.ring_core import dumps_ring, load_ring

DATA = resources.files("discpf") / "data"
SHIPPED = {
    "hurwitz.json": C.hurwitz_quaternions,
    "m2.json": lambda: C.matrix_ring(2),
    "m3.json": lambda: C.matrix_ring(3),
    "sqrt5.json": lambda: C.sqrt_ring(5),
    "quadratic_1_1.json": lambda: C.quadratic_ring(1, 1),
}


def data(name):
    return str(DATA / name)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(SHIPPED))
def test_shipped_files_are_golden(name):
    assert (DATA / name).read_text() == dumps_ring(SHIPPED[name]())


class TestValidate:
    def test_hurwitz(self, capsys):
        code, out, _ = run(capsys, "validate", data("hurwitz.json"))
        assert code == 0 and "rank 4" in out

    def test_corrupted(self, capsys, tmp_path):
        obj = json.loads((DATA / "hurwitz.json").read_text())
        obj["table"][1][2][3] += 1
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(obj))
        code, _, err = run(capsys, "validate", p)
        assert code == 1 and "NotAssociative" in err

    def test_malformed(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        code, _, err = run(capsys, "validate", p)
        assert code == 2 and "error" in err

    def test_wrong_shape(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"rank": 2, "one": [1, 0]}))
        assert run(capsys, "validate", p)[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "validate", tmp_path / "nope.json")[0] == 2

    def test_json_flag(self, capsys):
        code, out, _ = run(capsys, "validate", "--json", data("m2.json"))
        assert json.loads(out) == {"valid": True, "rank": 4, "unital": False}


class TestDisc:
    @pytest.mark.parametrize(
        "name,line",
        [
            ("hurwitz.json", "disc = -64, disc mod 4 = 0"),
            ("quadratic_1_1.json", "disc = -3, disc mod 4 = 1"),
            ("m2.json", "disc = -16, disc mod 4 = 0"),
            ("m3.json", "disc = -19683, disc mod 4 = 1"),
            ("sqrt5.json", "disc = 20, disc mod 4 = 0"),
        ],
    )
    def test_shipped(self, capsys, name, line):
        code, out, _ = run(capsys, "disc", data(name))
        assert code == 0 and out.strip() == line

    def test_json(self, capsys):
        code, out, _ = run(capsys, "disc", "--json", data("hurwitz.json"))
        assert json.loads(out) == {"disc": "-64", "disc_mod_4": 0}

    def test_gram(self, capsys):
        code, out, _ = run(capsys, "gram", "--json", data("hurwitz.json"))
        assert json.loads(out) == [
            ["4", "0", "0", "-2"], ["0", "-4", "0", "-2"], ["0", "0", "-4", "-2"], ["-2", "-2", "-2", "-2"]
        ]
        code, out, _ = run(capsys, "gram", data("sqrt5.json"))
        assert code == 0 and "10" in out


class TestDpf:
    def test_quadratic(self, capsys, tmp_path):
        p = tmp_path / "q.json"
        assert run(capsys, "gen", "quadratic", "--b", 3, "--c", 1, "--out", p)[0] == 0
        code, out, _ = run(capsys, "dpf", p)
        assert code == 0 and out.strip() == "dpf = 3, dpf^2 mod 4 = 1"

    def test_rank_one(self, capsys, tmp_path):
        p = tmp_path / "z.json"
        run(capsys, "gen", "monogenic", "--coeffs=-4,1", "--out", p)
        assert run(capsys, "dpf", p)[1].startswith("dpf = 1,")

    def test_hurwitz(self, capsys):
        code, out, _ = run(capsys, "dpf", "--json", data("hurwitz.json"))
        assert json.loads(out)["dpf_sq_mod_4"] == 0

    def test_non_unital_input(self, capsys):
        code, out, _ = run(capsys, "dpf", data("m2.json"))
        assert code == 0 and out.strip().endswith("dpf^2 mod 4 = 0")


class TestCertificates:
    @pytest.mark.parametrize("name", sorted(SHIPPED))
    def test_round_trip(self, capsys, tmp_path, name):
        cert = tmp_path / "c.json"
        code, out, _ = run(capsys, "certificate", data(name), "--out", cert)
        assert code == 0 and "certificate written" in out
        assert json.loads(cert.read_text())["source"] == f"ring:{name}"
        code, out, _ = run(capsys, "verify", cert, data(name))
        assert code == 0 and out.strip() == "certificate verified"

    @pytest.mark.parametrize("name", sorted(SHIPPED))
    @pytest.mark.parametrize("field", ["pf_value", "dpf_value", "disc_value", "residue", "pad_count"])
    def test_single_field_tamper(self, capsys, tmp_path, name, field):
        cert = tmp_path / "c.json"
        run(capsys, "certificate", data(name), "--out", cert)
        obj = json.loads(cert.read_text())
        obj[field] = int(obj[field]) + 1
        cert.write_text(json.dumps(obj))
        code, out, _ = run(capsys, "verify", cert, data(name))
        assert code == 1 and "verification failed" in out

    def test_stdout_and_padded_hurwitz(self, capsys, tmp_path):
        from discpf.ring_core import pad_with_Z, save_ring

        p = tmp_path / "h8.json"
        save_ring(pad_with_Z(C.hurwitz_quaternions(), 4), p)
        code, out, _ = run(capsys, "certificate", p)
        obj = json.loads(out)
        assert code == 0 and obj["disc_value"] == -64 and len(obj["B"]) == 8

    def test_bad_certificate_file(self, capsys, tmp_path):
        cert = tmp_path / "c.json"
        cert.write_text(json.dumps({"format_version": 1}))
        assert run(capsys, "verify", cert, data("hurwitz.json"))[0] == 2

    def test_verify_json(self, capsys, tmp_path):
        cert = tmp_path / "c.json"
        run(capsys, "certificate", data("sqrt5.json"), "--out", cert)
        code, out, _ = run(capsys, "verify", "--json", cert, data("quadratic_1_1.json"))
        assert code == 1 and json.loads(out) == {"verified": False, "reason": "gram mismatch"}


class TestGen:
    def test_sqrt(self, capsys, tmp_path):
        p = tmp_path / "s.json"
        run(capsys, "gen", "sqrt", "--d", 5, "--out", p)
        assert run(capsys, "disc", p)[1].startswith("disc = 20,")

    def test_matrix(self, capsys, tmp_path):
        p = tmp_path / "m.json"
        run(capsys, "gen", "matrix", "--m", 2, "--out", p)
        assert load_ring(p).rank == 4

    def test_random_deterministic(self, capsys):
        a = run(capsys, "gen", "random", "--seed", 7, "--max-rank", 10)
        b = run(capsys, "gen", "random", "--seed", 7, "--max-rank", 10)
        assert a == b and a[0] == 0
        assert json.loads(a[1])["rank"] <= 10

    def test_stdout_is_ring_file(self, capsys):
        code, out, _ = run(capsys, "gen", "hurwitz")
        assert out == dumps_ring(C.hurwitz_quaternions())

    def test_group(self, capsys, tmp_path):
        code, out, _ = run(capsys, "gen", "group", "--name", "Q8")
        assert code == 0 and json.loads(out)["rank"] == 8
        assert run(capsys, "gen", "group", "--name", "nope")[0] == 1
        p = tmp_path / "t.json"
        p.write_text(json.dumps([[0, 1], [0, 1]]))
        assert run(capsys, "gen", "group", "--cayley", p)[0] == 1
        p.write_text(json.dumps([[0, 1], [1, 0]]))
        assert run(capsys, "gen", "group", "--cayley", p)[0] == 0

    def test_product(self, capsys):
        code, out, _ = run(capsys, "gen", "product", data("hurwitz.json"), data("sqrt5.json"))
        assert code == 0 and json.loads(out)["rank"] == 6

    def test_monogenic_errors(self, capsys):
        assert run(capsys, "gen", "monogenic", "--coeffs", "1,2")[0] == 1
        assert run(capsys, "gen", "monogenic", "--coeffs", "1,x")[0] == 2


class TestSelftest:
    def test_default(self, capsys):
        code, out, _ = run(capsys, "selftest", "--count", 20)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines and all(line.startswith("PASS") for line in lines)

    def test_json_stable(self, capsys):
        a = run(capsys, "selftest", "--count", 5, "--seed", 3, "--json")
        b = run(capsys, "selftest", "--count", 5, "--seed", 3, "--json")
        assert a == b
        assert all(r["passed"] == r["total"] == 5 for r in json.loads(a[1]))


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "discpf", "disc", data("hurwitz.json")], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "disc = -64, disc mod 4 = 0"
