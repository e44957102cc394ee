import json

import pytest

import lojex.cli as cli
from lojex.errors import ResourceCapError


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExponentCommand:
    def test_counterexample(self, capsys):
        code, out, _ = run(
            capsys,
            "exponent",
            "--weights",
            "1,2,3",
            "--function",
            "x1*x3+x2^2+x1^2*x2",
        )
        assert code == 0
        assert "value: 1" in out
        assert "determinacy: 2" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys,
            "exponent",
            "--weights",
            "1,2,3",
            "--function",
            "x^12+y^6+z^4",
            "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == {"num": "11", "den": "1"}
        assert payload["certificate"] == "ExactByMatching"
        assert payload["witness"] == {"tau": [1, 2, 3], "i0": 1}
        assert payload["determinacy"] == 12
        assert payload["warnings"] == []

    def test_degree_mismatch_is_input_error(self, capsys):
        code, _, err = run(
            capsys,
            "exponent",
            "--weights",
            "1,2,3",
            "--function",
            "x^12+y^6+z^4",
            "--degree",
            "13",
        )
        assert code == 1
        assert "input error" in err

    def test_jobs_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "exponent",
            "--weights",
            "1,2,3",
            "--function",
            "x1*x3+x2^2+x1^2*x2",
            "--smax",
            "4",
            "--jobs",
            "3",
        )
        assert code == 0
        assert "value: 1" in out


class TestIdealCommand:
    def test_axis_exponent(self, capsys):
        code, out, _ = run(capsys, "ideal", "l0", "--gens", "x^4,y^2")
        assert code == 0
        assert "value: 4" in out
        assert "ExactByAxis" in out

    def test_tuple_exponent(self, capsys):
        code, out, _ = run(
            capsys, "ideal", "l0", "--ideals", "x^4 | y^2", "--smax", "4"
        )
        assert code == 0
        assert "value: 4" in out

    def test_nubar(self, capsys):
        code, out, _ = run(
            capsys, "ideal", "nubar", "--gens", "x^2,y^3", "--function", "x*y"
        )
        assert code == 0
        assert "order: 5/6" in out

    def test_chain_warning_exit_code(self, capsys):
        code, out, _ = run(
            capsys,
            "ideal",
            "l0",
            "--ideals",
            "x^2,x*y | x^2,x*y",
            "--weights",
            "1,1",
            "--chain",
            "--smax",
            "4",
        )
        assert code == 2
        assert "warning" in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "ideal", "l0", "--gens", "x^^2")
        assert code == 1
        assert "input error" in err


class TestSigmaCommand:
    def test_infinite(self, capsys):
        code, out, _ = run(capsys, "sigma", "--ideals", "x*y,y^4 | x*y^2,y^5")
        assert code == 0
        assert "sigma: infinity" in out

    def test_finite_with_r(self, capsys):
        code, out, _ = run(capsys, "sigma", "--ideals", "x^4 | y^2")
        assert code == 0
        assert "sigma: 8" in out
        assert "r: 4" in out


class TestMatchingCommand:
    def test_five_variable_no_matching(self, capsys):
        code, out, _ = run(
            capsys,
            "matching",
            "--weights",
            "1,2,3,4,6",
            "--ideals",
            "x1^11 | x2^3*x4 | x3*x5 | x2^4,x4^2 | x3^2,x5",
        )
        assert code == 0
        assert "no w-matching" in out

    def test_witness_reported(self, capsys):
        code, out, _ = run(
            capsys,
            "matching",
            "--weights",
            "1,2,3",
            "--ideals",
            "x^11 | y^5 | z^3",
        )
        assert code == 0
        assert "tau=[1, 2, 3]" in out


class TestTransformCommand:
    def test_five_variable(self, capsys):
        code, out, _ = run(
            capsys,
            "transform",
            "--weights",
            "1,2,3,4,6",
            "--function",
            "x1^12+x2^4*x4+x4^3+x3^2*x5+x5^2",
        )
        assert code == 0
        assert "x4 = y4 +" in out and "y2^2" in out
        assert "x5 = y5 +" in out and "y3^2" in out
        assert "convenient: True" in out


class TestCorpusCommand:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "corpus")
        assert code == 0
        lines = [line for line in out.splitlines() if line.startswith(("PASS", "FAIL"))]
        assert len(lines) == 9
        assert all(line.startswith("PASS") for line in lines)


class TestJsonDiscipline:
    def test_round_trip_identity(self, capsys):
        _, out, _ = run(
            capsys, "sigma", "--ideals", "x^4 | y^2", "--json", "--seed", "5"
        )
        payload = json.loads(out)
        assert (
            json.dumps(payload, sort_keys=True, separators=(",", ":")) == out.strip()
        )

    def test_byte_identical_reruns(self, capsys):
        args = (
            "exponent",
            "--weights",
            "1,2,3",
            "--function",
            "x^16+y^8+x*z^5",
            "--json",
            "--seed",
            "9",
        )
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestExitCodes:
    def test_resource_cap_maps_to_3(self, capsys, monkeypatch):
        def explode(*args, **kwargs):
            raise ResourceCapError("forced")

        monkeypatch.setattr(cli, "loj_gradient", explode)
        code, _, err = run(
            capsys, "exponent", "--weights", "1,1", "--function", "x*y"
        )
        assert code == 3
        assert "resource cap" in err
