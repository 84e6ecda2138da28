import json
import subprocess
import sys
from fractions import Fraction

import pytest

from panint import gen_capacity
from panint.cli import main
from panint.core import PanintError
from panint.io import (
    capacity_from_json,
    capacity_to_json,
    dumps,
    fixture_path,
    format_number,
    function_from_json,
    function_to_json,
    parse_number,
)

F = Fraction
CAP = str(fixture_path("golden4.capacity.json"))
FUN = str(fixture_path("golden4.f.json"))


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestNumbers:
    @pytest.mark.parametrize("x,text", [
        (F(1, 2), "0.5"), (F(-3, 8), "-0.375"), (F(7), "7"), (F(1, 3), "1/3"), (F(-1, 20), "-0.05"),
    ])
    def test_format(self, x, text):
        assert format_number(x) == text
        assert parse_number(text, exact=True) == x

    def test_float_roundtrip(self):
        x = 0.1 + 0.2
        assert parse_number(json.loads(json.dumps(format_number(x))), exact=False) == x

    def test_bool_rejected(self):
        with pytest.raises(PanintError):
            parse_number(True, exact=True)


class TestCapacityJson:
    @pytest.mark.parametrize("exact", [True, False])
    def test_roundtrip(self, exact):
        mu = gen_capacity(5, seed=4, family="monotone-random", exact=exact)
        back = capacity_from_json(json.loads(dumps(capacity_to_json(mu))), exact=exact)
        assert back == mu

    def test_function_roundtrip(self, golden):
        mu, f = golden
        assert function_from_json(function_to_json(f), mu.space) == f

    @pytest.mark.parametrize("entry", [
        {"set": [1, 0], "value": 1},
        {"set": [0, 7], "value": 1},
        {"set": [], "value": 1},
    ])
    def test_bad_sets(self, entry):
        data = {"points": ["a", "b"], "mu": [entry]}
        with pytest.raises(PanintError):
            capacity_from_json(data)

    def test_duplicate(self):
        data = {"points": ["a"], "mu": [{"set": [0], "value": 1}, {"set": [0], "value": 2}]}
        with pytest.raises(PanintError):
            capacity_from_json(data)

    def test_missing_keys(self):
        with pytest.raises(PanintError):
            capacity_from_json({"mu": []})

    def test_bad_file(self, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{not json")
        with pytest.raises(PanintError):
            capacity_from_json(p)

    def test_dumps_layout(self):
        text = dumps({"a": [1, 2], "b": {"c": [{"d": 1}]}})
        assert text == '{\n  "a": [1, 2],\n  "b": {\n    "c": [\n      {"d": 1}\n    ]\n  }\n}\n'


class TestCli:
    def test_compute_signed(self, capsys):
        code, out = run(capsys, "compute", CAP, FUN, "--kind", "pan-signed", "--exact", "--witness")
        data = json.loads(out)
        assert code == 0
        assert data["value"] == "0"
        assert data["witness"]["positive"] == [{"set": [0, 2], "coefficient": "1"}]

    @pytest.mark.parametrize("kind,value", [
        ("choquet-sym", "0"), ("choquet-asym", "0.5"),
    ])
    def test_compute_choquet(self, capsys, kind, value):
        code, out = run(capsys, "compute", CAP, FUN, "--kind", kind, "--exact")
        assert code == 0 and json.loads(out)["value"] == value

    def test_compute_concave(self, capsys, tmp_path):
        f = tmp_path / "f.json"
        f.write_text('{"values": [2, 2, 1, 1]}')
        code, out = run(capsys, "compute", CAP, str(f), "--kind", "concave", "--exact", "--witness")
        data = json.loads(out)
        assert code == 0 and data["value"] == "10" and data["engine"] == "lp"
        assert "weights" in data["witness"]

    def test_negative_input_error(self, capsys):
        code, out = run(capsys, "compute", CAP, FUN, "--kind", "pan")
        assert code == 1
        assert json.loads(out)["error"] == "NegativeInput"

    def test_non_monotone_error(self, capsys, tmp_path):
        cap = tmp_path / "c.json"
        cap.write_text(json.dumps({"points": ["x1", "x2"], "mu": [
            {"set": [0], "value": 2}, {"set": [1], "value": 1}, {"set": [0, 1], "value": 1}]}))
        code, out = run(capsys, "check", str(cap))
        data = json.loads(out)
        assert code == 1 and data["error"] == "NonMonotone" and data["witness"] == [[0], [0, 1]]

    def test_check(self, capsys):
        code, out = run(capsys, "check", CAP, "--exact")
        data = json.loads(out)
        assert data["subadditive"]["holds"] is False
        assert data["subadditive"]["witness"] == [[0], [2]]
        assert data["minimal_atoms"] == [[0], [1], [2], [3]]

    def test_norm(self, capsys):
        code, out = run(capsys, "norm", CAP, FUN, "--exact", "--p", "1")
        assert code == 0 and json.loads(out)["norm"] == "8"

    def test_verify_ok_and_output_file(self, capsys, tmp_path):
        out = tmp_path / "r.json"
        code, _ = run(capsys, "verify", "--suite", "additivity", "--trials", "20", "--seed", "3", "-o", str(out))
        assert code == 0
        assert json.loads(out.read_text())["failures"] == 0

    def test_verify_failures_exit_2(self, capsys):
        code, out = run(capsys, "verify", "--suite", "additivity", "--trials", "20", "--capacity", CAP, "--exact")
        assert code == 2 and json.loads(out)["failures"] > 0

    def test_verify_zero_trials(self, capsys):
        code, out = run(capsys, "verify", "--suite", "linearity", "--trials", "0")
        assert code == 0 and json.loads(out)["failures"] == 0

    def test_verify_byte_identical(self, capsys):
        args = ("verify", "--suite", "disjoint", "--trials", "25", "--seed", "11", "--n", "2-6")
        _, a = run(capsys, *args)
        _, b = run(capsys, *args)
        assert a == b

    def test_search(self, capsys):
        code, out = run(capsys, "search", CAP, "--exact")
        data = json.loads(out)
        assert code == 0 and data["found"] is True

    def test_search_comonotone(self, capsys):
        code, out = run(capsys, "search", CAP, "--mode", "comonotone", "--budget", "200")
        assert json.loads(out)["found"] is True

    def test_family_and_capacity_exclusive(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--family", "additive", "--capacity", CAP])

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "panint", "compute", CAP, FUN, "--kind", "pan-signed", "--exact"],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == "0"
