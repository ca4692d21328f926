import json
import math

import pytest

from bohrcc import reference
from bohrcc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRadiusCommand:
    def test_sharp_janowski(self, capsys):
        code, out, _ = run_cli(
            capsys, "radius", "--class", "Sc", "--phi", "janowski", "--A", "1", "--B", "-1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["r_f"] == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-7)
        assert payload["sharp"] is True
        assert payload["spec"] == {"family": "janowski", "params": {"A": 1.0, "B": -1.0}}

    def test_ks_base_case(self, capsys):
        code, out, _ = run_cli(
            capsys, "radius", "--class", "Ks", "--phi", "sakaguchi", "--gamma", "0"
        )
        assert code == 0
        assert json.loads(out)["r_f"] == pytest.approx(0.257374415, abs=1e-7)

    def test_parameter_error_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, "radius", "--class", "Sc", "--phi", "lemniscate", "--s", "0"
        )
        assert code == 2
        assert "parameter error" in err

    def test_missing_parameter(self, capsys):
        code, _, err = run_cli(capsys, "radius", "--class", "Sc", "--phi", "janowski", "--A", "1")
        assert code == 2 and "requires --B" in err

    def test_extraneous_parameter(self, capsys):
        code, _, err = run_cli(
            capsys,
            "radius", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5", "--gamma", "0.1",
        )
        assert code == 2 and "does not take" in err

    def test_deterministic_output(self, capsys):
        argv = ("radius", "--class", "Cc", "--phi", "lemniscate", "--s", "0.5")
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "radius", "--class", "Sc", "--phi", "wang", "--alpha", "0.5", "--beta", "1",
            "--out", "csv",
        )
        assert code == 0
        header, row = out.strip().split("\n")
        assert header.startswith("class,family,params")
        assert row.startswith("Sc,wang,alpha=0.5;beta=1")

    def test_order_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("BOHR_ORDER", "48")
        code, out, _ = run_cli(
            capsys, "radius", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5"
        )
        assert code == 0
        assert json.loads(out)["r_f"] == pytest.approx(0.3040402, abs=1e-6)

    def test_bad_env_order(self, capsys, monkeypatch):
        monkeypatch.setenv("BOHR_ORDER", "many")
        code, _, err = run_cli(
            capsys, "radius", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5"
        )
        assert code == 2 and "BOHR_ORDER" in err


class TestTableCommand:
    def test_table1_diffs_within_tolerance(self, capsys):
        code, out, _ = run_cli(capsys, "table", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "s,r_f,reference,diff"
        assert len(lines) == 1 + 14
        for line in lines[1:]:
            _, r_f, ref, diff = line.split(",")
            assert abs(float(r_f) - float(ref)) <= 1e-4
            assert abs(float(diff)) <= 1e-4

    def test_table4_diffs_within_tolerance(self, capsys):
        code, out, _ = run_cli(capsys, "table", "4")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 1 + 20
        for line in lines[1:]:
            _, _, r_f, ref, diff = line.split(",")
            assert abs(float(r_f) - float(ref)) <= 1e-4

    @pytest.mark.parametrize("table_id,rows", [("2", reference.TABLE2), ("3", reference.TABLE3)])
    def test_growth_tables_signs(self, capsys, table_id, rows):
        code, out, _ = run_cli(capsys, "table", table_id)
        assert code == 0
        lines = out.strip().split("\n")[1:]
        assert len(lines) == len(rows)
        for line, (_, _, _, sign0, sign3) in zip(lines, rows):
            cells = line.split(",")
            assert cells[7] == sign0
            assert cells[8] == sign3

    def test_json_variant(self, capsys):
        code, out, _ = run_cli(capsys, "table", "2", "--out", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["table"] == 2 and len(payload["rows"]) == 8

    def test_deterministic(self, capsys):
        _, out1, _ = run_cli(capsys, "table", "2")
        _, out2, _ = run_cli(capsys, "table", "2")
        assert out1 == out2


class TestVerifyCommand:
    def test_clean_campaign(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5",
            "--samples", "25", "--seed", "42",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["failures"] == []
        assert payload["schema"] == 1

    def test_violation_beyond_sharp_radius(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5",
            "--samples", "3", "--seed", "1", "--r", "0.34",
        )
        assert code == 4
        assert json.loads(out)["failures"]

    def test_zero_samples_is_parameter_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            "verify", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5", "--samples", "0",
        )
        assert code == 2

    def test_deterministic_bytes(self, capsys):
        argv = (
            "verify", "--class", "Ks", "--phi", "sakaguchi", "--gamma", "0",
            "--samples", "10", "--seed", "9",
        )
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2


class TestScanCommand:
    def test_lemniscate_threshold_bracket(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "scan", "--equation", "sc-lemniscate",
            "--start", "0.44", "--stop", "0.45", "--step", "0.001",
        )
        assert code == 0
        payload = json.loads(out)
        assert 0.4449 < payload["threshold"] < 0.4450
        assert payload["bracket"] is not None

    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "scan", "--equation", "sc-lemniscate",
            "--start", "0.5", "--stop", "0.52", "--step", "0.01", "--out", "csv",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "param,r_f,in_sharp_window"
        assert len(lines) == 4

    def test_bad_grid(self, capsys):
        code, _, err = run_cli(
            capsys,
            "scan", "--equation", "sc-lemniscate",
            "--start", "0.5", "--stop", "0.4", "--step", "0.01",
        )
        assert code == 2


class TestNumericBudgetExit:
    def test_impossible_tolerance_exits_3(self, capsys):
        code, _, err = run_cli(
            capsys,
            "radius", "--class", "Sc", "--phi", "lemniscate", "--s", "0.5",
            "--tol", "1e-300",
        )
        assert code == 3
        assert "numeric error" in err
