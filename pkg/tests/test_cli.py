"""Command-line interface: grammar, output formats, exit codes."""

import csv
import io
import json
import math

import pytest

from wittenzeta import cli
from wittenzeta.errors import ConvergenceError

S3_TEXT = """group S3 6
classes 1 3 2
irrep 1 1 1 1
irrep 1 1 -1 1
irrep 2 2 0 -1
"""


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasics:
    def test_polylog_closed(self, capsys):
        code, out, _ = run(capsys, "polylog", "closed", "--m", "3")
        assert code == 0
        assert "exact" in out and "4*x^2" in out

    def test_su2_eval_text(self, capsys):
        code, out, _ = run(capsys, "su2", "eval", "--s", "2",
                           "--theta-pi", "1/3")
        assert code == 0
        assert "su2 eval s=2" in out

    def test_polylog_theta_zero_is_zeta(self, capsys):
        code, out, _ = run(capsys, "polylog", "eval", "--s", "2",
                           "--theta", "0", "--format", "json")
        assert code == 0
        rec = json.loads(out)
        assert rec["value"]["re"] == pytest.approx(math.pi ** 2 / 6, abs=1e-9)


class TestFormats:
    def test_json_record_shape(self, capsys):
        code, out, _ = run(capsys, "su2", "eval", "--s", "-1",
                           "--theta-pi", "1/2", "--format", "json")
        assert code == 0
        rec = json.loads(out)
        assert set(rec) == {"query", "value", "error", "ms"}
        assert rec["value"]["re"] == pytest.approx(0.5, abs=1e-9)
        assert rec["error"] == 1e-10

    def test_json_exact_value(self, capsys):
        code, out, _ = run(capsys, "su3", "special", "--n", "2",
                           "--format", "json")
        rec = json.loads(out)
        assert code == 0
        assert rec["value"] == "0" and rec["error"] == "exact"

    def test_json_rational_function(self, capsys):
        code, out, _ = run(capsys, "padic", "limit", "--family", "sl2cong",
                           "--format", "json")
        rec = json.loads(out)
        assert code == 0
        assert rec["value"] == {"num": ["2", "1"], "den": ["-1", "1"],
                                "var": "s"}

    def test_csv_header_and_quoting(self, capsys):
        code, out, _ = run(capsys, "su2", "multi", "--s", "-2",
                           "--theta-pi", "1/2,1/2,1/2", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["query", "value_re", "value_im", "error", "ms"]
        assert len(rows) == 2
        assert float(rows[1][1]) == pytest.approx(math.pi / 4, abs=1e-9)


class TestPrecision:
    def test_flag_changes_budget(self, capsys):
        code, out, _ = run(capsys, "su2", "eval", "--s", "2",
                           "--theta-pi", "1/3", "--format", "json",
                           "--precision", "12")
        rec = json.loads(out)
        assert code == 0 and rec["error"] == 1e-12

    def test_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("WITTENZETA_PRECISION", "8")
        code, out, _ = run(capsys, "su2", "eval", "--s", "2",
                           "--theta-pi", "1/3", "--format", "json")
        rec = json.loads(out)
        assert code == 0 and rec["error"] == 1e-8

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("WITTENZETA_PRECISION", "8")
        code, out, _ = run(capsys, "su2", "eval", "--s", "2",
                           "--theta-pi", "1/3", "--format", "json",
                           "--precision", "11")
        rec = json.loads(out)
        assert code == 0 and rec["error"] == 1e-11

    def test_out_of_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "su2", "eval", "--s", "2",
                           "--theta-pi", "1/3", "--precision", "20")
        assert code == 2 and "precision" in err


class TestExitCodes:
    def test_usage_error_from_argparse(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["nonsense", "eval"])
        assert exc.value.code == 2

    def test_missing_angle_is_usage_error(self, capsys):
        code, _, err = run(capsys, "su2", "eval", "--s", "2")
        assert code == 2 and "angle" in err

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "su3", "eval", "--s", "0.5")
        assert code == 3 and "pole" in err

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "padic", "eval", "--family", "so5",
                           "--s", "0")
        assert code == 3 and "so5" in err

    def test_convergence_error(self, capsys, monkeypatch):
        def boom(args, budget):
            raise ConvergenceError("did not converge", achieved=None)
        monkeypatch.setitem(cli._HANDLERS, "su2", boom)
        code, _, err = run(capsys, "su2", "eval", "--s", "2",
                           "--theta", "1")
        assert code == 4 and "converge" in err


class TestFinite:
    def test_builtin_table(self, capsys):
        code, out, _ = run(capsys, "finite", "eval", "--family", "q8",
                           "--s", "-2", "--class", "0")
        assert code == 0 and "= 8" in out

    def test_table_file(self, capsys, tmp_path):
        path = tmp_path / "s3.tbl"
        path.write_text(S3_TEXT)
        code, out, _ = run(capsys, "finite", "eval", "--table", str(path),
                           "--s", "-2", "--class", "1")
        assert code == 0 and "= 0" in out

    def test_malformed_table(self, capsys, tmp_path):
        path = tmp_path / "bad.tbl"
        path.write_text("group G 6\nclasses 1 2 3\nirrep 1 1 1 1\n")
        code, _, err = run(capsys, "finite", "eval", "--table", str(path),
                           "--s", "0", "--class", "0")
        assert code == 3

    def test_average(self, capsys):
        code, out, _ = run(capsys, "finite", "average", "--family", "s3",
                           "--s", "1.7", "--format", "json")
        rec = json.loads(out)
        assert code == 0
        assert rec["value"]["re"] == pytest.approx(1.0, abs=1e-12)


class TestVerifyCommand:
    def test_passing_suite_exits_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "core")
        assert code == 0
        assert "3/3 checks passed" in out

    def test_su3_suite_reports_documented_pole_failure(self, capsys):
        # the s = 1/2 point is a genuine pole, so the listed strip check
        # there fails by design and the suite honestly reports it
        code, out, _ = run(capsys, "verify", "--suite", "su3")
        assert code == 1
        assert "FAIL" in out and "s=0.5" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "padic",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert all(item["passed"] for item in data)


class TestPadicCli:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "padic", "list")
        assert code == 0
        for key in ("sl2zp", "sl2cong", "sl3cong", "su3cong"):
            assert key in out

    def test_zero_with_witness(self, capsys):
        code, out, _ = run(capsys, "padic", "zero", "--family", "su3cong",
                           "--s", "-1", "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert records[0]["value"] is False
        assert records[1]["value"]["var"] == "p"

    def test_factor_check(self, capsys):
        code, out, _ = run(capsys, "padic", "factor-check",
                           "--family", "sl3cong", "--format", "json")
        rec = json.loads(out)
        assert code == 0 and rec["value"] is True
