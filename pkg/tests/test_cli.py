import io
import math

import pytest

from stablekit.cli import build_parser, emit_csv, run


def _lines(capsys):
    return capsys.readouterr().out.splitlines()


class TestParsing:
    def test_alpha_fraction_ok(self):
        args = build_parser().parse_args(
            ["pdf", "--alpha", "3/2", "--grid=-1:1:3"]
        )
        assert (args.alpha.p, args.alpha.q) == (3, 2)

    def test_alpha_reduces(self):
        args = build_parser().parse_args(["pdf", "--alpha", "2/4", "--grid", "0:1:2"])
        assert (args.alpha.p, args.alpha.q) == (1, 2)

    def test_alpha_decimal_rejected(self):
        with pytest.raises(SystemExit) as e:
            build_parser().parse_args(["pdf", "--alpha", "1.5", "--grid", "0:1:2"])
        assert e.value.code == 2

    def test_alpha_out_of_range_rejected(self):
        with pytest.raises(SystemExit) as e:
            build_parser().parse_args(["pdf", "--alpha", "5/2", "--grid", "0:1:2"])
        assert e.value.code == 2

    def test_grid_malformed_rejected(self):
        with pytest.raises(SystemExit) as e:
            build_parser().parse_args(["pdf", "--alpha", "1/2", "--grid", "0:1"])
        assert e.value.code == 2

    def test_missing_command_usage_error(self):
        with pytest.raises(SystemExit) as e:
            build_parser().parse_args([])
        assert e.value.code == 2


class TestEmitCsv:
    def test_two_point_grid_three_lines(self):
        buf = io.StringIO()
        emit_csv([(0.0, 0.5, 1e-12, "closed"), (1.0, 0.25, 1e-12, "closed")], buf)
        lines = buf.getvalue().split("\n")
        assert lines[0] == "x,density,abs_error,method"
        assert len(lines) == 4 and lines[-1] == ""

    def test_roundtrip_17_digits(self):
        vals = [math.pi / 7.0, 1.0 / 3.0, 2.0 ** -40]
        buf = io.StringIO()
        emit_csv([(v, v, v, "m") for v in vals], buf)
        for v, line in zip(vals, buf.getvalue().splitlines()[1:]):
            x, d, e, _ = line.split(",")
            assert float(x) == v and float(d) == v and float(e) == v

    def test_lf_endings(self):
        buf = io.StringIO()
        emit_csv([(0.0, 0.1, 0.0, "m")], buf)
        assert "\r" not in buf.getvalue()


class TestPdfCommand:
    def test_cauchy_closed_row(self, capsys):
        rc = run(
            [
                "pdf", "--alpha", "1/1", "--beta", "0", "--c", "1", "--tau", "0",
                "--t", "1", "--grid", "-5:5:11", "--method", "closed",
            ]
        )
        assert rc == 0
        lines = _lines(capsys)
        assert lines[0] == "x,density,abs_error,method"
        assert len(lines) == 12
        mid = lines[6].split(",")  # x = 0 row
        assert float(mid[0]) == 0.0
        assert float(mid[1]) == pytest.approx(1.0 / math.pi, rel=1e-14)
        assert mid[3] == "closed"

    def test_gaussian_peak_row(self, capsys):
        rc = run(
            ["pdf", "--alpha", "2/1", "--tau", "0.5", "--grid", "0.5:2:2"]
        )
        assert rc == 0
        first = _lines(capsys)[1].split(",")
        assert float(first[1]) == pytest.approx(1 / (2 * math.sqrt(math.pi)), rel=1e-12)

    def test_densities_nonnegative(self, capsys):
        rc = run(["pdf", "--alpha", "3/4", "--beta", "0.5", "--grid", "-8:8:33"])
        assert rc == 0
        for line in _lines(capsys)[1:]:
            assert float(line.split(",")[1]) >= 0.0

    def test_deterministic_output(self, capsys):
        argv = ["pdf", "--alpha", "4/3", "--beta", "-0.3", "--grid", "-3:3:13"]
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_threads_preserve_order(self, capsys):
        argv = ["pdf", "--alpha", "3/2", "--grid", "-4:4:17"]
        assert run(argv) == 0
        base = capsys.readouterr().out
        assert run(argv + ["--threads", "4"]) == 0
        threaded = capsys.readouterr().out
        assert base == threaded

    def test_numerical_failure_exit_3(self, capsys):
        # series-small is invalid for alpha < 1: numerical failure, exit 3
        rc = run(
            ["pdf", "--alpha", "1/2", "--grid", "1:2:3", "--method", "series-small"]
        )
        assert rc == 3

    def test_auto_records_method_per_point(self, capsys):
        rc = run(["pdf", "--alpha", "4/5", "--grid", "0.05:6:5", "--method", "auto"])
        assert rc == 0
        methods = {line.split(",")[3] for line in _lines(capsys)[1:]}
        assert "oracle" in methods  # small-z fallback
        assert "hyper-large" in methods

    def test_out_file(self, tmp_path):
        out = tmp_path / "table.csv"
        rc = run(["pdf", "--alpha", "1/1", "--grid", "-1:1:5", "--out", str(out)])
        assert rc == 0
        text = out.read_text()
        assert text.startswith("x,density,abs_error,method\n")
        assert len(text.splitlines()) == 6


class TestValidateCommand:
    def test_farey5_suite_passes(self, capsys):
        rc = run(["validate", "--suite", "farey5", "--tol", "1e-6"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.count("alpha=") == 15  # Farey-5 (10) + superdiffusive five
        assert "FAIL" not in out

    def test_unknown_suite(self, capsys):
        assert run(["validate", "--suite", "nope"]) == 2

    def test_impossible_tolerance_fails_exit_3(self, capsys):
        rc = run(["validate", "--suite", "farey5", "--tol", "1e-18"])
        assert rc == 3


class TestResolventCommand:
    def test_gaussian_mu_table(self, capsys):
        rc = run(
            ["resolvent", "--alpha", "2/1", "--lam", "1.0", "--grid", "-5:5:11"]
        )
        assert rc == 0
        lines = _lines(capsys)
        assert len(lines) == 12
        row = lines[6].split(",")
        x = float(row[0])
        ref = math.exp(-abs(x)) / 2.0  # normalized two-sided exponential
        assert float(row[1]) == pytest.approx(ref, abs=1e-4)
