"""Tests for the stairtab command line."""
import argparse
import io
import json

import pytest
from unittest.mock import patch

from stairtab import config
from stairtab.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, cell_arg, emit_report, int_list, main
from stairtab.models import VerifyReport
from stairtab.shapes import Cell
from stairtab.symfunc import MultiPoly


def lines(capsys):
    return capsys.readouterr().out.splitlines()


class TestVerify:
    """Test suite for the verify command."""

    def test_json_report(self, capsys):
        """Test verify prints one JSON report with stable field order."""
        assert main(["verify", "thm2", "--n", "3", "--mu", "2", "--m", "3"]) == EXIT_OK
        assert lines(capsys) == ['{"theorem": "thm2", "params": {"n": 3, "m": 3, "mu": [2]}, "pass": true}']

    def test_timing_adds_elapsed(self, capsys):
        """Test --timing appends elapsed seconds to the report."""
        assert main(["verify", "thm4", "--n", "1", "--m", "1", "--timing"]) == EXIT_OK
        report = json.loads(lines(capsys)[0])
        assert list(report) == ["theorem", "params", "pass", "elapsed"]
        assert report["elapsed"] >= 0

    def test_summary(self, capsys):
        """Test --format summary prints a table and a totals line."""
        assert main(["verify", "thm2", "--n", "3", "--mu", "2", "--m", "3", "--format", "summary"]) == EXIT_OK
        out = lines(capsys)
        assert out[0].startswith("PASS  thm2")
        assert out[-1] == "1 checked, 1 passed, 0 failed"

    def test_index_sets_and_letter(self, capsys):
        """Test --set and --letter reach the report params."""
        assert main(["verify", "thm1", "--n", "2", "--m", "2", "--set", "2", "--letter", "1"]) == EXIT_OK
        params = json.loads(lines(capsys)[0])["params"]
        assert params["set"] == [2]
        assert params["letter"] == 1

    def test_random_samples_use_the_seed(self, capsys):
        """Test --random records the sample count and the seed."""
        assert main(["verify", "jdt-laws", "--n", "4", "--m", "2", "--random", "3"]) == EXIT_OK
        params = json.loads(lines(capsys)[0])["params"]
        assert params["samples"] == 3
        assert params["seed"] == config.SEED

    @patch("stairtab.verify.qtr_poly")
    def test_failure_exit_code(self, mock_qtr, capsys):
        """Test a failing check exits 1 with a counterexample."""
        mock_qtr.return_value = MultiPoly.zero(2)
        assert main(["verify", "thm4", "--n", "2", "--m", "2"]) == EXIT_FAIL
        report = json.loads(lines(capsys)[0])
        assert report["pass"] is False
        assert "counterexample" in report

    def test_usage_error_exit_code(self, capsys):
        """Test inadmissible parameters exit 2 with a message."""
        assert main(["verify", "cor-final", "--n", "2", "--m", "2", "--lambda", "3"]) == EXIT_USAGE
        assert "exceeds" in capsys.readouterr().err

    def test_bad_arguments(self):
        """Test argparse rejects malformed lists and unknown theorems with code 2."""
        with pytest.raises(SystemExit) as exc:
            main(["verify", "thm2", "--mu", "a,b"])
        assert exc.value.code == EXIT_USAGE
        with pytest.raises(SystemExit) as exc:
            main(["verify", "thm9"])
        assert exc.value.code == EXIT_USAGE

    @patch("stairtab.cli.run_verify")
    def test_unexpected_error(self, mock_verify):
        """Test an unexpected exception exits 1."""
        mock_verify.side_effect = RuntimeError("boom")
        assert main(["verify", "thm2", "--n", "1", "--m", "1"]) == EXIT_FAIL


class TestSweep:
    """Test suite for the sweep command."""

    def test_smallest_sweep_is_a_single_pass(self, capsys):
        """Test sweep thm2 at n=1, m=1 checks only delta(1)."""
        assert main(["sweep", "thm2", "--n", "1", "--m", "1", "--size-max", "1"]) == EXIT_OK
        reports = [json.loads(line) for line in lines(capsys)]
        assert reports == [{"theorem": "thm2", "params": {"n": 1, "m": 1, "mu": []}, "pass": True}]

    @patch("stairtab.cli.run_sweep")
    def test_sweep_all(self, mock_sweep, capsys):
        """Test sweep all runs each theorem with the shared flags."""
        mock_sweep.side_effect = lambda theorem, **kwargs: [VerifyReport(theorem, {"n": kwargs["n_max"]})]
        assert main(["sweep", "all", "--n", "2", "--jobs", "3"]) == EXIT_OK
        assert mock_sweep.call_count == 9
        assert mock_sweep.call_args.kwargs["jobs"] == 3
        assert mock_sweep.call_args.kwargs["size_max"] is None
        assert len(lines(capsys)) == 9

    @patch("stairtab.cli.run_sweep")
    def test_size_max_is_passed_through(self, mock_sweep):
        """Test an explicit --size-max reaches run_sweep."""
        mock_sweep.return_value = []
        assert main(["sweep", "thm3", "--size-max", "5"]) == EXIT_OK
        assert mock_sweep.call_args.kwargs["size_max"] == 5

    def test_help_names_the_per_theorem_defaults(self, capsys):
        """Test the sweep help lists each theorem's default shape size."""
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--help"])
        assert exc.value.code == EXIT_OK
        text = "".join(capsys.readouterr().out.split())
        assert "emptyshape" in text
        for theorem, size in config.DEFAULT_SIZE_MAX_BY_THEOREM.items():
            assert f"{size}for{theorem}" in text


class TestOtherCommands:
    """Test suite for enumerate, gf and expand."""

    def test_gf_golden(self, capsys, fixtures_dir):
        """Test gf qtr matches the stored polynomial JSON."""
        assert main(["gf", "--kind", "qtr", "--lambda", "2", "--m", "1"]) == EXIT_OK
        expected = (fixtures_dir / "polys" / "qtr_2_m1.json").read_text().splitlines()
        assert lines(capsys) == expected

    def test_gf_summary(self, capsys):
        """Test gf --format summary prints the readable polynomial."""
        assert main(["gf", "--lambda", "1", "--m", "1", "--format", "summary"]) == EXIT_OK
        assert lines(capsys) == ["r*x1 + t*x1"]

    def test_gf_on_the_staircase(self, capsys):
        """Test the doubled and qtr generating functions agree on delta(2)/(1)."""
        assert main(["gf", "--kind", "doubled", "--n", "2", "--mu", "1", "--m", "2"]) == EXIT_OK
        doubled = lines(capsys)
        assert main(["gf", "--kind", "qtr", "--n", "2", "--mu", "1", "--m", "2"]) == EXIT_OK
        assert lines(capsys) == doubled

    def test_expand_yamanouchi_golden(self, capsys, fixtures_dir):
        """Test expand --yamanouchi matches the stored expansion."""
        assert main(["expand", "--yamanouchi", "--lambda", "1,1", "--m", "2"]) == EXIT_OK
        expected = (fixtures_dir / "expansions" / "yamanouchi_11_m2.jsonl").read_text().splitlines()
        assert lines(capsys) == expected

    def test_expand_schur(self, capsys):
        """Test expand prints one JSON line per Schur coefficient."""
        assert main(["expand", "--kind", "schur", "--lambda", "2,1", "--mu", "1", "--m", "2"]) == EXIT_OK
        one = [{"coeff": 1, "x": [0, 0], "t": 0, "r": 0}]
        assert [json.loads(line) for line in lines(capsys)] == [
            {"partition": [2], "coeff": one},
            {"partition": [1, 1], "coeff": one},
        ]

    def test_expand_rejects_asymmetric_input(self, capsys):
        """Test expanding a non-symmetric polynomial exits 2."""
        # G((2), {1}) gives x1*x2 + x2^2
        assert main(["expand", "--kind", "gst", "--lambda", "2", "--set", "1", "--m", "2"]) == EXIT_USAGE
        assert "not symmetric" in capsys.readouterr().err

    def test_enumerate(self, capsys):
        """Test enumerate lists GSTs and Q-tableaux in letter order."""
        assert main(["enumerate", "--lambda", "2", "--m", "2"]) == EXIT_OK
        assert len(lines(capsys)) == 3
        assert main(["enumerate", "--kind", "qtab", "--lambda", "1", "--m", "1"]) == EXIT_OK
        out = [json.loads(line) for line in lines(capsys)]
        assert [entry["entries"][0]["primed"] for entry in out] == [True, False]


class TestJdtTrace:
    """Test suite for the jdt-trace command."""

    @pytest.mark.parametrize(
        "args, golden",
        [
            (["tableaux/forward_tie.json", "--hole", "1,1"], "forward_tie_empty_set.json"),
            (["tableaux/forward_tie.json", "--hole", "1,1", "--set", "1"], "forward_tie_set_1.json"),
            (["tableaux/reverse_single.json", "--direction", "reverse", "--hole", "1,2"], "reverse_single.json"),
        ],
    )
    def test_traces_match_goldens(self, args, golden, capsys, fixtures_dir):
        """Test jdt-trace output matches the stored traces."""
        path, *flags = args
        assert main(["jdt-trace", str(fixtures_dir / path), *flags]) == EXIT_OK
        expected = (fixtures_dir / "traces" / golden).read_text()
        assert capsys.readouterr().out == expected

    def test_invalid_tableau(self, tmp_path, capsys):
        """Test a tableau that is not a GST for I exits 2."""
        path = tmp_path / "row.json"
        path.write_text(json.dumps({"outer": [2], "entries": [
            {"row": 1, "col": 1, "value": 1},
            {"row": 1, "col": 2, "value": 1},
        ]}))
        assert main(["jdt-trace", str(path), "--set", "1", "--hole", "1,3"]) == EXIT_USAGE
        assert "not a valid GST" in capsys.readouterr().err

    def test_illegal_hole(self, fixtures_dir):
        """Test a hole that is not an inner corner exits 2."""
        path = str(fixtures_dir / "tableaux" / "forward_tie.json")
        assert main(["jdt-trace", path, "--hole", "2,1"]) == EXIT_USAGE

    @pytest.mark.parametrize("hole", ["1", "1,2,3", "0,1", "", "a,b"])
    def test_malformed_hole(self, hole, fixtures_dir, capsys):
        """Test a hole that is not two positive integers exits 2."""
        path = str(fixtures_dir / "tableaux" / "forward_tie.json")
        with pytest.raises(SystemExit) as exc:
            main(["jdt-trace", path, f"--hole={hole}"])
        assert exc.value.code == EXIT_USAGE
        assert "--hole" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """Test a missing tableau file exits 2."""
        assert main(["jdt-trace", str(tmp_path / "none.json"), "--hole", "1,1"]) == EXIT_USAGE

    def test_malformed_json(self, tmp_path):
        """Test a file whose outer shape is not a partition exits 2."""
        path = tmp_path / "bad.json"
        path.write_text('{"outer": [1, 2], "entries": []}')
        assert main(["jdt-trace", str(path), "--hole", "1,1"]) == EXIT_USAGE


class TestHelpers:
    """Test suite for argument and output helpers."""

    def test_int_list(self):
        """Test comma lists parse to integers."""
        assert int_list("2,1") == [2, 1]
        assert int_list("") == []

    def test_cell_arg(self):
        """Test row,col parses to a Cell and other input is rejected."""
        assert cell_arg("2,3") == Cell(2, 3)
        for text in ("1", "1,2,3", "0,1", "1,-1", "x,1"):
            with pytest.raises(argparse.ArgumentTypeError):
                cell_arg(text)

    def test_emit_report(self):
        """Test the summary format and the exit code of mixed reports."""
        stream = io.StringIO()
        reports = [VerifyReport("thm2", {"n": 1}), VerifyReport("thm4", {"n": 1}, False, {"error": "x"}, 0.5)]
        assert emit_report(reports, "summary", timing=True, stream=stream) == EXIT_FAIL
        text = stream.getvalue()
        assert "FAIL  thm4" in text and "(0.500s)" in text
        assert text.endswith("2 checked, 1 passed, 1 failed\n")
        assert emit_report([], stream=io.StringIO()) == EXIT_OK
