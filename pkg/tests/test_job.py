"""Tests for sweep case generation and execution."""
import time

import pytest
from unittest.mock import patch

from stairtab import config
from stairtab.errors import UsageError
from stairtab.job import default_size_max, index_subsets, run_case, run_sweep, sweep_cases
from stairtab.models import THEOREMS, VerifyReport


def failures(reports):
    return [r.to_dict() for r in reports if not r.passed]


class TestSweepCases:
    """Test suite for canonical case lists."""

    def test_index_subsets(self):
        """Test index sets come by size, then lexicographically."""
        assert index_subsets(2) == [[], [1], [2], [1, 2]]
        assert index_subsets(0) == [[]]

    def test_thm2_single_trivial_case(self):
        """Test the smallest thm2 sweep is the single box delta(1)."""
        assert sweep_cases("thm2", 1, 1, 1) == [("thm2", {"n": 1, "m": 1, "mu": []})]

    def test_staircase_sweeps_skip_the_empty_shape(self):
        """Test mu = delta(n) never appears in a staircase sweep."""
        for theorem in ("thm1", "thm2", "thm4", "cor-tr-sym", "jdt-laws"):
            for _, params in sweep_cases(theorem, 3, 1, 1):
                delta = list(range(params["n"], 0, -1))
                assert params["mu"] != delta, (theorem, params)

    def test_thm1_uses_ordered_pairs_of_distinct_sets(self):
        """Test thm1 pairs every source set with every other target set."""
        cases = sweep_cases("thm1", 1, 1, 1)
        assert [(p["set"], p["set2"]) for _, p in cases] == [([], [1]), ([1], [])]
        assert len(sweep_cases("thm1", 1, 2, 1)) == 12

    def test_thm3_takes_as_many_variables_as_boxes(self):
        """Test thm3 cases use |lambda/mu| variables."""
        cases = sweep_cases("thm3", 2, 1, 2)
        assert cases
        for _, params in cases:
            size = sum(params["lambda"]) - sum(params["mu"])
            assert params["m"] == size
            assert params["n"] == 2

    def test_restricted_shapes_stay_in_bounds(self):
        """Test cor-final shapes fit in n rows and n columns."""
        for _, params in sweep_cases("cor-final", 2, 2, 3):
            assert len(params["lambda"]) <= 2
            assert max(params["lambda"], default=0) <= 2
            assert params["n"] == 2

    def test_unrestricted_shapes(self):
        """Test unrestricted cases drop n and carry the flag."""
        cases = sweep_cases("prop-tr", 1, 2, 2, unrestricted=True)
        assert all(params["unrestricted"] and "n" not in params for _, params in cases)
        assert ("prop-tr", {"m": 2, "mu": [], "unrestricted": True, "lambda": [1, 1]}) in cases

    def test_samples_append_random_cases(self):
        """Test --random adds one seeded case after the exhaustive ones."""
        plain = sweep_cases("jdt-laws", 1, 1, 1)
        sampled = sweep_cases("jdt-laws", 1, 1, 1, samples=4)
        assert sampled[:-1] == plain
        assert sampled[-1][1] == {"n": 3, "m": 2, "samples": 4, "seed": config.SEED}

    def test_psi_cases_add_a_letter_outside_the_set(self):
        """Test psi-laws cases add a letter missing from the set."""
        for _, params in sweep_cases("psi-laws", 1, 2, 2):
            assert params["letter"] not in params["set"]
            assert params["lambda"]

    def test_invalid_requests(self):
        """Test unknown theorems and zero bounds raise UsageError."""
        with pytest.raises(UsageError):
            sweep_cases("thm9", 1, 1, 1)
        with pytest.raises(UsageError):
            sweep_cases("thm2", 0, 1, 1)


class TestDefaultSizes:
    """Test suite for per-theorem shape-size defaults."""

    def test_fast_growing_sweeps_use_smaller_shapes(self):
        """Test thm3 and psi-laws take their own bound, the rest the shared one."""
        assert default_size_max("thm3") == config.DEFAULT_SIZE_MAX_BY_THEOREM["thm3"]
        assert default_size_max("psi-laws") == config.DEFAULT_SIZE_MAX_BY_THEOREM["psi-laws"]
        assert default_size_max("prop-tr") == config.DEFAULT_SHAPE_SIZE_MAX
        assert default_size_max("thm3") < config.DEFAULT_SHAPE_SIZE_MAX

    @patch("stairtab.job.run_verify")
    def test_run_sweep_resolves_the_default(self, mock_verify):
        """Test run_sweep without size_max uses default_size_max."""
        mock_verify.side_effect = lambda theorem, params: VerifyReport(theorem, params)
        reports = run_sweep("psi-laws", n_max=1, m=2)
        expected = sweep_cases("psi-laws", 1, 2, default_size_max("psi-laws"))
        assert [r.params for r in reports] == [params for _, params in expected]

    @patch("stairtab.job.run_verify")
    def test_explicit_size_overrides_the_default(self, mock_verify):
        """Test an explicit size_max wins over the per-theorem default."""
        mock_verify.side_effect = lambda theorem, params: VerifyReport(theorem, params)
        reports = run_sweep("thm3", n_max=2, m=1, size_max=1)
        assert max(sum(r.params["lambda"]) - sum(r.params["mu"]) for r in reports) == 1


class TestRunSweep:
    """Test suite for running sweeps."""

    @patch("stairtab.job.run_verify")
    def test_each_case_is_verified_once(self, mock_verify):
        """Test run_sweep verifies every case once, in order."""
        mock_verify.side_effect = lambda theorem, params: VerifyReport(theorem, params)
        reports = run_sweep("thm2", n_max=2, m=1, size_max=1)
        assert mock_verify.call_count == len(sweep_cases("thm2", 2, 1, 1))
        assert [r.params for r in reports] == [params for _, params in sweep_cases("thm2", 2, 1, 1)]

    @patch("stairtab.job.run_verify")
    def test_exception_becomes_failing_report(self, mock_verify):
        """Test run_case turns an exception into a failing report."""
        mock_verify.side_effect = RuntimeError("worker died")
        report = run_case(("thm2", {"n": 1, "m": 1, "mu": []}))
        assert not report.passed
        assert report.counterexample == {"error": "RuntimeError: worker died"}

    def test_small_sweeps_pass(self):
        """Test every theorem passes a small sweep."""
        for theorem in THEOREMS:
            reports = run_sweep(theorem, n_max=1, m=1, size_max=2)
            assert reports, theorem
            assert not failures(reports), theorem

    @pytest.mark.slow
    def test_worker_processes_keep_case_order(self):
        """Test a process pool returns reports in case order."""
        serial = run_sweep("thm4", n_max=2, m=2, size_max=1, jobs=1)
        parallel = run_sweep("thm4", n_max=2, m=2, size_max=1, jobs=2)
        assert parallel == serial

    @pytest.mark.slow
    def test_default_sweep_of_every_theorem_within_a_minute(self, monkeypatch):
        """Test `sweep all` at the configured defaults passes in under a minute."""
        monkeypatch.setattr(config, "CHECK_INVARIANTS", False)
        start = time.perf_counter()
        reports = [report for theorem in THEOREMS for report in run_sweep(theorem)]
        elapsed = time.perf_counter() - start
        assert not failures(reports)
        assert elapsed < 60


@pytest.mark.slow
class TestFullScaleSweeps:
    """Test suite for exhaustive sweeps at full enumeration scale."""

    def test_phi_transport_up_to_delta_4(self):
        """Test phi transport for every n <= 4, mu and pair of sets in [1, 3]."""
        assert not failures(run_sweep("thm1", n_max=4, m=3, size_max=1))

    @pytest.mark.parametrize("theorem", ["thm4", "cor-tr-sym"])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_doubled_substitution_up_to_delta_4(self, theorem, m):
        """Test the doubled substitution and t/r symmetry for n <= 4, m <= 3."""
        assert not failures(run_sweep(theorem, n_max=4, m=m, size_max=1))

    def test_slide_laws_with_ten_thousand_random_tableaux(self):
        """Test slide laws on every staircase GST for n <= 3, plus 10^4 random ones at n = 5, m = 4."""
        reports = run_sweep("jdt-laws", n_max=3, m=3, size_max=1, samples=10_000)
        assert reports[-1].params["samples"] == 10_000
        assert reports[-1].params["n"] == 5 and reports[-1].params["m"] == 4
        assert not failures(reports)

    def test_psi_transport_on_every_shape_up_to_five_boxes(self):
        """Test psi transport exhaustively for |lambda| <= 5, m = 2."""
        assert not failures(run_sweep("psi-laws", n_max=3, m=2, size_max=5))

    def test_transpose_swaps_t_and_r_up_to_six_boxes(self):
        """Test the conjugate-shape identity for every |lambda| <= 6, m = 3."""
        assert not failures(run_sweep("prop-tr", n_max=3, m=3, size_max=6, unrestricted=True))

    def test_conjugation_at_t_r_one_inside_the_staircase(self):
        """Test the t = r = 1 identity for shapes with lambda_1 <= n."""
        assert not failures(run_sweep("cor-final", n_max=3, m=3, size_max=6))

    def test_yamanouchi_reconstruction_up_to_six_boxes(self):
        """Test thm3 for every lambda/mu with mu inside delta(3) and |lambda/mu| <= 6."""
        assert not failures(run_sweep("thm3", n_max=3, m=1, size_max=6))
