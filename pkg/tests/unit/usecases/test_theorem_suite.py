import unittest
from unittest.mock import Mock, patch

from ttframes.entities.exceptions import AssumptionViolated, BoundExceeded, GenerationFailure, NotALattice
from ttframes.entities.ideal_entities import Ideal
from ttframes.frameworks.builtin_catalog import builtin
from ttframes.usecases.dtos import CheckStatus, schema_tag
from ttframes.usecases.interfaces.framework_interfaces import SystemLoaderInterface
from ttframes.usecases.theorem_suite_use_case import TheoremSuiteUseCase


SUITE_MODULE = "ttframes.usecases.theorem_suite_use_case"


class TestTheoremSuiteUseCase(unittest.TestCase):
    """Theorem suite on shipped systems, with the loader mocked out."""

    def setUp(self):
        self.loader = Mock(spec=SystemLoaderInterface)
        self.loader.builtin.side_effect = builtin
        self.use_case = TheoremSuiteUseCase(self.loader)

    def test_builtins_pass_every_check(self):
        """Test the suite on the builtins."""
        for name in ("trivial", "two_idem", "chain3", "noncomm4", "degenerate"):
            with self.subTest(name=name):
                response = self.use_case.verify_builtin(name)
                self.assertTrue(response.passed)
                self.assertEqual(response.counts(), {"PASSED": 8, "FAILED": 0, "SKIPPED": 0})
                self.assertEqual(
                    [r.name for r in response.reports], list(TheoremSuiteUseCase.CHECK_NAMES)
                )
        self.assertEqual(self.loader.builtin.call_count, 5)

    def test_loader_is_used_for_builtins(self):
        """Test verify_builtin goes through the loader."""
        self.use_case.verify_builtin("two_idem")
        self.loader.builtin.assert_called_once_with("two_idem")

    def test_initiality_records_its_corpus(self):
        """Test the initiality report data."""
        report = self.use_case.verify(builtin("two_idem"), "two_idem").report("initiality")
        self.assertEqual(report.data["corpus"], 20)
        self.assertEqual(report.data["uniqueness"], ["exhaustive"])
        self.assertEqual(report.data["orientation_mismatches"], [])

    def test_orientation_mismatches_are_reported_not_failed(self):
        """Test that supports with one-sided triangle axioms are listed in the data without failing."""
        with patch(f"{SUITE_MODULE}.triangle_orientation_agreement", return_value=False):
            response = self.use_case.verify(builtin("two_idem"), "two_idem")
        for name in ("initiality", "finality"):
            with self.subTest(name=name):
                report = response.report(name)
                self.assertIs(report.status, CheckStatus.PASSED)
                self.assertEqual(report.data["orientation_mismatches"], list(range(report.data["corpus"])))
                self.assertFalse(any("orientation" in c.label for c in report.checks))
        self.assertTrue(response.passed)

    def test_checks_are_skipped_when_the_assumption_fails(self):
        """Test the assumption gate."""
        response = self.use_case.verify(builtin("matrix_units"), "matrix_units")
        self.assertTrue(response.passed)
        self.assertEqual(response.counts()["SKIPPED"], 8)
        self.assertTrue(response.report("hdual").skip_reason.startswith("not completely prime"))

    def test_strict_mode_raises(self):
        """Test strict mode."""
        strict = TheoremSuiteUseCase(self.loader, strict=True)
        with patch(f"{SUITE_MODULE}.check_assumption", return_value=(False, [Ideal(mask=1, universe=4)])):
            with self.assertRaises(AssumptionViolated):
                strict.verify(builtin("two_idem"))

    def test_skip_reason_names_the_counterexamples(self):
        """Test the skip reason."""
        with patch(f"{SUITE_MODULE}.check_assumption", return_value=(False, [Ideal(mask=1, universe=4)])):
            response = self.use_case.verify(builtin("two_idem"))
        reasons = {r.skip_reason for r in response.reports}
        self.assertEqual(reasons, {"not completely prime: {0}"})

    def test_enumeration_bound_propagates(self):
        """Test that BoundExceeded escapes verify."""
        small = TheoremSuiteUseCase(self.loader, max_objects=8)
        with self.assertRaises(BoundExceeded):
            small.verify(builtin("matrix_units"))

    def test_domain_error_fails_only_its_check(self):
        """Test a domain error inside one check."""
        with patch(f"{SUITE_MODULE}.verify_corres", side_effect=NotALattice("no meet")):
            response = self.use_case.verify(builtin("chain3"), "chain3")
        corres = response.report("corres")
        self.assertIs(corres.status, CheckStatus.FAILED)
        self.assertEqual(corres.error_message, "NotALattice: no meet")
        self.assertFalse(response.passed)
        self.assertIs(response.report("hdual").status, CheckStatus.PASSED)

    def test_suite_document(self):
        """Test the suite document."""
        document = self.use_case.verify(builtin("trivial"), "trivial").to_dict()
        self.assertEqual(document["schema"], schema_tag("suite"))
        self.assertEqual(document["system"], "trivial")
        self.assertEqual(len(document["theorems"]), 8)


class TestCampaign(unittest.TestCase):

    def setUp(self):
        self.use_case = TheoremSuiteUseCase(Mock(spec=SystemLoaderInterface), corpus_size=8, workers=2)

    def test_results_keep_seed_order(self):
        """Test campaign result order."""
        responses = self.use_case.run_campaign([3, 1, 2], 4)
        self.assertEqual([r.system_name for r in responses], ["seed:3", "seed:1", "seed:2"])
        self.assertTrue(all(r.passed for r in responses))

    def test_generation_failure_becomes_an_error_response(self):
        """Test a seed that cannot be generated."""
        with patch(f"{SUITE_MODULE}.random_system", side_effect=GenerationFailure("no luck")):
            response = self.use_case.verify_seed(7, 4)
        self.assertFalse(response.success)
        self.assertFalse(response.passed)
        self.assertEqual(response.error_message, "no luck")
        self.assertEqual(response.to_dict()["system"], "seed:7")


if __name__ == "__main__":
    unittest.main()
