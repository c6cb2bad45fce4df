import unittest
from itertools import product
from unittest.mock import patch

from hypothesis import given, settings
from hypothesis import strategies as st

from ttframes.entities.exceptions import GenerationFailure
from ttframes.frameworks.builtin_catalog import builtin, builtin_names
from ttframes.usecases.tensor_systems import (
    complete_triangles,
    describe_violations,
    matrix_units,
    order_leq,
    power_orbit,
    random_system,
    replay_violation,
    validate,
)


class TestValidate(unittest.TestCase):
    """Structural axioms of the shipped systems and of broken copies."""

    def test_every_builtin_validates(self):
        """Test validate on the builtins."""
        for name in builtin_names():
            with self.subTest(name=name):
                self.assertTrue(validate(builtin(name)).ok)

    def test_broken_distributivity_is_reported(self):
        """Test a distributivity violation."""
        system = builtin("two_idem")
        x, y = system.index_of("x"), system.index_of("y")
        tensor = [list(row) for row in system.tensor]
        tensor[x][y] = x
        broken = system.model_copy(update={"tensor": tuple(tuple(row) for row in tensor)})

        report = validate(broken)
        self.assertFalse(report.ok)
        witnesses = [v.witness for v in report.violations if v.axiom == "tensor-sum-distributivity"]
        self.assertIn((x, y, y), witnesses)

    def test_every_witness_replays(self):
        """Test that reported witnesses replay."""
        system = builtin("chain3")
        shift = list(system.shift)
        shift[1], shift[2] = shift[2], shift[1]
        broken = system.model_copy(update={"shift": tuple(shift)})

        report = validate(broken)
        self.assertFalse(report.ok)
        self.assertIn("shift-tensor", report.axioms())
        for violation in report.violations:
            self.assertTrue(replay_violation(broken, violation))

    def test_missing_split_triangles(self):
        """Test a system without split triangles."""
        system = builtin("trivial").model_copy(update={"triangles": ()})
        report = validate(system)
        self.assertIn("triangles-split", report.axioms())
        grouped = describe_violations(system, report)
        self.assertIn("triangles-split(0, 0)", grouped["triangles-split"])


class TestCompletionAndOrder(unittest.TestCase):

    def test_completion_is_idempotent(self):
        """Test triangle completion."""
        system = builtin("noncomm4")
        once = complete_triangles(system.model_copy(update={"triangles": ()}))
        self.assertEqual(complete_triangles(once), once)
        self.assertEqual(once.triangles, system.triangles)

    def test_sum_order(self):
        """Test the order induced by the sum."""
        system = builtin("two_idem")
        leq = order_leq(system)
        x, y, u = (system.index_of(label) for label in ("x", "y", "u"))
        self.assertTrue(leq[0, x] and leq[x, u] and leq[y, u])
        self.assertFalse(leq[x, y] or leq[y, x])

    def test_power_orbit(self):
        """Test tensor power orbits."""
        system = builtin("chain3")
        x, x_prime = system.index_of("x"), system.index_of("x'")
        self.assertEqual(power_orbit(system, x), [x, x_prime])
        self.assertEqual(power_orbit(system, system.unit), [system.unit])


class TestMatrixUnits(unittest.TestCase):

    def test_shape(self):
        """Test the matrix_units tables."""
        system = matrix_units()
        self.assertEqual(system.size, 16)
        self.assertEqual(system.label_of(system.unit), "m1001")
        self.assertEqual(system.label_of(0), "m0000")
        self.assertNotEqual(system.tensor, tuple(zip(*system.tensor)))


class TestRandomSystem(unittest.TestCase):

    def test_two_objects_give_the_trivial_system(self):
        """Test random_system with two objects."""
        self.assertEqual(random_system(1, 2), builtin("trivial"))

    def test_size_limits(self):
        """Test the max_objects range."""
        with self.assertRaises(ValueError):
            random_system(0, 1)
        with self.assertRaises(ValueError):
            random_system(0, 13)

    def test_exhausted_attempts_raise(self):
        """Test GenerationFailure."""
        with patch("ttframes.usecases.tensor_systems.MAX_GENERATION_ATTEMPTS", 0):
            with self.assertRaises(GenerationFailure):
                random_system(3, 6)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000), size=st.integers(min_value=2, max_value=8))
    def test_generated_systems_validate(self, seed, size):
        """Test that generated systems validate."""
        system = random_system(seed, size)
        self.assertLessEqual(system.size, size)
        self.assertTrue(validate(system).ok)

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_same_seed_same_system(self, seed):
        """Test generation determinism."""
        self.assertEqual(random_system(seed, 8), random_system(seed, 8))

    def test_corpus_has_invertible_shifts_and_extra_triangles(self):
        """Test that generated systems include non-identity shifts and triangles beyond the split ones."""
        systems = [random_system(seed, 8) for seed in range(200)]
        shifted = [s for s in systems if s.shift != tuple(range(s.size))]
        self.assertTrue(shifted)
        for system in shifted:
            sigma = system.shift[system.unit]
            self.assertEqual(system.shift, system.tensor[sigma])
            self.assertEqual(system.tensor[sigma], tuple(row[sigma] for row in system.tensor))
            self.assertTrue(validate(system).ok)
        split_only = [complete_triangles(s.model_copy(update={"triangles": ()})) for s in systems]
        self.assertTrue(any(s != split for s, split in zip(systems, split_only)))

    def test_triangles_are_closed_under_tensoring(self):
        """Test that tensoring a generated triangle with any object on either side gives a triangle."""
        for seed in range(40):
            system = random_system(seed, 6)
            T, triangles = system.tensor, set(system.triangles)
            with self.subTest(seed=seed):
                for (a, b, c), t in product(triangles, range(system.size)):
                    self.assertIn((T[t][a], T[t][b], T[t][c]), triangles)
                    self.assertIn((T[a][t], T[b][t], T[c][t]), triangles)
                    self.assertNotEqual((a, b, c).count(system.zero), 2)


if __name__ == "__main__":
    unittest.main()
