import unittest

from pydantic import ValidationError

from ttframes.entities.exceptions import (
    AssumptionViolated,
    BoundExceeded,
    NotALattice,
    SystemFormatError,
    UndeclaredObjectError,
)
from ttframes.entities.frame_entities import FiniteFrame, Point
from ttframes.entities.ideal_entities import Ideal, PrimeClassification
from ttframes.entities.space_entities import FiniteSpace
from ttframes.entities.tensor_entities import ObjectId, TensorSystem, ValidationReport, Violation


def two_object_system(**overrides) -> TensorSystem:
    fields = dict(
        objects=(ObjectId(index=0, label="0"), ObjectId(index=1, label="u")),
        zero=0,
        unit=1,
        shift=(0, 1),
        sum=((0, 1), (1, 1)),
        tensor=((0, 0), (0, 1)),
        triangles=((1, 1, 0), (0, 0, 0), (1, 1, 0)),
        summands=((0, 1), (0, 0), (1, 1)),
    )
    fields.update(overrides)
    return TensorSystem(**fields)


class TestTensorSystem(unittest.TestCase):
    """Shape checks and helpers of the system entity."""

    def test_canonical_triangles_and_summands(self):
        """Test sorting and deduplication of triangles and summands."""
        system = two_object_system()
        self.assertEqual(system.triangles, ((0, 0, 0), (1, 1, 0)))
        self.assertEqual(system.summands, ((0, 0), (0, 1), (1, 1)))
        self.assertEqual(system.labels, ["0", "u"])
        self.assertFalse(system.is_degenerate)

    def test_equal_systems_hash_alike(self):
        """Test hashing of equal systems."""
        self.assertEqual(two_object_system(), two_object_system())
        self.assertEqual(hash(two_object_system()), hash(two_object_system()))

    def test_ragged_table_rejected(self):
        """Test rejection of a ragged table."""
        with self.assertRaises(ValidationError):
            two_object_system(sum=((0, 1), (1,)))

    def test_out_of_range_entries_rejected(self):
        """Test rejection of table entries outside the objects."""
        with self.assertRaises(ValidationError):
            two_object_system(tensor=((0, 0), (0, 2)))
        with self.assertRaises(ValidationError):
            two_object_system(triangles=((0, 1, 5),))

    def test_zero_must_come_first(self):
        """Test that the zero object must have index 0."""
        with self.assertRaises(ValidationError):
            two_object_system(zero=1)

    def test_duplicate_labels_rejected(self):
        """Test rejection of repeated labels."""
        with self.assertRaises(ValidationError):
            two_object_system(objects=(ObjectId(index=0, label="0"), ObjectId(index=1, label="0")))

    def test_empty_label_rejected(self):
        """Test rejection of an empty label."""
        with self.assertRaises(ValidationError):
            ObjectId(index=0, label="  ")

    def test_arrays(self):
        """Test the numpy views of the tables."""
        system = two_object_system()
        self.assertEqual(system.sum_array().shape, (2, 2))
        self.assertTrue(system.triangle_array()[1, 1, 0])
        self.assertFalse(system.triangle_array()[0, 1, 1])
        self.assertTrue(system.summand_array()[0, 1])
        self.assertEqual(system.shift_preimages(), [[0], [1]])
        self.assertEqual(system.index_of("u"), 1)
        with self.assertRaises(KeyError):
            system.index_of("v")


class TestValidationReport(unittest.TestCase):

    def test_ok_matches_violations(self):
        """Test ValidationReport.ok."""
        violation = Violation(axiom="sum-commutative", witness=(0, 1))
        with self.assertRaises(ValidationError):
            ValidationReport(ok=True, violations=[violation])
        with self.assertRaises(ValidationError):
            ValidationReport(ok=False, violations=[])

    def test_lookup_helpers(self):
        """Test label and index lookups."""
        violations = [
            Violation(axiom="b", witness=(1,)),
            Violation(axiom="a", witness=(0, 1)),
            Violation(axiom="b", witness=(2,)),
        ]
        report = ValidationReport.from_violations(violations)
        self.assertFalse(report.ok)
        self.assertEqual(report.axioms(), ["b", "a"])
        self.assertEqual(report.count("b"), 2)
        self.assertEqual(report.first("b").witness, (1,))
        self.assertEqual(violations[1].describe(["0", "x"]), "a(0, x)")


class TestIdeal(unittest.TestCase):

    def test_members_and_description(self):
        """Test ideal members and descriptions."""
        ideal = Ideal.from_members([2], universe=4)
        self.assertEqual(ideal.mask, 0b101)
        self.assertEqual(ideal.members, (0, 2))
        self.assertIn(2, ideal)
        self.assertNotIn(1, ideal)
        self.assertEqual(len(ideal), 2)
        self.assertEqual(ideal.describe(["0", "x", "y", "u"]), "{0,y}")
        self.assertTrue(ideal.issubset(Ideal(mask=0b111, universe=4)))
        self.assertFalse(ideal.is_whole)

    def test_zero_bit_required(self):
        """Test that ideals must contain the zero object."""
        with self.assertRaises(ValidationError):
            Ideal(mask=0b10, universe=2)

    def test_mask_within_universe(self):
        """Test rejection of masks wider than the universe."""
        with self.assertRaises(ValidationError):
            Ideal(mask=0b1001, universe=2)

    def test_classification_consistency(self):
        """Test PrimeClassification field checks."""
        with self.assertRaises(ValidationError):
            PrimeClassification(is_proper=True, is_prime=False, is_completely_prime=True)
        with self.assertRaises(ValidationError):
            PrimeClassification(is_proper=False, is_prime=True, is_completely_prime=False)
        verdict = PrimeClassification(
            is_proper=True, is_prime=True, is_completely_prime=False, complete_witness=(1, 2)
        )
        self.assertEqual(verdict.witness, (1, 2))


class TestFrameEntities(unittest.TestCase):

    def test_from_leq_builds_tables(self):
        """Test building a frame from its order."""
        frame = FiniteFrame.from_leq([[True, True], [False, True]], labels=["0", "1"])
        self.assertEqual(frame.meet, ((0, 0), (0, 1)))
        self.assertEqual(frame.join, ((0, 1), (1, 1)))
        self.assertEqual((frame.bottom, frame.top), (0, 1))

    def test_two_maximal_elements_is_not_a_lattice(self):
        """Test NotALattice for an order without a top."""
        leq = [
            [True, True, True],
            [False, True, False],
            [False, False, True],
        ]
        with self.assertRaises(NotALattice) as ctx:
            FiniteFrame.from_leq(leq)
        self.assertEqual(ctx.exception.witness, (1, 2))

    def test_point_assignment_checked(self):
        """Test Point validation."""
        with self.assertRaises(ValidationError):
            Point(assignment=(0, 2), prime_element=0, prime_ideal=(0,))
        with self.assertRaises(ValidationError):
            Point(assignment=(0, 1), prime_element=1, prime_ideal=(0,))


class TestFiniteSpace(unittest.TestCase):

    def test_opens_are_canonical(self):
        """Test sorting of open sets."""
        space = FiniteSpace(labels=("p", "q"), opens=(3, 0, 2, 2))
        self.assertEqual(space.opens, (0, 2, 3))
        self.assertEqual(space.closed_sets(), [0, 1, 3])
        self.assertEqual(space.describe(2), "{q}")

    def test_open_outside_points_rejected(self):
        """Test rejection of opens with unknown points."""
        with self.assertRaises(ValidationError):
            FiniteSpace(labels=("p",), opens=(0, 1, 2))


class TestExceptions(unittest.TestCase):

    def test_position_prefix(self):
        """Test error messages with line and column."""
        error = UndeclaredObjectError("undeclared object c", line=8, column=15)
        self.assertIsInstance(error, SystemFormatError)
        self.assertEqual(str(error), "line 8, column 15: undeclared object c")
        self.assertEqual(str(SystemFormatError("no objects declared")), "no objects declared")

    def test_payloads(self):
        """Test exception payloads."""
        self.assertEqual(BoundExceeded("object set", 20, 16).bound, 16)
        self.assertEqual(AssumptionViolated(["p"]).counterexamples, ["p"])


if __name__ == "__main__":
    unittest.main()
