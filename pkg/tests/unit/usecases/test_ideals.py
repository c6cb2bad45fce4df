import unittest

from ttframes.entities.exceptions import BoundExceeded
from ttframes.entities.ideal_entities import Ideal
from ttframes.entities.tensor_entities import ObjectId, TensorSystem
from ttframes.frameworks.builtin_catalog import builtin
from ttframes.frameworks.system_file_loader import load_system
from ttframes.usecases.ideals import (
    EnumerationStrategy,
    RadicalMethod,
    check_assumption,
    classify,
    close,
    completely_primes,
    describe_ideals,
    enumerate_thick_ideals,
    ideal_product,
    is_ideal,
    is_radical,
    primes,
    radical,
    sqrt_object,
)
from ttframes.usecases.tensor_systems import complete_triangles, derive_summands, validate


def masks(ideals):
    return [ideal.mask for ideal in ideals]


INVERTIBLE_SHIFT = """
# u and p invert each other, j = p + u absorbs both; shift is p tensor -
[objects]
0 p j u
[zero]
0
[unit]
u
[shift]
shift(u) = p
shift(p) = u
[sum]
p <= j
u <= j
[tensor]
tensor(p,p) = u
tensor(p,j) = j
tensor(j,p) = j
tensor(j,j) = j
[options]
complete_triangles = true
"""


def table_system(shift):
    """Four objects 0, a, b, u with a + b = u and a, b squaring to zero; no axioms checked."""
    sums = ((0, 1, 2, 3), (1, 1, 3, 3), (2, 3, 2, 3), (3, 3, 3, 3))
    return TensorSystem(
        objects=tuple(ObjectId(index=i, label=label) for i, label in enumerate(("0", "a", "b", "u"))),
        zero=0,
        unit=3,
        shift=shift,
        sum=sums,
        tensor=((0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2), (0, 1, 2, 3)),
        triangles=(),
        summands=derive_summands(4, sums),
    )


class TestClosureRules(unittest.TestCase):
    """Closure growing through the shift and through non-split triangles."""

    def test_shift_rule_alone(self):
        """Test that swapping a and b in the shift is the only thing pulling b into <a>."""
        fixed = table_system((0, 1, 2, 3))
        swapped = table_system((0, 2, 1, 3))
        self.assertEqual(close(fixed, [1]).mask, 0b0011)
        self.assertTrue(close(swapped, [1]).is_whole)
        self.assertTrue(close(swapped, [2]).is_whole)
        self.assertIn("shift-tensor", validate(swapped).axioms())

    def test_invertible_shift(self):
        """Test a validated system whose shift is tensoring with an invertible object."""
        system = load_system(INVERTIBLE_SHIFT)
        self.assertTrue(validate(system).ok)
        p, j, u = (system.index_of(label) for label in ("p", "j", "u"))
        self.assertEqual(system.shift[j], j)
        for x in range(system.size):
            self.assertEqual(system.shift[x], system.tensor[system.shift[u]][x])
        # rotating the split triangle u -> u -> 0 ends at shift(u) = p
        self.assertIn((u, 0, p), system.triangles)
        self.assertTrue(close(system, [p]).is_whole)
        self.assertEqual(masks(enumerate_thick_ideals(system)), [0b0001, 0b1111])

    def test_non_split_triangle(self):
        """Test that a triangle x -> y -> x makes y an extension of x."""
        plain = builtin("two_idem")
        x, y = plain.index_of("x"), plain.index_of("y")
        system = complete_triangles(plain.model_copy(update={"triangles": plain.triangles + ((x, y, x),)}))
        self.assertTrue(validate(system).ok)
        self.assertEqual(close(plain, [x]).mask, 0b0011)
        self.assertTrue(close(system, [x]).is_whole)
        self.assertEqual(close(system, [y]).mask, 0b0101)
        self.assertEqual(masks(enumerate_thick_ideals(system)), [0b0001, 0b0101, 0b1111])
        self.assertFalse(is_ideal(system, 0b0011))


class TestClosureAndEnumeration(unittest.TestCase):
    """Thick ideal closure and the two enumeration strategies."""

    def test_two_idempotents(self):
        """Test the ideals of two_idem."""
        system = builtin("two_idem")
        self.assertEqual(masks(enumerate_thick_ideals(system)), [0b0001, 0b0011, 0b0101, 0b1111])
        # x + y = u, so any ideal holding both is everything
        self.assertTrue(close(system, [1, 2]).is_whole)
        self.assertEqual(close(system).mask, 1)

    def test_chain(self):
        """Test the ideals of chain3."""
        system = builtin("chain3")
        self.assertEqual(masks(enumerate_thick_ideals(system)), [0b0001, 0b0011, 0b0111, 0b1111])
        self.assertEqual(close(system, [system.index_of("x")]).mask, 0b0111)

    def test_left_absorption_in_noncommutative_system(self):
        """Test closure under left tensoring in noncomm4."""
        system = builtin("noncomm4")
        b = system.index_of("b")
        # b a = a pulls a into the ideal generated by b
        self.assertEqual(close(system, [b]).mask, 0b0111)
        self.assertEqual(close(system, [system.index_of("a")]).mask, 0b0011)

    def test_degenerate_system_has_one_ideal(self):
        """Test the one ideal of the degenerate system."""
        ideals = enumerate_thick_ideals(builtin("degenerate"))
        self.assertEqual(masks(ideals), [1])
        self.assertTrue(ideals[0].is_whole)

    def test_strategies_agree(self):
        """Test frontier and subset enumeration agree on the builtins."""
        for name in ("trivial", "two_idem", "chain3", "noncomm4", "degenerate"):
            system = builtin(name)
            with self.subTest(name=name):
                self.assertEqual(
                    enumerate_thick_ideals(system, strategy=EnumerationStrategy.FRONTIER),
                    enumerate_thick_ideals(system, strategy="subsets"),
                )

    def test_bound(self):
        """Test the enumeration bound."""
        with self.assertRaises(BoundExceeded) as ctx:
            enumerate_thick_ideals(builtin("matrix_units"), bound=8)
        self.assertEqual((ctx.exception.size, ctx.exception.bound), (16, 8))

    def test_is_ideal(self):
        """Test is_ideal on closed and unclosed masks."""
        system = builtin("two_idem")
        self.assertTrue(is_ideal(system, 0b0011))
        self.assertFalse(is_ideal(system, 0b0111))
        self.assertFalse(is_ideal(system, 0b0010))


class TestPrimality(unittest.TestCase):

    def test_zero_ideal_of_two_idempotents_is_not_prime(self):
        """Test classify on the zero ideal of two_idem."""
        system = builtin("two_idem")
        verdict = classify(system, close(system))
        self.assertTrue(verdict.is_proper)
        self.assertFalse(verdict.is_prime)
        left, right = verdict.prime_witness
        self.assertEqual((left.mask, right.mask), (0b0011, 0b0101))
        self.assertEqual(masks(primes(system)), [0b0011, 0b0101])

    def test_chain_primes(self):
        """Test the primes of chain3."""
        system = builtin("chain3")
        self.assertEqual(masks(primes(system)), [0b0001, 0b0111])
        verdict = classify(system, Ideal(mask=0b0011, universe=4))
        self.assertFalse(verdict.is_prime)
        self.assertEqual(tuple(i.mask for i in verdict.prime_witness), (0b0111, 0b0111))

    def test_whole_category_is_not_proper(self):
        """Test that the whole category is never prime."""
        system = builtin("chain3")
        verdict = classify(system, Ideal(mask=0b1111, universe=4))
        self.assertFalse(verdict.is_proper)
        self.assertIsNone(verdict.witness)

    def test_assumption(self):
        """Test check_assumption on the builtins."""
        for name in ("trivial", "two_idem", "chain3", "noncomm4", "degenerate"):
            with self.subTest(name=name):
                holds, counterexamples = check_assumption(builtin(name))
                self.assertTrue(holds)
                self.assertEqual(counterexamples, [])

    def test_matrix_units_break_the_assumption(self):
        """Test the counterexample prime in matrix_units."""
        system = builtin("matrix_units")
        holds, counterexamples = check_assumption(system)
        self.assertFalse(holds)
        self.assertEqual(masks(counterexamples), [1])
        verdict = classify(system, counterexamples[0])
        self.assertTrue(verdict.is_prime)
        self.assertIsNotNone(verdict.complete_witness)
        a, b = verdict.complete_witness
        self.assertEqual(system.tensor[a][b], system.zero)
        self.assertEqual(completely_primes(system), [])

    def test_ideal_product(self):
        """Test the product of two principal ideals."""
        system = builtin("two_idem")
        product = ideal_product(system, Ideal(mask=0b0011, universe=4), Ideal(mask=0b0101, universe=4))
        self.assertEqual(product.mask, 1)


class TestRadicals(unittest.TestCase):

    def test_both_methods_on_the_chain(self):
        """Test both radical methods on chain3."""
        system = builtin("chain3")
        ideal = close(system, [system.index_of("x'")])
        for method in RadicalMethod:
            with self.subTest(method=method):
                self.assertEqual(radical(system, ideal, method).mask, 0b0111)
        self.assertFalse(is_radical(system, ideal))
        self.assertEqual(sqrt_object(system, system.index_of("x'")).mask, 0b0111)

    def test_nilpotent_object_is_in_the_radical_of_zero(self):
        """Test that nilpotents lie in the radical of zero."""
        system = builtin("noncomm4")
        self.assertEqual(radical(system, close(system), "via_roots").mask, 0b0011)
        self.assertEqual(radical(system, close(system), "via_primes").mask, 0b0011)

    def test_methods_disagree_without_the_assumption(self):
        """Test radical methods on matrix_units."""
        system = builtin("matrix_units")
        zero = close(system)
        self.assertEqual(radical(system, zero, RadicalMethod.VIA_PRIMES).mask, 1)
        self.assertTrue(radical(system, zero, RadicalMethod.VIA_ROOTS).is_whole)

    def test_unknown_method(self):
        """Test rejection of an unknown radical method."""
        system = builtin("trivial")
        with self.assertRaises(ValueError):
            radical(system, close(system), "via_magic")

    def test_describe_ideals(self):
        """Test describe_ideals labels."""
        system = builtin("two_idem")
        described = describe_ideals(system, primes(system))
        self.assertEqual(described, {"{0,x}": ["0", "x"], "{0,y}": ["0", "y"]})


if __name__ == "__main__":
    unittest.main()
