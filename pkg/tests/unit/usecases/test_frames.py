import unittest

from ttframes.entities.exceptions import AssumptionViolated
from ttframes.entities.ideal_entities import Ideal
from ttframes.frameworks.builtin_catalog import builtin
from ttframes.usecases.frames import (
    all_frame_maps,
    chain_frame,
    check_frame_laws,
    check_frame_map,
    compose_frame_maps,
    diamond_lattice,
    frame_isomorphisms,
    identity_frame_map,
    point_as_frame_map,
    point_from_prime_element,
    points,
    powerset_frame,
    principal_witnesses,
    radical_join,
    relabel_frame,
    zar_frame,
)


class TestFrameLaws(unittest.TestCase):
    """Lattice and distributivity checks on small frames."""

    def test_standard_frames_pass(self):
        """Test the frame laws on chains and powersets."""
        for frame in (chain_frame(1), chain_frame(4), powerset_frame(3)):
            with self.subTest(size=frame.size):
                self.assertTrue(check_frame_laws(frame).ok)

    def test_diamond_is_not_distributive(self):
        """Test that the diamond fails distributivity."""
        report = check_frame_laws(diamond_lattice())
        self.assertEqual(report.axioms(), ["distributivity"])
        self.assertEqual(report.first("distributivity").witness, (1, 2, 3))

    def test_chain_needs_an_element(self):
        """Test rejection of an empty chain."""
        with self.assertRaises(ValueError):
            chain_frame(0)


class TestPoints(unittest.TestCase):

    def test_every_non_top_element_of_a_chain_is_prime(self):
        """Test prime elements of a chain."""
        self.assertEqual([p.prime_element for p in points(chain_frame(4))], [0, 1, 2])

    def test_points_of_a_powerset_are_the_coatoms(self):
        """Test points of a powerset frame."""
        frame = powerset_frame(2)
        self.assertEqual([p.prime_element for p in points(frame)], [1, 2])
        self.assertEqual(point_from_prime_element(frame, 2).assignment, (0, 1, 0, 1))
        with self.assertRaises(KeyError):
            point_from_prime_element(frame, 0)

    def test_points_are_frame_maps(self):
        """Test that every point is a frame map to the two-chain."""
        frame = powerset_frame(2)
        for point in points(frame):
            as_map = point_as_frame_map(frame, point)
            self.assertTrue(check_frame_map(frame, as_map.target, as_map.table).ok)


class TestFrameMaps(unittest.TestCase):

    def test_identity_and_composition(self):
        """Test identity and composed frame maps."""
        frame = powerset_frame(2)
        identity = identity_frame_map(frame)
        point = point_as_frame_map(frame, points(frame)[0])
        self.assertEqual(compose_frame_maps(identity, point), point)
        with self.assertRaises(ValueError):
            compose_frame_maps(point, identity)

    def test_constant_map_is_not_a_frame_map(self):
        """Test that a constant map breaks the frame map laws."""
        report = check_frame_map(chain_frame(3), chain_frame(2), (0, 0, 0))
        self.assertEqual(report.axioms(), ["map-top"])

    def test_frame_maps_from_a_chain(self):
        """Test enumeration of frame maps out of a chain."""
        # monotone maps of 0 < 1 < 2 onto 0 < 1 fixing both ends
        self.assertEqual(list(all_frame_maps(chain_frame(3), chain_frame(2))), [(0, 0, 1), (0, 1, 1)])

    def test_relabelled_frame_is_isomorphic(self):
        """Test frame isomorphism search."""
        frame = powerset_frame(2)
        copy = relabel_frame(frame, [3, 1, 2, 0])
        self.assertEqual(copy.top, 0)
        self.assertEqual(copy.bottom, 3)
        self.assertIn((3, 1, 2, 0), list(frame_isomorphisms(frame, copy)))


class TestZariskiFrame(unittest.TestCase):

    def test_two_idempotents_give_a_boolean_frame(self):
        """Test the Zariski frame of two_idem."""
        system = builtin("two_idem")
        frame = zar_frame(system)
        self.assertEqual(frame.labels, ("{0}", "{0,x}", "{0,y}", "{0,x,y,u}"))
        self.assertTrue(check_frame_laws(frame).ok)
        self.assertEqual([p.prime_element for p in points(frame)], [1, 2])
        self.assertEqual(principal_witnesses(system, frame), {0: 0, 1: 1, 2: 2, 3: 3})

    def test_meet_is_intersection_and_join_is_radical_of_union(self):
        """Test meets and joins of the Zariski frame."""
        system = builtin("two_idem")
        frame = zar_frame(system)
        x, y = frame.payload[1], frame.payload[2]
        self.assertEqual(frame.payload[frame.meet[1][2]].mask, x.mask & y.mask)
        self.assertEqual(frame.payload[frame.join[1][2]], radical_join(system, x, y))
        self.assertTrue(radical_join(system, x, y).is_whole)

    def test_non_radical_ideals_are_left_out(self):
        """Test that the Zariski frame of chain3 skips non-radical ideals."""
        chain = zar_frame(builtin("chain3"))
        self.assertEqual(chain.labels, ("{0}", "{0,x',x}", "{0,x',x,u}"))
        noncomm = zar_frame(builtin("noncomm4"))
        self.assertEqual(noncomm.labels, ("{0,a}", "{0,a,b}", "{0,a,b,u}"))
        self.assertEqual(noncomm.bottom, 0)
        self.assertEqual(noncomm.element_of(Ideal(mask=0b0111, universe=4)), 1)

    def test_trivial_system_gives_a_two_chain_with_one_point(self):
        """Test the Zariski frame of the trivial system."""
        frame = zar_frame(builtin("trivial"))
        self.assertEqual(frame.labels, ("{0}", "{0,u}"))
        self.assertEqual(len(points(frame)), 1)

    def test_degenerate_frame_has_no_points(self):
        """Test the one-element Zariski frame."""
        frame = zar_frame(builtin("degenerate"))
        self.assertEqual(frame.size, 1)
        self.assertEqual(points(frame), [])

    def test_refused_without_the_assumption(self):
        """Test zar_frame raises when some prime is not completely prime."""
        with self.assertRaises(AssumptionViolated) as ctx:
            zar_frame(builtin("matrix_units"))
        self.assertEqual([p.mask for p in ctx.exception.counterexamples], [1])


if __name__ == "__main__":
    unittest.main()
