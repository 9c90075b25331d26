import logging
import unittest

from neighborly.errors import InputError
from neighborly.models.signs import ReorientationSet, SignMatrix
from neighborly.models.travel import Travel, TravelKind
from neighborly.oracles import travel_certificate
from neighborly.replay import replay
from neighborly.signs import (
    acyclic_reorientations_bruteforce,
    all_sign_matrices,
    is_acyclic_bruteforce,
    reorient,
)
from neighborly.travels import (
    acyclic_reorientations,
    bottom_travel,
    bottom_travel_is_cyclic,
    is_cyclic_travel,
    plain_breakpoints,
    plain_travels,
    top_travel,
    top_travel_is_cyclic,
    travel_to_reorientation,
)

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class TravelTest(unittest.TestCase):
    def setUp(self):
        self.cyclic = SignMatrix.from_text("+-+\n++-")
        self.all_plus = SignMatrix.constant(2, 3)

    # ===== TOP AND BOTTOM TRAVELS =====

    def test_01_top_travel_gets_stuck_in_last_row(self):
        """Testing the top travel of a cyclic 2x3 matrix"""
        logger.info("Testing top travel...")
        t = top_travel(self.cyclic)
        self.assertEqual(t.breakpoints, (2, 2))
        self.assertEqual(t.cells(), [(1, 1), (1, 2), (2, 2)])
        self.assertTrue(top_travel_is_cyclic(self.cyclic, t))

    def test_02_bottom_travel_runs_leftwards(self):
        t = bottom_travel(self.cyclic)
        self.assertEqual(t.kind, TravelKind.BOTTOM)
        self.assertEqual(t.breakpoints, (2, 2))
        self.assertEqual(t.segments[0].row, 2)
        self.assertEqual(t.segments[0].start, 3)
        self.assertTrue(bottom_travel_is_cyclic(self.cyclic, t))

    def test_03_constant_matrix_crosses_the_first_row(self):
        t = top_travel(self.all_plus)
        self.assertEqual(t.breakpoints, (3,))
        self.assertFalse(top_travel_is_cyclic(self.all_plus, t))
        self.assertFalse(is_cyclic_travel(self.all_plus))

    def test_04_travel_criterion_matches_circuits(self):
        """Cyclic by travel iff some circuit is uniform, for every small matrix"""
        for r, n in [(1, 3), (2, 3), (2, 4), (3, 4)]:
            checked = 0
            for m in all_sign_matrices(r, n):
                self.assertEqual(is_cyclic_travel(m), not is_acyclic_bruteforce(m), m.to_text())
                checked += 1
            logger.info(f"{r}x{n}: {checked} matrices agree")

    def test_05_criterion_needs_more_columns_than_rows(self):
        with self.assertRaises(InputError):
            is_cyclic_travel(SignMatrix.constant(3, 3))

    # ===== PLAIN TRAVELS =====

    def test_06_plain_travel_counts(self):
        """sum_{i<r} C(n-1, i) plain travels"""
        self.assertEqual(plain_breakpoints(2, 3), [(2, 3), (3,), (3, 3)])
        for r, n, expected in [(2, 3, 3), (3, 4, 7), (3, 5, 11), (2, 4, 4)]:
            self.assertEqual(len(plain_travels(SignMatrix.constant(r, n))), expected)

    def test_07_travel_to_reorientation_of_constant_matrix(self):
        sets = acyclic_reorientations(self.all_plus)
        self.assertEqual(
            sorted(s.columns for s in sets),
            [(), (2, 3), (3,)],
        )
        for s in sets:
            reoriented = reorient(self.all_plus, s)
            self.assertTrue(is_acyclic_bruteforce(reoriented))

    def test_08_reorientation_travel_is_the_plain_travel(self):
        """The reoriented matrix walks exactly along the travel it came from"""
        m = SignMatrix.from_text("+--+\n-+++\n++-+")
        for t in plain_travels(m):
            s = travel_to_reorientation(m, t)
            self.assertEqual(top_travel(reorient(m, s)).breakpoints, t.breakpoints)

    def test_09_plain_travels_biject_onto_acyclic_classes(self):
        for (r, n), classes in [((2, 3), 3), ((3, 4), 7)]:
            for m in all_sign_matrices(r, n):
                from_travels = {s.columns for s in acyclic_reorientations(m)}
                brute = {s.columns for s in acyclic_reorientations_bruteforce(m)}
                self.assertEqual(from_travels, brute, m.to_text())
                self.assertEqual(len(from_travels), classes)
            self.assertEqual(len(plain_breakpoints(r, n)), classes)

    def test_10_travel_validation(self):
        with self.assertRaises(InputError):
            Travel.from_breakpoints(TravelKind.TOP, [3, 2], 2, 3)
        with self.assertRaises(InputError):
            Travel.from_breakpoints(TravelKind.TOP, [2, 3, 3], 2, 3)
        with self.assertRaises(InputError):
            Travel.from_json({"kind": "sideways", "breakpoints": [3]}, 2, 3)
        bottom = Travel.from_breakpoints(TravelKind.BOTTOM, [2, 2], 2, 3)
        with self.assertRaises(InputError):
            travel_to_reorientation(self.cyclic, bottom)

    def test_11_reorientation_sets_are_sorted(self):
        self.assertEqual(ReorientationSet.of([3, 1]).columns, (1, 3))
        self.assertIn(3, ReorientationSet.of([3, 1]))

    def test_12_travels_of_tall_matrices(self):
        """Travels exist for any shape; only the cyclicity verdict needs n > r"""
        tall = SignMatrix.from_text("+-\n-+\n++")
        self.assertEqual(top_travel(tall).breakpoints, (2, 2))
        self.assertEqual(bottom_travel(tall).breakpoints, (1,))
        for kind, breakpoints in [(TravelKind.TOP, [2, 2]), (TravelKind.BOTTOM, [1])]:
            cert = travel_certificate(tall, kind)
            self.assertTrue(cert.verified)
            self.assertIsNone(cert.witness["cyclic"])
            self.assertEqual(cert.witness["travel"], {"kind": kind.value, "breakpoints": breakpoints})
            self.assertFalse(cert.summary["criterion"])
            self.assertTrue(replay(cert))


if __name__ == "__main__":
    unittest.main()
