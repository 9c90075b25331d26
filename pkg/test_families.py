import logging
import unittest

from neighborly.errors import InputError
from neighborly.families import (
    SHAPE_REDUCTION,
    board_certificate,
    build_board,
    enumerate_realizations,
    formula_cells,
    min_cyclic_reorientation,
    realization_count,
    realization_from_code,
    sample_realization_codes,
    verify_lemma_family,
)
from neighborly.models.family import FamilyParams
from neighborly.models.signs import SignMatrix
from neighborly.replay import replay
from neighborly.signs import chessboard_of, reorient
from neighborly.travels import is_cyclic_travel

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class FamilyTest(unittest.TestCase):
    def setUp(self):
        self.base = FamilyParams(r=3, k=2)

    # ===== BOARDS =====

    def test_01_base_family_board(self):
        """Testing the k=2 board at rank 3"""
        logger.info("Testing family board construction...")
        b = build_board(self.base)
        self.assertEqual(b.n, 5)
        self.assertEqual(b.board.black_cells(), [(1, 1), (1, 2), (2, 3), (2, 4)])
        self.assertTrue(b.is_half_turn_symmetric())
        self.assertEqual(set(formula_cells(self.base)), set(b.board.black_cells()))

    def test_02_every_realization_has_the_family_board(self):
        b = build_board(self.base)
        self.assertEqual(realization_count(b), 128)
        for m in enumerate_realizations(b):
            self.assertEqual(chessboard_of(m), b.board)

    def test_03_general_family_needs_enough_single_rows(self):
        with self.assertRaises(InputError):
            build_board(FamilyParams(r=8, k=4, l=4))
        with self.assertRaises(InputError):
            build_board(FamilyParams(r=8, k=3))
        b = build_board(FamilyParams(r=8, k=3, l=1))
        self.assertEqual(b.single_rows, (1,))
        self.assertEqual(b.n, 14)
        self.assertEqual(len(b.board.black_cells()), 13)

    def test_04_board_certificate(self):
        cert = board_certificate(self.base)
        self.assertTrue(cert.verified)
        self.assertTrue(cert.summary["formula_matches"])
        self.assertEqual(
            cert.witness["upper_diagonal"],
            [[1, 1], [1, 2], [1, 3], [2, 3], [2, 4], [2, 5]],
        )
        self.assertTrue(replay(cert))

    # ===== REORIENTATION SEARCH =====

    def test_05_min_cyclic_reorientation(self):
        m = SignMatrix.constant(2, 3)
        self.assertIsNone(min_cyclic_reorientation(m, 0))
        s = min_cyclic_reorientation(m, 2)
        self.assertEqual(s.columns, (2,))
        self.assertTrue(is_cyclic_travel(reorient(m, s)))
        self.assertEqual(min_cyclic_reorientation(SignMatrix.from_text("+-+\n++-"), 1).columns, ())
        with self.assertRaises(InputError):
            min_cyclic_reorientation(m, -1)

    def test_06_realization_codes(self):
        b = build_board(self.base)
        with self.assertRaises(InputError):
            realization_from_code(b, 128)
        self.assertEqual(sample_realization_codes(b, 20, 7), sample_realization_codes(b, 20, 7))
        self.assertTrue(all(0 <= c < 128 for c in sample_realization_codes(b, 50, 3)))

    # ===== FAMILY SWEEPS =====

    def test_07_rank_three_sweep(self):
        """128 realizations, 88 acyclic, max |S| = 2, 11 shapes, 5 interior classes"""
        cert = verify_lemma_family(self.base)
        logger.info(f"Summary: {cert.summary}")
        self.assertTrue(cert.verified)
        self.assertTrue(cert.complete)
        self.assertEqual(cert.summary["realizations"], 128)
        self.assertEqual(cert.summary["acyclic"], 88)
        self.assertEqual(cert.summary["max_min_reorientation"], 2)
        self.assertEqual(cert.summary["raw_shape_count"], 11)
        self.assertEqual(cert.summary["interior_shape_count"], 5)
        self.assertEqual(cert.summary["interior_shapes_at_max"], 1)
        self.assertEqual(len(cert.witness["reorientations"]), 88)
        self.assertIsNone(cert.witness["counterexample"])

    def test_08_shape_classes_account_for_every_raw_shape(self):
        """11 raw (TT, BT) shapes reduce to 5 interior classes by a recorded rule"""
        cert = verify_lemma_family(self.base)
        shapes = cert.witness["shapes"]
        self.assertEqual(len(shapes["raw"]), 11)
        self.assertEqual(len(shapes["classes"]), 5)
        self.assertEqual(shapes["reduction"], SHAPE_REDUCTION)
        self.assertEqual(cert.summary["edge_shape_count"], len(shapes["edge"]))
        members = [s for c in shapes["classes"].values() for s in c["members"]]
        self.assertEqual(sorted(members + shapes["edge"]), sorted(shapes["raw"]))
        self.assertEqual(len(set(members) & set(shapes["edge"])), 0)
        at_two = [key for key, c in shapes["classes"].items() if c["max_min_reorientation"] == 2]
        self.assertEqual(len(at_two), 1)

        tampered = dict(cert.witness)
        tampered["shapes"] = dict(shapes, raw=shapes["raw"][1:])
        self.assertFalse(replay(cert.model_copy(update={"witness": tampered})))

    def test_09_larger_base_families(self):
        for r, realizations, acyclic in [(4, 1024, 672), (5, 8192, 5216)]:
            cert = verify_lemma_family(FamilyParams(r=r, k=2))
            self.assertTrue(cert.verified)
            self.assertEqual(cert.summary["realizations"], realizations)
            self.assertEqual(cert.summary["acyclic"], acyclic)
            self.assertEqual(cert.summary["max_min_reorientation"], 2)

    def test_10_general_family_sampled(self):
        """Both phases of the rank-8 general family, single blocks in rows 1 and 4"""
        for l, single in [(1, (1,)), (4, (4,))]:
            with self.subTest(l=l):
                p = FamilyParams(r=8, k=3, l=l)
                self.assertEqual(build_board(p).single_rows, single)
                cert = verify_lemma_family(p, mode="sampled", count=2000, seed=7)
                logger.info(f"l={l}: {cert.summary['acyclic']} acyclic, max |S| = {cert.summary['max_min_reorientation']}")
                self.assertTrue(cert.verified)
                self.assertEqual(cert.coverage.checked, 2000)
                self.assertEqual(cert.seed, 7)
                self.assertLessEqual(cert.summary["max_min_reorientation"], 3)
                self.assertTrue(replay(cert))
                again = verify_lemma_family(p, mode="sampled", count=2000, seed=7)
                self.assertEqual(again.witness, cert.witness)

    def test_11_sampled_mode_needs_count_and_seed(self):
        with self.assertRaises(InputError):
            verify_lemma_family(self.base, mode="sampled", count=10)
        with self.assertRaises(InputError):
            verify_lemma_family(self.base, mode="random")

    def test_12_case_budget_gives_partial_coverage(self):
        cert = verify_lemma_family(self.base, max_cases=40)
        self.assertFalse(cert.complete)
        self.assertFalse(cert.verified)
        self.assertTrue(replay(cert))
        self.assertEqual(cert.coverage.checked, 40)
        self.assertEqual(cert.coverage.total, 128)

    def test_13_sweep_replays_and_detects_tampering(self):
        cert = verify_lemma_family(self.base)
        self.assertTrue(replay(cert))
        code, _ = cert.witness["reorientations"][0]
        tampered_witness = dict(cert.witness)
        tampered_witness["reorientations"] = [[code, []]] + cert.witness["reorientations"][1:]
        tampered = cert.model_copy(update={"witness": tampered_witness})
        self.assertFalse(replay(tampered))


if __name__ == "__main__":
    unittest.main()
