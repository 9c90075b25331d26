import logging
import unittest
from math import comb

from neighborly.errors import InputError
from neighborly.geometry.divisibility import (
    bipartition_count,
    bipartitions,
    check_partition,
    is_k_divisible,
    is_s_k_divisible,
    radon_lower_bound_instance,
    set_partitions,
    stirling2,
)
from neighborly.geometry.gale import radon_partition
from neighborly.geometry.points import affine_image, is_general_position, random_config
from neighborly.models.geometry import PointConfig
from neighborly.replay import replay
from neighborly.utils.rationals import format_rational, parse_rational

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class DivisibilityTest(unittest.TestCase):
    def setUp(self):
        self.five = PointConfig.of([(1,), (2,), (3,), (4,), (5,)])
        self.four = PointConfig.of([(0,), (1,), (2,), (3,)])

    # ===== PARTITION ENUMERATION =====

    def test_01_bipartition_enumeration(self):
        """Testing that every bipartition appears once with label 1 in the first block"""
        logger.info("Testing bipartition enumeration...")
        parts = list(bipartitions(5))
        self.assertEqual(len(parts), bipartition_count(5))
        self.assertEqual(len(parts), 15)
        self.assertEqual(len(set(parts)), 15)
        self.assertTrue(all(1 in a for a, _ in parts))
        self.assertEqual(parts[0], ((1, 3, 4, 5), (2,)))

    def test_02_set_partitions_match_stirling_numbers(self):
        for n, s, expected in [(5, 2, 15), (5, 3, 25), (4, 2, 7), (7, 3, 301)]:
            parts = list(set_partitions(n, s))
            self.assertEqual(len(parts), expected)
            self.assertEqual(stirling2(n, s), expected)
            self.assertEqual(len(set(parts)), expected)
            self.assertTrue(all(len(blocks) == s and all(blocks) for blocks in parts))
        self.assertEqual(list(set_partitions(3, 4)), [])

    # ===== k-DIVISIBILITY =====

    def test_03_five_points_on_a_line_are_one_divisible(self):
        """2d+3 points in dimension 1 survive any single removal"""
        self.assertEqual(check_partition(self.five.points, ((1, 3, 5), (2, 4)), 1).keys(), {"blocks", "removals"})
        cert = is_k_divisible(self.five, 1)
        self.assertTrue(cert.verified)
        self.assertTrue(cert.complete)
        self.assertEqual(len(cert.witness["removals"]), 5)
        self.assertTrue(replay(cert))

    def test_04_four_points_on_a_line_are_not(self):
        cert = is_k_divisible(self.four, 1)
        self.assertFalse(cert.verified)
        self.assertTrue(cert.complete)
        self.assertTrue(cert.refuted)
        refutations = cert.witness["refutations"]
        self.assertEqual(len(refutations), 7)
        self.assertTrue(all("normal" in r for r in refutations))
        self.assertTrue(all(len(r["removed"]) == 1 for r in refutations))
        self.assertTrue(replay(cert))

    def test_05_tampered_witness_does_not_replay(self):
        cert = is_k_divisible(self.five, 1)
        witness = dict(cert.witness)
        witness["blocks"] = [[1, 2, 3], [4, 5]]
        self.assertFalse(replay(cert.model_copy(update={"witness": witness})))

        refuted = is_k_divisible(self.four, 1)
        refutations = [dict(r) for r in refuted.witness["refutations"]]
        emptied = [
            i for i, r in enumerate(refutations) if any(set(block) <= set(r["removed"]) for block in r["blocks"])
        ]
        self.assertTrue(emptied)
        flipped = [dict(r) for r in refutations]
        entry = flipped[emptied[0]]
        entry["normal"] = [format_rational(-parse_rational(v)) for v in entry["normal"]]
        entry["offset"] = format_rational(-parse_rational(entry["offset"]))
        self.assertFalse(replay(refuted.model_copy(update={"witness": dict(refuted.witness, refutations=flipped)})))
        bare = [dict(r) for r in refutations]
        del bare[emptied[0]]["normal"]
        self.assertFalse(replay(refuted.model_copy(update={"witness": dict(refuted.witness, refutations=bare)})))

    def test_06_radon_partition_is_the_only_zero_divisible_split(self):
        for seed in range(4):
            x = random_config(4, 2, seed)
            part = radon_partition(x)
            cert = is_k_divisible(x, 0)
            self.assertTrue(cert.verified)
            self.assertEqual(cert.witness["blocks"], [list(part.a), list(part.b)])

    def test_07_random_planar_configurations(self):
        """(k+1)d + (k+2) points in the plane are k-divisible: 7 points for k=1, 10 for k=2"""
        for n, k in [(7, 1), (10, 2)]:
            for seed in range(3):
                x = random_config(n, 2, seed)
                cert = is_k_divisible(x, k)
                logger.info(f"n={n} k={k} seed {seed}: {cert.summary}")
                self.assertTrue(cert.verified)
                self.assertTrue(cert.complete)
                self.assertEqual(len(cert.witness["removals"]), comb(n, k))
                self.assertTrue(replay(cert))

    def test_08_affine_maps_preserve_the_verdict(self):
        x = random_config(5, 1, seed=5)
        moved = affine_image(x, [[3]], [7])
        self.assertEqual(is_k_divisible(x, 1).verified, is_k_divisible(moved, 1).verified)
        self.assertTrue(is_k_divisible(moved, 1).verified)

    def test_09_input_validation(self):
        with self.assertRaises(InputError):
            is_k_divisible(self.four, 5)
        with self.assertRaises(InputError):
            is_k_divisible(PointConfig.of([(0, 0), (1, 1), (2, 2), (3, 5)]), 0)
        with self.assertRaises(InputError):
            is_s_k_divisible(self.four, 1, 0)

    def test_10_case_budget_is_partial(self):
        cert = is_k_divisible(self.four, 1, max_cases=3)
        self.assertFalse(cert.verified)
        self.assertFalse(cert.complete)
        self.assertEqual(cert.coverage.checked, 3)
        self.assertEqual(cert.coverage.total, 7)

    # ===== s-BLOCK VERSION =====

    def test_11_two_blocks_agree_with_k_divisibility(self):
        for x in (self.five, self.four):
            self.assertEqual(is_s_k_divisible(x, 2, 1).verified, is_k_divisible(x, 1).verified)

    def test_12_three_block_partition_of_seven_planar_points(self):
        x = random_config(7, 2, seed=2)
        cert = is_s_k_divisible(x, 3, 0)
        self.assertTrue(cert.verified)
        self.assertEqual(len(cert.witness["blocks"]), 3)
        self.assertTrue(replay(cert))

    def test_13_partition_cap_gives_partial_coverage(self):
        x = random_config(7, 2, seed=2)
        cert = is_s_k_divisible(x, 3, 0, cap=5)
        self.assertFalse(cert.complete)
        self.assertFalse(cert.verified)
        self.assertEqual(cert.coverage.total, 301)

    # ===== LOWER-BOUND INSTANCES =====

    def test_14_moment_curve_instances(self):
        params = (0, 1, 3, 7, 12)
        shifted = radon_lower_bound_instance(1, 1, params=params)
        self.assertEqual((shifted.n, shifted.d), (5, 1))
        printed = radon_lower_bound_instance(1, 1, reading="printed", params=params)
        self.assertEqual((printed.n, printed.d), (5, 2))
        logger.info(f"printed instance in general position: {is_general_position(printed)}")
        with self.assertRaises(InputError):
            radon_lower_bound_instance(1, 1, reading="sideways")
        with self.assertRaises(InputError):
            radon_lower_bound_instance(1, 1, params=(1, 2, 3))


if __name__ == "__main__":
    unittest.main()
