import logging
import unittest
from fractions import Fraction

from neighborly.errors import InputError, NotRealizableError
from neighborly.geometry.gale import gale_transform
from neighborly.geometry.points import moment_curve_points, random_config
from neighborly.geometry.projective import (
    apply_projective,
    denominators,
    failing_removal,
    find_realizable_flip,
    find_sign_flip,
    is_k_neighbourly,
    is_permissible,
    neighbourly_certificate,
    projective_certificate,
    projective_from_signs,
    radon_circuits,
    sign_flip_certificate,
    sign_vectors,
    zero_in_hull_complements,
)
from neighborly.models.geometry import GaleDiagram, PointConfig, ProjectiveMap, SignVector
from neighborly.replay import replay
from neighborly.utils.formats import parse_signs
from neighborly.utils.rationals import sign_of

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def diagram(*vectors):
    return GaleDiagram(vectors=tuple(tuple(Fraction(v) for v in vector) for vector in vectors))


class ProjectiveTest(unittest.TestCase):
    def setUp(self):
        self.three = PointConfig.of([(0,), (1,), (2,)])
        self.pentagon = PointConfig.of([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])
        self.with_interior = PointConfig.of([(0, 0), (4, 0), (0, 4), (1, 1)])
        self.hexagon = moment_curve_points(2, range(1, 7))

    # ===== PROJECTIVE MAPS =====

    def test_01_constant_pattern_gives_the_identity(self):
        """Testing that the all-plus pattern needs no hyperplane"""
        logger.info("Testing projective maps from sign patterns...")
        p = projective_from_signs(self.pentagon, parse_signs("+++++"))
        self.assertEqual(p.c, (0, 0))
        self.assertEqual(p.delta, 1)
        self.assertEqual(apply_projective(p, self.pentagon), self.pentagon)

    def test_02_denominator_signs_follow_the_pattern(self):
        e = parse_signs("-++")
        p = projective_from_signs(self.three, e)
        self.assertEqual(tuple(sign_of(v) for v in denominators(p, self.three)), e.signs)
        cert = projective_certificate(self.three, e)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.summary["denominator_signs"], "-++")
        self.assertTrue(replay(cert))

    def test_03_pattern_without_a_hyperplane(self):
        with self.assertRaises(NotRealizableError):
            projective_from_signs(self.three, parse_signs("+-+"))
        cert = projective_certificate(self.three, parse_signs("[1, -1, 1]"))
        self.assertFalse(cert.verified)
        self.assertTrue(cert.refuted)
        self.assertIsNone(cert.witness["map"])
        self.assertTrue(replay(cert))

    def test_04_points_sent_to_infinity_are_rejected(self):
        p = ProjectiveMap(A=((1,),), b=(0,), c=(1,), delta=-1)
        self.assertFalse(is_permissible(p, self.three))
        with self.assertRaises(InputError):
            apply_projective(p, self.three)
        singular = ProjectiveMap(A=((1,),), b=(1,), c=(1,), delta=1)
        with self.assertRaises(InputError):
            apply_projective(singular, PointConfig.of([(5,), (6,)]))

    # ===== NEIGHBOURLINESS =====

    def test_05_convex_pentagon(self):
        circuits = radon_circuits(self.pentagon)
        self.assertEqual(len(circuits), 5)
        self.assertTrue(all(c.signs[0] == 1 for c in circuits))
        self.assertTrue(is_k_neighbourly(self.pentagon, 1))
        self.assertTrue(is_k_neighbourly(self.pentagon, 1, strict=True))

    def test_06_interior_point_breaks_neighbourliness(self):
        circuits = radon_circuits(self.with_interior)
        self.assertEqual(circuits[0].signs, (1, 1, 1, -1))
        self.assertFalse(is_k_neighbourly(self.with_interior, 2))
        self.assertFalse(is_k_neighbourly(self.with_interior, 1, strict=True))
        cert = neighbourly_certificate(self.with_interior, 1, strict=True)
        self.assertFalse(cert.verified)
        self.assertEqual(cert.witness["counterexample"], [[1, 2, 3, 4], "+++-"])
        self.assertTrue(replay(cert))

    def test_07_cyclic_polytopes(self):
        x = moment_curve_points(4, range(1, 9))
        self.assertTrue(is_k_neighbourly(x, 2))
        self.assertTrue(is_k_neighbourly(x, 2, strict=True))
        self.assertTrue(is_k_neighbourly(self.hexagon, 1, strict=True))

    # ===== SIGN FLIPS =====

    def test_08_sign_vectors_fix_the_first_entry(self):
        vectors = list(sign_vectors(3))
        self.assertEqual([e.to_text() for e in vectors], ["+++", "++-", "+-+", "+--"])

    def test_09_relative_interior_matters(self):
        cross = diagram((1, 0), (-1, 0), (0, 1), (0, -1))
        self.assertEqual(find_sign_flip(cross, 0).signs, (1, 1, 1, 1))
        bent = diagram((1, 0), (-1, 0), (0, -1), (0, -1))
        self.assertEqual(find_sign_flip(bent, 0).signs, (1, 1, 1, -1))
        self.assertEqual(find_sign_flip(bent, 0, strict=False).signs, (1, 1, 1, 1))
        self.assertTrue(zero_in_hull_complements(bent.flipped(SignVector(signs=(1, 1, 1, -1))), 0, strict=True))

    def test_10_failing_removal(self):
        cross = diagram((1, 0), (-1, 0), (0, 1), (0, -1))
        self.assertEqual(failing_removal(cross, 1, strict=True), (1,))
        self.assertIsNone(failing_removal(cross, 1))
        with self.assertRaises(InputError):
            failing_removal(cross, 5)

    def test_11_hexagon_flip_certificate(self):
        cert = sign_flip_certificate(self.hexagon, 1)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.witness["signs"], "++++++")
        self.assertIsNotNone(cert.witness["map"])
        self.assertTrue(cert.summary["realizable"])
        self.assertTrue(cert.summary["image_neighbourly"])
        self.assertTrue(replay(cert))

    def test_12_flip_certificate_needs_a_realized_map(self):
        """Collinear points have no flip making every point a vertex"""
        cert = sign_flip_certificate(self.three, 1)
        self.assertFalse(cert.verified)
        self.assertIsNone(cert.witness["signs"])
        self.assertIsNone(cert.witness["map"])
        self.assertIsNone(cert.witness["unrealized_flip"])
        self.assertFalse(cert.summary["realizable"])
        self.assertTrue(replay(cert))
        forged = cert.model_copy(update={"verified": True})
        self.assertFalse(replay(forged))

        good = sign_flip_certificate(self.hexagon, 1)
        unmapped = dict(good.witness, map=None)
        self.assertFalse(replay(good.model_copy(update={"witness": unmapped})))

    def test_13_realized_flips_give_neighbourly_images(self):
        """Every realized strict flip at k = floor(d/2) makes every k-set of the image a face"""
        realized = {}
        for d in (2, 4):
            k = d // 2
            n = d + -(-d // k) + 1
            realized[d] = 0
            for seed in range(40):
                if realized[d] >= 10:
                    break
                x = random_config(n, d, seed)
                found = find_realizable_flip(x, k)
                if found is None:
                    logger.info(f"d={d} seed {seed}: no realizable flip")
                    continue
                e, p = found
                self.assertTrue(zero_in_hull_complements(gale_transform(x).flipped(e), k, strict=True))
                self.assertEqual(tuple(sign_of(v) for v in denominators(p, x)), e.signs)
                image = apply_projective(p, x)
                self.assertTrue(is_k_neighbourly(image, k, strict=True), f"d={d} seed {seed}")
                realized[d] += 1
            logger.info(f"d={d}, k={k}, n={n}: {realized[d]} realized flips")
        self.assertGreaterEqual(realized[2], 10)
        self.assertGreaterEqual(realized[4], 10)
        self.assertGreaterEqual(sum(realized.values()), 20)


if __name__ == "__main__":
    unittest.main()
