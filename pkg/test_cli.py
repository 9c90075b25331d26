import json
import logging
import tempfile
import unittest
from pathlib import Path

from typer.testing import CliRunner

from neighborly.certificates import read_certificates
from neighborly.cli import app
from neighborly.geometry.points import moment_curve_points
from neighborly.models.geometry import PointConfig
from neighborly.utils.formats import write_points

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class CommandLineTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        self.out = self.dir / "out.jsonl"

    def tearDown(self):
        self.tmp.cleanup()

    def invoke(self, *args):
        result = self.runner.invoke(app, [str(a) for a in args])
        logger.info(f"neighborly {' '.join(map(str, args))} -> {result.exit_code}")
        return result

    def points_file(self, name, x):
        path = self.dir / name
        write_points(path, x)
        return path

    def certificate(self):
        certs = read_certificates(self.out)
        self.assertEqual(len(certs), 1)
        return certs[0]

    # ===== MATRIX COMMANDS =====

    def test_01_verify_prop_llom(self):
        """Testing the exhaustive 3x4 sweep from the command line"""
        result = self.invoke("verify", "prop-llom", "--rank", 3, "--cols", 4, "--output", self.out)
        self.assertEqual(result.exit_code, 0, result.output)
        cert = self.certificate()
        self.assertEqual((cert.coverage.checked, cert.coverage.total), (4096, 4096))

    def test_02_verify_prop_pt_partial(self):
        result = self.invoke("verify", "prop-pt", "--rank", 2, "--cols", 3, "--max-cases", 5, "--output", self.out)
        self.assertEqual(result.exit_code, 2, result.output)
        self.assertFalse(self.certificate().complete)

    def test_03_family_verify(self):
        result = self.invoke("family", "verify", "--rank", 3, "--k", 2, "--output", self.out)
        self.assertEqual(result.exit_code, 0, result.output)
        cert = self.certificate()
        self.assertEqual(cert.summary["max_min_reorientation"], 2)
        self.assertEqual(cert.summary["interior_shape_count"], 5)

    def test_04_family_build_rejects_missing_single_rows(self):
        result = self.invoke("family", "build", "--rank", 8, "--k", 4, "--l", 4)
        self.assertEqual(result.exit_code, 2)
        ok = self.invoke("family", "build", "--rank", 8, "--k", 3, "--l", 1, "--output", self.out)
        self.assertEqual(ok.exit_code, 0, ok.output)

    def test_05_travel(self):
        matrix = self.dir / "m.txt"
        matrix.write_text("+-+\n++-\n")
        result = self.invoke("travel", "--matrix", matrix, "--kind", "top", "--output", self.out)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(self.certificate().witness["cyclic"])
        self.assertEqual(self.invoke("travel", "--matrix", matrix, "--kind", "sideways").exit_code, 2)
        self.assertEqual(self.invoke("travel", "--matrix", self.dir / "missing.txt").exit_code, 2)

    # ===== GEOMETRY COMMANDS =====

    def test_06_gale_and_inverse(self):
        square = self.points_file("square.json", PointConfig.of([(0, 0), (1, 0), (1, 1), (0, 1)]))
        result = self.invoke("gale", "--points", square, "--output", self.out)
        self.assertEqual(result.exit_code, 0, result.output)
        vectors = self.dir / "g.json"
        vectors.write_text(json.dumps([["1"], ["-1"], ["1"], ["-1"]]))
        inverse = self.invoke("gale", "--points", vectors, "--invert", "--output", self.out)
        self.assertEqual(inverse.exit_code, 0, inverse.output)
        self.assertEqual(len(self.certificate().witness["points"]), 4)

    def test_07_divide(self):
        four = self.points_file("four.json", PointConfig.of([(0,), (1,), (2,), (3,)]))
        five = self.points_file("five.json", PointConfig.of([(1,), (2,), (3,), (4,), (5,)]))
        self.assertEqual(self.invoke("divide", "--points", four, "--k", 1).exit_code, 1)
        self.assertEqual(self.invoke("divide", "--points", five, "--k", 1).exit_code, 0)
        self.assertEqual(self.invoke("divide", "--points", five, "--k", 0, "--s", 3).exit_code, 0)
        self.assertEqual(self.invoke("divide", "--points", four, "--k", 1, "--max-cases", 2).exit_code, 2)

    def test_08_neighbourly_and_signflip(self):
        cyclic = self.points_file("c48.json", moment_curve_points(4, range(1, 9)))
        self.assertEqual(self.invoke("neighbourly", "--points", cyclic, "--k", 2, "--strict").exit_code, 0)
        hexagon = self.points_file("hex.json", moment_curve_points(2, range(1, 7)))
        self.assertEqual(self.invoke("signflip", "--points", hexagon, "--k", 1).exit_code, 0)

    def test_09_projective(self):
        three = self.points_file("three.json", PointConfig.of([(0,), (1,), (2,)]))
        good = self.dir / "good.txt"
        good.write_text("-++\n")
        bad = self.dir / "bad.txt"
        bad.write_text("+-+\n")
        self.assertEqual(self.invoke("projective", "--points", three, "--signs", good).exit_code, 0)
        self.assertEqual(self.invoke("projective", "--points", three, "--signs", bad).exit_code, 1)

    def test_10_bounds(self):
        table = self.dir / "table.json"
        table.write_text(json.dumps([
            {"function": "lambda", "d": d, "k": 1, "lower": 2 * d + 3, "upper": 2 * d + 3} for d in range(5)
        ]))
        result = self.invoke("bounds", "--table", table, "--output", self.out)
        self.assertEqual(result.exit_code, 0, result.output)
        clash = self.dir / "clash.json"
        clash.write_text(json.dumps([
            {"function": "lambda", "d": 2, "k": 1, "lower": 7},
            {"function": "mu", "d": 3, "k": 1, "upper": 6},
        ]))
        self.assertEqual(self.invoke("bounds", "--table", clash).exit_code, 2)

    # ===== REPLAY =====

    def test_11_replay(self):
        self.invoke("verify", "prop-llom", "--rank", 2, "--cols", 3, "--output", self.out)
        self.assertEqual(self.invoke("replay", self.out).exit_code, 0)

        payload = json.loads(self.out.read_text())
        payload["witness"]["cyclic_mask"] = format(int(payload["witness"]["cyclic_mask"], 16) ^ 1, "x")
        tampered = self.dir / "tampered.jsonl"
        tampered.write_text(json.dumps(payload) + "\n")
        self.assertEqual(self.invoke("replay", tampered).exit_code, 1)

        payload["schema"] = "v0"
        foreign = self.dir / "foreign.jsonl"
        foreign.write_text(json.dumps(payload) + "\n")
        self.assertEqual(self.invoke("replay", foreign).exit_code, 2)


if __name__ == "__main__":
    unittest.main()
