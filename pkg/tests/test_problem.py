import json
import os
import tempfile
import unittest

from deltashell import log
from deltashell.api import operation
from deltashell.api.errors import ProblemFileError
from deltashell.api.problem import SweepAxis, load_problem, parse_problem
from deltashell.api.report import Report, collect_warnings
from deltashell.api.tail_model import HarmonicTail, PeriodicTail, SampledTail
from deltashell.api.verdict import holds

from test_utils import get_data_path


class ProblemTestCase(unittest.TestCase):
    def test_parse(self):
        problem = parse_problem(
            {
                "shells": {"radii": [1.5, 1], "strengths": [2, -2]},
                "channel": {"l": 0},
                "options": {"tolerance": 1e-10, "oracle": True, "omega_plus": [0]},
            }
        )
        self.assertEqual([1.0, 1.5], problem.config.radii.tolist())
        self.assertEqual(0.0, problem.require_channel().l)
        self.assertEqual(1e-10, problem.options.tolerance)
        self.assertTrue(problem.options.oracle)
        self.assertEqual((0,), problem.options.omega_plus)
        self.assertTrue(problem.tail.is_finite)
        with self.assertRaises(ProblemFileError):
            problem.require_space()

    def test_channel_pair(self):
        problem = parse_problem({"channel": {"n": 2, "ell": 0}})
        self.assertEqual(-0.5, problem.channel.l)
        self.assertEqual({"n": 2, "ell": 0}, problem.to_dict()["channel"])
        self.assertEqual(0, problem.config.size)

    def test_families(self):
        self.assertIsInstance(
            parse_problem({"family": {"kind": "harmonic", "amplitude": 1}}).tail, HarmonicTail
        )
        periodic = parse_problem(
            {"family": {"kind": "periodic", "spacings": [1], "strengths": [-1]}}
        ).tail
        self.assertIsInstance(periodic, PeriodicTail)
        sampled = parse_problem(
            {
                "family": {
                    "kind": "sampled",
                    "spacings": [1, 1],
                    "strengths": [-1, -1],
                    "assertions": {"brinck_bounded": True},
                }
            }
        ).tail
        self.assertIsInstance(sampled, SampledTail)
        self.assertTrue(sampled.assertion("brinck_bounded"))

    def test_sweep(self):
        problem = parse_problem(
            {
                "shells": {"radii": [1], "strengths": [-1]},
                "options": {
                    "sweep": [
                        {"parameter": "strength:0", "start": -2, "stop": -1, "num": 3},
                        {"parameter": "radius:0", "values": [1, 2]},
                    ]
                },
            }
        )
        self.assertEqual(
            (
                SweepAxis("strength", 0, (-2.0, -1.5, -1.0)),
                SweepAxis("radius", 0, (1.0, 2.0)),
            ),
            problem.options.sweep,
        )
        self.assertEqual("radius:0", problem.options.sweep[1].label)

    def assert_field(self, field, data):
        with self.assertRaises(ProblemFileError) as context:
            parse_problem(data)
        self.assertEqual(field, context.exception.field)

    def test_errors(self):
        self.assert_field("unknown", {"unknown": {}})
        self.assert_field("space", {"channel": {"l": 0}, "space": {"n": 3}})
        self.assert_field("options.bogus", {"options": {"bogus": 1}})
        self.assert_field("channel", {"channel": {"l": -1}})
        self.assert_field("channel", {"channel": {"n": 3}})
        self.assert_field("channel.n", {"channel": {"n": 3.5, "ell": 0}})
        self.assert_field("space.n", {"space": {"n": 1}})
        self.assert_field("shells.strengths", {"shells": {"radii": [1, 2], "strengths": [1]}})
        self.assert_field("shells.radii", {"shells": {"radii": [1, 1], "strengths": [1, 1]}})
        self.assert_field("shells.radii[0]", {"shells": {"radii": ["a"], "strengths": [1]}})
        self.assert_field("family.kind", {"family": {"kind": "fractal"}})
        self.assert_field(
            "family.assertions.everything",
            {
                "family": {
                    "kind": "sampled",
                    "spacings": [1],
                    "strengths": [1],
                    "assertions": {"everything": True},
                }
            },
        )
        self.assert_field("options.oracle", {"options": {"oracle": "yes"}})
        self.assert_field(
            "options.sweep[0].parameter",
            {"options": {"sweep": [{"parameter": "mass:0", "values": [1]}]}},
        )
        self.assert_field(None, [])

    def test_omega_plus_indices(self):
        shells = {"radii": [2, 1], "strengths": [-1, -2]}
        problem = parse_problem({"shells": shells, "options": {"omega_plus": [0, 1]}})
        self.assertEqual((0, 1), problem.options.omega_plus)
        # indices run over the shells sorted by radius, starting at 0
        self.assertEqual(-2.0, problem.config.strengths[0])
        with self.assertRaises(ProblemFileError) as context:
            parse_problem({"shells": shells, "options": {"omega_plus": [1, 2]}})
        self.assertEqual("options.omega_plus[1]", context.exception.field)
        self.assertIn("0-based", str(context.exception))
        self.assert_field(
            "options.omega_plus[0]", {"shells": shells, "options": {"omega_plus": [-1]}}
        )

    def test_with_options(self):
        problem = parse_problem({"options": {"tolerance": 1e-8}})
        changed = problem.with_options(tolerance=None, oracle=True, lmax=5)
        self.assertEqual(1e-8, changed.options.tolerance)
        self.assertTrue(changed.options.oracle)
        self.assertEqual(5, changed.options.lmax)
        self.assertFalse(problem.options.oracle)

    def test_load(self):
        problem = load_problem(get_data_path("single_shell.json"))
        self.assertEqual(get_data_path("single_shell.json"), problem.source)
        self.assertEqual([-3.0], problem.config.strengths.tolist())
        with self.assertRaises(ProblemFileError) as context:
            load_problem(get_data_path("malformed.json"))
        self.assertIsNotNone(context.exception.line)
        with self.assertRaises(ProblemFileError):
            load_problem(get_data_path("missing.json"))

    def test_round_trip(self):
        problem = load_problem(get_data_path("sweep.json"))
        again = parse_problem(json.loads(json.dumps(problem.to_dict())))
        self.assertEqual(problem.config, again.config)
        self.assertEqual(problem.options, again.options)


class ReportTestCase(unittest.TestCase):
    def test_report(self):
        report = Report("kappa", {"channel": {"l": 0}})
        report.add("kappa_minus", 1)
        report.add("candidates", [0, 1], "threshold")
        report.add_verdict(holds("matrix_bargmann.norm", "small", 0))
        self.assertEqual(1, report.result("kappa_minus"))
        with self.assertRaises(KeyError):
            report.result("total")
        self.assertTrue(report.ok)
        data = json.loads(report.to_json())
        self.assertNotIn("errors", data)
        self.assertEqual("threshold", data["results"][1]["note"])
        self.assertEqual("Holds", data["verdicts"][0]["status"])
        self.assertIn("candidates: [0, 1] (threshold)", report.render())

        report.error("counts disagree")
        self.assertFalse(report.ok)
        self.assertEqual(["counts disagree"], report.to_dict()["errors"])

    def test_csv(self):
        report = Report("total")
        with self.assertRaises(ValueError):
            report.write_csv(os.devnull)
        report.set_table(("l", "kappa"), [(0, 1), (1, 0)])
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "ledger.csv")
            report.write_csv(path)
            with open(path) as f:
                self.assertEqual(["l,kappa", "0,1", "1,0"], f.read().splitlines())

    def test_collect_warnings(self):
        report = Report("sweep")
        with collect_warnings(report):
            log.warning("threshold configuration")
            log.info("not collected")
        log.warning("after the block")
        self.assertEqual(["threshold configuration"], report.warnings)


class OperationTestCase(unittest.TestCase):
    def test_registry(self):
        kappa = operation.get_operation("kappa")
        self.assertEqual("Kappa", kappa.__name__)
        with self.assertRaises(KeyError):
            operation.get_operation("volume")
        operation.reload_operations()
        self.assertEqual(
            {"kappa", "bounds", "criteria", "total", "sweep", "oracle-check"},
            set(operation.OPERATIONS),
        )


if __name__ == "__main__":
    unittest.main()
