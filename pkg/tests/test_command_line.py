import contextlib
import io
import json
import os
import tempfile
import unittest

from deltashell.command_line import build_parser, main, run

from test_utils import get_data_path, timeout


def call(*argv):
    """Run the command line and return the exit code with everything it printed."""
    output = io.StringIO()
    with contextlib.redirect_stdout(output):
        code = main(list(argv))
    return code, output.getvalue()


def call_json(*argv):
    code, output = call(*argv, "--json")
    return code, json.loads(output)


def results(data):
    return {result["name"]: result["value"] for result in data["results"]}


class CommandLineTestCase(unittest.TestCase):
    def test_parser(self):
        args = build_parser().parse_args(["total", "problem.json", "--lmax", "5", "--tol", "1e-9"])
        self.assertEqual("total", args.command)
        self.assertEqual(5, args.lmax)
        self.assertEqual(1e-9, args.tol)
        self.assertFalse(args.oracle)
        self.assertIn("0-based", build_parser().epilog)

    def test_kappa(self):
        code, output = call("kappa", get_data_path("single_shell.json"))
        self.assertEqual(0, code)
        self.assertIn("kappa_minus: 1", output)

        code, data = call_json("kappa", get_data_path("attractive_pair.json"))
        self.assertEqual(0, code)
        values = results(data)
        self.assertEqual(2, values["kappa_minus"])
        self.assertEqual(2, values["oscillation_count"])
        self.assertEqual("two-count", values["two_shell_case"])
        self.assertEqual("kappa", data["command"])
        self.assertEqual([-5.0, -5.0], data["inputs"]["shells"]["strengths"])

    def test_threshold(self):
        code, data = call_json("kappa", get_data_path("threshold_pair.json"))
        self.assertEqual(0, code)
        values = results(data)
        self.assertEqual(0, values["kappa_minus"])
        self.assertEqual([0, 1], values["candidates"])
        self.assertEqual("mixed", values["two_shell_case"])
        self.assertTrue(data["warnings"])

        code, data = call_json("kappa", get_data_path("threshold_pair.json"), "--strict")
        self.assertEqual(1, code)
        self.assertIn("DegenerateSignature", data["errors"][0])

    def test_wide_tolerance(self):
        code, data = call_json("kappa", get_data_path("small_repulsive.json"), "--tol", "0.1")
        self.assertEqual(0, code)
        self.assertEqual(0, results(data)["kappa_minus"])
        self.assertTrue(any("clamped" in message for message in data["warnings"]))

        code, data = call_json(
            "kappa", get_data_path("small_repulsive.json"), "--tol", "0.1", "--strict"
        )
        self.assertEqual(0, code)

    def test_bounds(self):
        code, data = call_json("bounds", get_data_path("bargmann_pair.json"))
        self.assertEqual(0, code)
        values = results(data)
        self.assertAlmostEqual(1.0, values["bargmann"], places=12)
        self.assertEqual(0, values["kappa_minus"])
        self.assertEqual(0, values["certified_kappa_minus"])
        statuses = {verdict["criterion"]: verdict["status"] for verdict in data["verdicts"]}
        self.assertEqual("Holds", statuses["matrix_bargmann.norm"])
        self.assertEqual("Fails", statuses["gershgorin.positivity"])
        self.assertEqual("Fails", statuses["necessary.max_count"])
        self.assertEqual("Holds", statuses["bargmann.no_binding"])
        self.assertEqual("Fails", statuses["necessary.full_count"])

    def test_bounds_repulsive(self):
        code, data = call_json("bounds", get_data_path("repulsive.json"))
        self.assertEqual(0, code)
        self.assertEqual(0, results(data)["certified_kappa_minus"])

    def test_criteria(self):
        code, data = call_json("criteria", get_data_path("harmonic_critical.json"))
        self.assertEqual(0, code)
        values = results(data)
        self.assertEqual("infinite", values["n_pm"])
        self.assertEqual("harmonic", values["family"])

        code, data = call_json("criteria", get_data_path("periodic.json"))
        self.assertEqual(0, code)
        self.assertEqual("unknown", results(data)["essential_spectrum"])

        code, data = call_json("criteria", get_data_path("sampled.json"))
        self.assertEqual(0, code)
        self.assertEqual(11, results(data)["truncation_inertia"]["kappa_minus"]
                         + results(data)["truncation_inertia"]["kappa_zero"]
                         + results(data)["truncation_inertia"]["kappa_plus"])

    def test_total(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "ledger.csv")
            code, data = call_json("total", get_data_path("total_single.json"), "--csv", path)
            self.assertEqual(0, code)
            values = results(data)
            self.assertEqual(1, values["total"])
            self.assertEqual(1, values["truncation_l"])
            self.assertEqual(6.0, values["aggregate_upper"])
            with open(path) as f:
                lines = f.read().splitlines()
        self.assertEqual(["l,l_eff,mult,kappa", "0,0.0,1,1", "1,1.0,3,0"], lines)

    def test_sweep(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "sweep.csv")
            with timeout(self, 30):
                code, _ = call("sweep", get_data_path("sweep.json"), "--csv", path)
            self.assertEqual(0, code)
            with open(path) as f:
                lines = f.read().splitlines()
        self.assertEqual("strength:0,radius:1,kappa_minus", lines[0])
        self.assertEqual(25, len(lines))
        # strongest inner shell, outer shell at 1.5
        self.assertEqual("-4.0,1.5", lines[1].rsplit(",", 1)[0])

    def test_oracle_check(self):
        with timeout(self, 60):
            code, data = call_json("oracle-check", get_data_path("attractive_pair.json"))
        self.assertEqual(0, code)
        values = results(data)
        self.assertEqual(2, values["fd_count"])
        self.assertTrue(values["agree"])

    def test_errors(self):
        self.assertEqual(1, call("kappa", get_data_path("malformed.json"))[0])
        self.assertEqual(1, call("kappa", get_data_path("mismatched.json"))[0])
        self.assertEqual(1, call("total", get_data_path("single_shell.json"))[0])
        self.assertEqual(1, call("kappa", get_data_path("harmonic_critical.json"))[0])
        code, output = call("kappa", get_data_path("single_shell.json"), "--csv", os.devnull)
        self.assertEqual(1, code)

    def test_run(self):
        report, args = run(["kappa", get_data_path("single_shell.json"), "--tol", "1e-6"])
        self.assertEqual(1e-6, report.inputs["options"]["tolerance"])
        self.assertEqual(1, report.result("kappa_minus"))
        self.assertFalse(args.json)


if __name__ == "__main__":
    unittest.main()
