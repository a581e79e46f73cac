"""tests for the bench command line"""
import io
import json
import os
import shutil
import tempfile
import unittest

from mock import patch, Mock

from bench.cli import build_parser, execute, OK, FAILURE, CONFIG_ERROR


def run(*argv):
    with patch("sys.stdout", new_callable=io.StringIO) as stdout:
        status = execute(build_parser().parse_args(list(argv)))
    return status, stdout.getvalue()


class TestParser(unittest.TestCase):

    def test_run_flags(self):
        args = build_parser().parse_args(["--log-level", "DEBUG", "run", "--config", "c.json", "--iters", "50",
                                          "--workers", "3", "--no-timing"])
        self.assertEqual((args.cmd, args.config, args.iterations, args.workers, args.timing), ("run", "c.json", 50, 3, False))
        self.assertIsNone(args.seed)
        self.assertEqual(args.log_level, "DEBUG")

    def test_solve_defaults(self):
        args = build_parser().parse_args(["solve", "--algo", "goa", "--problem", "spring"])
        self.assertEqual((args.seed, args.iterations, args.population, args.dimension), (0, 500, 30, None))


class TestCommands(unittest.TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def test_list(self):
        status, output = run("list")
        self.assertEqual(status, OK)
        for name in ["goa-23", "msigoa", "rot-rastrigin", "welded-beam"]:
            self.assertIn(name, output)

    def test_solve_prints_json(self):
        trace_path = os.path.join(self.dir, "trace.csv")
        status, output = run("solve", "--algo", "msigoa", "--problem", "sphere", "--dim", "2", "--iters", "5",
                             "--pop", "4", "--seed", "3", "--trace", trace_path)
        self.assertEqual(status, OK)
        result = json.loads(output)
        self.assertEqual((result["algorithm"], result["problem"], result["dim"], result["seed"]), ("msigoa", "sphere", 2, 3))
        self.assertEqual(len(result["best_position"]), 2)
        # initial population, then sweep + escape + restart every iteration
        self.assertEqual(result["evaluations"], 4 + 5 * 12)
        self.assertTrue(result["feasible"])
        with open(trace_path) as f:
            lines = f.read().splitlines()
        self.assertEqual(len(lines), 6)
        self.assertEqual(float(lines[-1].split(",")[1]), result["best_fitness"])

    def test_solve_is_repeatable(self):
        argv = ["solve", "--algo", "goa-12", "--problem", "spring", "--iters", "3", "--pop", "5"]
        self.assertEqual(run(*argv), run(*argv))

    def test_solve_unknown_names(self):
        self.assertEqual(run("solve", "--algo", "pso", "--problem", "sphere")[0], CONFIG_ERROR)
        self.assertEqual(run("solve", "--algo", "goa", "--problem", "spherez")[0], CONFIG_ERROR)
        self.assertEqual(run("solve", "--algo", "goa", "--problem", "spring", "--dim", "5")[0], CONFIG_ERROR)
        self.assertEqual(run("solve", "--algo", "goa", "--problem", "sphere", "--pop", "1")[0], CONFIG_ERROR)

    def test_run_writes_results(self):
        config = os.path.join(self.dir, "campaign.json")
        out = os.path.join(self.dir, "out")
        with open(config, "w") as f:
            json.dump({"algorithms": [{"name": "goa"}, {"name": "msigoa"}], "problems": [{"name": "sphere", "dim": 2}],
                       "iterations": 500, "runs": 51}, f)
        status, _ = run("run", "--config", config, "--out", out, "--iters", "3", "--pop", "4", "--runs", "2")
        self.assertEqual(status, OK)
        with open(os.path.join(out, "results.csv")) as f:
            self.assertEqual(len(f.read().splitlines()), 1 + 4)

    def test_run_config_errors(self):
        self.assertEqual(run("run", "--config", os.path.join(self.dir, "missing.json"))[0], CONFIG_ERROR)
        config = os.path.join(self.dir, "campaign.json")
        with open(config, "w") as f:
            json.dump({"algorithms": [{"name": "goa"}], "problems": [{"name": "nope"}]}, f)
        self.assertEqual(run("run", "--config", config)[0], CONFIG_ERROR)

    def test_other_failures(self):
        with patch("bench.cli.run_campaign", side_effect=RuntimeError("disk on fire")):
            config = os.path.join(self.dir, "campaign.json")
            with open(config, "w") as f:
                json.dump({"algorithms": [{"name": "goa"}], "problems": [{"name": "sphere"}],
                           "output": os.path.join(self.dir, "out")}, f)
            self.assertEqual(run("run", "--config", config)[0], FAILURE)
        with patch.dict("bench.cli.COMMANDS", {"list": Mock(side_effect=KeyboardInterrupt)}):
            self.assertEqual(run("list")[0], FAILURE)


if __name__ == '__main__':
    unittest.main()
