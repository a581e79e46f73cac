"""
The ``bench`` command line: ``run`` a campaign, ``list`` the catalog,
``solve`` a single problem.
"""
from __future__ import print_function

import argparse
import json
import logging
from logging.handlers import RotatingFileHandler

from bench.campaign import run_campaign
from bench.config import ConfigError, UnknownNameError, parse_config
from bench.output import write_trace
from core.errors import InvalidArgumentError
from core.records import RunConfig, DEFAULT_POPULATION_SIZE, DEFAULT_MAX_ITERATIONS
from msigoa import StrategyConfig, VARIANTS, run_variant
from problems import CATALOG, get_problem, describe
from helpers.logger import setup_logger

logger = setup_logger(__name__, "info")

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
logging_format = (
    '[%(levelname)s] %(asctime)s %(name)s: %(message)s',
    '%Y-%m-%d %H:%M:%S'
)

# exit statuses
OK = 0
FAILURE = 1
CONFIG_ERROR = 2


def build_parser():
    parser = argparse.ArgumentParser(prog="bench", description='GOA / MSIGOA benchmark runner')
    parser.add_argument(
        '--log-level',
        '-l',
        help='The minimum log level to output',
        choices=LOG_LEVELS,
        default='INFO')
    subparsers = parser.add_subparsers(dest='cmd', help="Command")
    subparsers.required = True

    run_parser = subparsers.add_parser('run', help="Runs a campaign file")
    run_parser.add_argument('--config', '-c', dest='config', required=True, help="Campaign JSON file")
    run_parser.add_argument('--out', dest='output', default=None, help="Output directory")
    run_parser.add_argument('--seed', dest='seed', type=int, default=None)
    run_parser.add_argument('--iters', dest='iterations', type=int, default=None)
    run_parser.add_argument('--pop', dest='population', type=int, default=None)
    run_parser.add_argument('--runs', dest='runs', type=int, default=None)
    run_parser.add_argument('--workers', dest='workers', type=int, default=1, help="Worker processes")
    run_parser.add_argument('--no-timing', dest='timing', action='store_false',
                            help="Leave the wall_ms column out, making results.csv reproducible byte for byte")

    subparsers.add_parser('list', help="Lists the algorithm variants and the problem catalog")

    solve_parser = subparsers.add_parser('solve', help="Runs one algorithm once and prints the result as JSON")
    solve_parser.add_argument('--algo', dest='algorithm', required=True, help="Variant name, see 'list'")
    solve_parser.add_argument('--problem', dest='problem', required=True)
    solve_parser.add_argument('--dim', dest='dimension', type=int, default=None)
    solve_parser.add_argument('--seed', dest='seed', type=int, default=0)
    solve_parser.add_argument('--iters', dest='iterations', type=int, default=DEFAULT_MAX_ITERATIONS)
    solve_parser.add_argument('--pop', dest='population', type=int, default=DEFAULT_POPULATION_SIZE)
    solve_parser.add_argument('--trace', dest='trace', default=None, help="Writes the convergence trace CSV here")
    return parser


def setup_logging(log_level, logging_path=None):
    """Console logging, plus rotating file logs when ``logging_path`` is given."""
    root = logging.getLogger()
    formatter = logging.Formatter(*logging_format)

    if logging_path:
        # Rotating file logs (for looking into long campaigns)
        rotating_handler = RotatingFileHandler(
            logging_path,
            maxBytes=10000,
            backupCount=5)
        rotating_handler.setFormatter(formatter)
        root.addHandler(rotating_handler)

    # Live console logging
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    root.setLevel(log_level)


def run_command(args):
    overrides = dict(output=args.output, seed=args.seed, iterations=args.iterations,
                     population=args.population, runs=args.runs)
    if args.workers < 1:
        raise ConfigError("--workers must be at least 1, got {}".format(args.workers))
    campaign = parse_config(args.config, overrides)
    run_campaign(campaign, workers=args.workers, timing=args.timing)


def list_command(args):
    print("Algorithms (use_ibuf, use_apts, use_dprm):")
    for name, flags in VARIANTS.items():
        print("  {}: {}".format(name, ", ".join("on" if flag else "off" for flag in flags)))
    print("Problems:")
    for name in CATALOG:
        print("  " + describe(name))


def solve_command(args):
    try:
        strategy = StrategyConfig.from_name(args.algorithm)
    except InvalidArgumentError as e:
        raise UnknownNameError(str(e))
    if args.problem not in CATALOG:
        raise UnknownNameError("Unknown problem {}, expected one of {}".format(args.problem, ", ".join(CATALOG)))
    try:
        problem = get_problem(args.problem, args.dimension)
        config = RunConfig(population_size=args.population, max_iterations=args.iterations, runs=1,
                           seed=args.seed, strategy=strategy)
    except InvalidArgumentError as e:
        raise ConfigError(str(e))
    record, trace = run_variant(problem, config, algorithm=args.algorithm)
    if args.trace:
        write_trace(args.trace, trace)
    result = {"algorithm": record.algorithm, "problem": record.problem, "dim": record.dimension,
              "seed": record.seed, "best_fitness": record.best_fitness,
              "best_position": [float(v) for v in record.best_position],
              "evaluations": record.evaluations, "feasible": bool(problem.is_feasible(record.best_position))}
    print(json.dumps(result, sort_keys=True))


COMMANDS = {"run": run_command, "list": list_command, "solve": solve_command}


def exception_wrapper(callback):
    """
    Runs a command, turning what it throws into an exit status: 2 for
    configuration errors, 1 for everything else (Ctrl+C included).
    """
    status = OK
    try:
        callback()
    except KeyboardInterrupt:
        logger.info('Caught KeyboardInterrupt')
        status = FAILURE
    except ConfigError as e:
        logger.error('Configuration error: {}'.format(e))
        status = CONFIG_ERROR
    except Exception:
        logger.exception('A wild exception appears!')
        status = FAILURE
    return status


def execute(args):
    # type: (argparse.Namespace) -> int
    return exception_wrapper(lambda: COMMANDS[args.cmd](args))


def main(argv=None, logging_path=None):
    """Parses arguments, sets up logging, runs the command and returns its exit status."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level, logging_path)
    return execute(args)
