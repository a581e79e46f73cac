"""
Campaign files: which algorithms run on which problems, and how often.

    {
      "algorithms": [{"name": "msigoa"}, {"name": "goa"},
                     {"name": "msigoa-nd10", "variant": "msigoa", "params": {"nd_multiplier": 10}},
                     {"name": "custom", "use_ibuf": true, "use_dprm": true}],
      "problems": [{"name": "sphere", "dim": 10}, {"name": "spring"}],
      "population": 30, "iterations": 500, "runs": 51, "seed": 0,
      "baseline": "msigoa", "output": "results"
    }

An algorithm is a registered variant (``variant``, or its ``name`` if that is a
variant name) with its strategy flags optionally overridden, plus ``params``.
Values given on the command line override the file.
"""
from collections import namedtuple

from core.errors import OptimizationError, InvalidArgumentError
from core.records import RunConfig, DEFAULT_POPULATION_SIZE, DEFAULT_MAX_ITERATIONS, DEFAULT_RUNS
from helpers.config_parse import read_config
from helpers.logger import setup_logger
from msigoa.strategy import StrategyConfig, VARIANTS, PARAM_NAMES
from problems.catalog import CATALOG, DEFAULT_DIMENSION

logger = setup_logger(__name__, "warning")

TOP_LEVEL_KEYS = ("algorithms", "problems", "population", "iterations", "runs", "seed", "baseline", "output")
ALGORITHM_KEYS = ("name", "variant", "use_ibuf", "use_apts", "use_dprm", "params")
PROBLEM_KEYS = ("name", "dim")
FLAG_KEYS = ("use_ibuf", "use_apts", "use_dprm")
DEFAULT_OUTPUT = "results"


class ConfigError(OptimizationError, ValueError):
    pass


class UnknownNameError(ConfigError):
    pass


AlgorithmSpec = namedtuple("AlgorithmSpec", ["name", "strategy"])
ProblemSpec = namedtuple("ProblemSpec", ["name", "dimension"])


class Campaign(object):
    """
    A parsed campaign: named strategy configs, problems with their dimensions,
    the shared ``RunConfig`` (its ``seed`` is the base seed), the baseline
    algorithm of the comparisons and the output directory.
    """

    def __init__(self, algorithms, problems, run_config, baseline=None, output_dir=DEFAULT_OUTPUT):
        if not algorithms or not problems:
            raise ConfigError("A campaign needs at least one algorithm and one problem")
        self.algorithms = list(algorithms)
        self.problems = list(problems)
        self.run_config = run_config
        self.baseline = baseline if baseline is not None else self.algorithms[0].name
        self.output_dir = output_dir
        if self.baseline not in self.algorithm_names:
            raise UnknownNameError("Baseline {} is not one of the campaign algorithms: {}".format(self.baseline, ", ".join(self.algorithm_names)))

    @property
    def algorithm_names(self):
        return [algorithm.name for algorithm in self.algorithms]

    @property
    def task_count(self):
        return len(self.algorithms) * len(self.problems) * self.run_config.runs

    def to_dict(self):
        """The campaign with every default filled in, in campaign file form."""
        config = self.run_config
        algorithms = [dict(zip(FLAG_KEYS, algorithm.strategy.flags), name=algorithm.name, params=dict(algorithm.strategy.params))
                      for algorithm in self.algorithms]
        problems = [{"name": problem.name, "dim": problem.dimension} for problem in self.problems]
        return {"algorithms": algorithms, "problems": problems, "population": config.population_size,
                "iterations": config.max_iterations, "runs": config.runs, "seed": config.seed,
                "baseline": self.baseline, "output": self.output_dir}

    def __repr__(self):
        return "Campaign({} algorithms, {} problems, {} runs, seed {})".format(
            len(self.algorithms), len(self.problems), self.run_config.runs, self.run_config.seed)


def check_keys(data, allowed, where):
    if not isinstance(data, dict):
        raise ConfigError("{} must be a JSON object, got {}".format(where, type(data).__name__))
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ConfigError("Unknown key(s) {} in {}, expected some of {}".format(", ".join(unknown), where, ", ".join(allowed)))


def check_int(value, key, minimum, maximum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError("'{}' must be an integer, got {!r}".format(key, value))
    if value < minimum or (maximum is not None and value > maximum):
        raise ConfigError("'{}' must be within [{}, {}], got {}".format(key, minimum, "inf" if maximum is None else maximum, value))
    return value


def parse_algorithm(data, index):
    where = "algorithms[{}]".format(index)
    check_keys(data, ALGORITHM_KEYS, where)
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ConfigError("'{}.name' must be a non-empty string".format(where))
    variant = data.get("variant")
    if variant is None and name.lower() in VARIANTS:
        variant = name.lower()
    flags_given = [key for key in FLAG_KEYS if key in data]
    if variant is None and not flags_given:
        raise UnknownNameError("Algorithm {} is not a known variant ({}); give 'variant' or strategy flags".format(name, ", ".join(VARIANTS)))
    if variant is not None and str(variant).lower() not in VARIANTS:
        raise UnknownNameError("Unknown variant {} in {}, expected one of {}".format(variant, where, ", ".join(VARIANTS)))
    flags = dict(zip(FLAG_KEYS, VARIANTS[str(variant).lower()] if variant is not None else (False, False, False)))
    for key in flags_given:
        if not isinstance(data[key], bool):
            raise ConfigError("'{}.{}' must be true or false, got {!r}".format(where, key, data[key]))
        flags[key] = data[key]
    params = data.get("params", {})
    check_keys(params, PARAM_NAMES, where + ".params")
    try:
        strategy = StrategyConfig(**dict(flags, **params))
    except (InvalidArgumentError, TypeError, ValueError) as e:
        raise ConfigError("{} ({}): {}".format(where, name, e))
    return AlgorithmSpec(name, strategy)


def parse_problem(data, index):
    where = "problems[{}]".format(index)
    check_keys(data, PROBLEM_KEYS, where)
    name = data.get("name")
    if name not in CATALOG:
        raise UnknownNameError("Unknown problem {!r} in {}, expected one of {}".format(name, where, ", ".join(CATALOG)))
    fixed = CATALOG[name].fixed_dimension
    dimension = data.get("dim")
    if fixed is not None:
        if dimension is not None and dimension != fixed:
            raise ConfigError("'{}.dim': {} has a fixed dimension of {}, got {!r}".format(where, name, fixed, dimension))
        return ProblemSpec(name, fixed)
    if dimension is None:
        return ProblemSpec(name, DEFAULT_DIMENSION)
    return ProblemSpec(name, check_int(dimension, where + ".dim", 2))


def campaign_from_dict(data, overrides=None, source="campaign"):
    # type: (dict, dict, str) -> Campaign
    """
    Validates a campaign document. ``overrides`` holds command-line values
    (``population``, ``iterations``, ``runs``, ``seed``, ``output``); ``None``
    entries are ignored.
    """
    check_keys(data, TOP_LEVEL_KEYS, source)
    data = dict(data)
    for key, value in (overrides or {}).items():
        if key not in TOP_LEVEL_KEYS:
            raise ConfigError("Cannot override unknown key {}".format(key))
        if value is not None:
            logger.debug("{} overridden from the command line: {!r}".format(key, value))
            data[key] = value
    for key in ("algorithms", "problems"):
        if not isinstance(data.get(key), list) or not data[key]:
            raise ConfigError("'{}' must be a non-empty list in {}".format(key, source))
    algorithms = [parse_algorithm(item, i) for i, item in enumerate(data["algorithms"])]
    problems = [parse_problem(item, i) for i, item in enumerate(data["problems"])]
    names = [algorithm.name for algorithm in algorithms]
    duplicates = sorted(set(name for name in names if names.count(name) > 1))
    if duplicates:
        raise ConfigError("Duplicate algorithm name(s): {}".format(", ".join(duplicates)))
    if len(set(problems)) != len(problems):
        raise ConfigError("A problem is listed twice with the same dimension in {}".format(source))
    run_config = RunConfig(population_size=check_int(data.get("population", DEFAULT_POPULATION_SIZE), "population", 2),
                           max_iterations=check_int(data.get("iterations", DEFAULT_MAX_ITERATIONS), "iterations", 1),
                           runs=check_int(data.get("runs", DEFAULT_RUNS), "runs", 1),
                           seed=check_int(data.get("seed", 0), "seed", 0, 2 ** 64 - 1))
    baseline = data.get("baseline")
    if baseline is not None and not isinstance(baseline, str):
        raise ConfigError("'baseline' must be an algorithm name, got {!r}".format(baseline))
    output = data.get("output", DEFAULT_OUTPUT)
    if not isinstance(output, str) or not output:
        raise ConfigError("'output' must be a directory path, got {!r}".format(output))
    return Campaign(algorithms, problems, run_config, baseline=baseline, output_dir=output)


def parse_config(path, overrides=None):
    # type: (str, dict) -> Campaign
    """Reads and validates a campaign file, see ``campaign_from_dict``."""
    try:
        data = read_config(path)
    except ValueError as e:
        raise ConfigError("Malformed JSON in {}: {}".format(path, e))
    except (IOError, OSError) as e:
        raise ConfigError("Cannot read campaign file {}: {}".format(path, e))
    return campaign_from_dict(data, overrides, source=path)
