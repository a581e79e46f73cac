"""
Runs a campaign: every algorithm on every problem, ``runs`` times, each run
with its own derived seed, then writes the result tables into the output
directory:

 * ``results.csv`` - one row per run
 * ``summary.csv`` - mean, std, best, median and worst per algorithm and problem
 * ``traces/<algorithm>_<problem>_<run>.csv`` - best-so-far after each iteration
 * ``stats.csv`` - Wilcoxon rank-sum verdicts against the baseline, win/tie/loss
   counts with the share of problems where the baseline is not worse and, with
   at least two problems, Friedman average ranks and p-value
 * ``ranks.csv`` - average rank and first/second/third/worse places per algorithm
 * ``campaign.json`` - the campaign as run, defaults and overrides filled in
"""
import os
import tempfile
import time
import zlib
from collections import namedtuple, OrderedDict

import numpy as np

from bench.config import ConfigError, UnknownNameError, Campaign
from bench.output import RESULTS_HEADER, SUMMARY_HEADER, STATS_HEADER, RANKS_HEADER, RANK_PLACES
from bench.output import write_csv, write_trace, format_position
from core.records import RunConfig
from msigoa import run_variant
from problems import get_problem
from stats import SampleSet, summarize, wilcoxon_rank_sum, friedman, win_tie_loss, not_worse_ratio
from stats import rank_table, rank_distribution
from helpers import ParallelRunner, write_config
from helpers.logger import setup_logger

logger = setup_logger(__name__, "info")

RESULTS_FILE = "results.csv"
SUMMARY_FILE = "summary.csv"
STATS_FILE = "stats.csv"
RANKS_FILE = "ranks.csv"
CAMPAIGN_FILE = "campaign.json"
TRACES_DIR = "traces"

RunTask = namedtuple("RunTask", ["algorithm", "strategy", "problem", "dimension", "run_index", "seed",
                                 "population_size", "max_iterations"])
RunOutcome = namedtuple("RunOutcome", ["task", "record", "trace", "wall_ms"])
CampaignResult = namedtuple("CampaignResult", ["outcomes", "summary_rows", "stats_rows", "output_dir"])


def name_key(name):
    return zlib.crc32(name.encode("utf-8")) & 0xffffffff


def derive_seed(base_seed, algorithm, problem, dimension, run_index):
    # type: (int, str, str, int, int) -> int
    """
    Seed of one run, mixed from the base seed and the run's identity (names,
    not list positions), so reordering a campaign does not change any run.
    """
    sequence = np.random.SeedSequence(int(base_seed), spawn_key=(name_key(algorithm), name_key(problem),
                                                                 int(dimension), int(run_index)))
    return int(sequence.generate_state(1, np.uint64)[0])


def build_tasks(campaign):
    config = campaign.run_config
    tasks = []
    for algorithm in campaign.algorithms:
        for problem in campaign.problems:
            for run_index in range(config.runs):
                seed = derive_seed(config.seed, algorithm.name, problem.name, problem.dimension, run_index)
                tasks.append(RunTask(algorithm.name, algorithm.strategy, problem.name, problem.dimension,
                                     run_index, seed, config.population_size, config.max_iterations))
    return tasks


def execute_task(task):
    # type: (RunTask) -> RunOutcome
    """Runs a single task. Lives at module level so that worker processes can unpickle it."""
    problem = get_problem(task.problem, task.dimension)
    config_kwargs = dict(population_size=task.population_size, max_iterations=task.max_iterations,
                         runs=1, seed=task.seed, strategy=task.strategy)
    started = time.perf_counter()
    record, trace = run_variant(problem, RunConfig(**config_kwargs), algorithm=task.algorithm)
    wall_ms = (time.perf_counter() - started) * 1000.0
    return RunOutcome(task, record, trace, wall_ms)


def check_output_dir(path):
    """Creates the output directory and makes sure files can be written into it."""
    try:
        if not os.path.isdir(path):
            os.makedirs(path)
        with tempfile.TemporaryFile(dir=path):
            pass
    except (IOError, OSError) as e:
        raise IOError("Output directory {} is not writable: {}".format(path, e))


def trace_labels(campaign):
    """
    File-name label of every (problem, dimension): the bare problem name, or
    ``name-D<dim>`` when the campaign has that problem in several dimensions.
    """
    counts = {}
    for problem in campaign.problems:
        counts[problem.name] = counts.get(problem.name, 0) + 1
    return dict(((p.name, p.dimension), p.name if counts[p.name] == 1 else "{}-D{}".format(p.name, p.dimension))
                for p in campaign.problems)


def group_samples(campaign, outcomes):
    """Final best values keyed by (algorithm, problem, dimension), in campaign order."""
    samples = OrderedDict(((a.name, p.name, p.dimension), []) for a in campaign.algorithms for p in campaign.problems)
    for outcome in outcomes:
        task = outcome.task
        samples[(task.algorithm, task.problem, task.dimension)].append(outcome.record.best_fitness)
    return OrderedDict((key, SampleSet(values, key[0], key[1])) for key, values in samples.items())


def result_rows(outcomes, timing=True):
    rows = []
    for outcome in outcomes:
        task, record = outcome.task, outcome.record
        row = [task.algorithm, task.problem, task.dimension, task.run_index, task.seed,
               record.best_fitness, format_position(record.best_position), record.evaluations]
        if timing:
            row.append(outcome.wall_ms)
        rows.append(row)
    return rows


def summary_rows(samples):
    rows = []
    for (algorithm, problem, dimension), sample in samples.items():
        summary = summarize(sample)
        rows.append([algorithm, problem, dimension, summary.runs, summary.mean, summary.std,
                     summary.best, summary.median, summary.worst])
    return rows


def mean_table(campaign, samples):
    """Mean final best as a problems x algorithms matrix, in campaign order."""
    return np.array([[summarize(samples[(a, p.name, p.dimension)]).mean for a in campaign.algorithm_names]
                     for p in campaign.problems])


def stats_rows(campaign, samples):
    """Comparison rows, see the module docstring."""
    baseline = campaign.baseline
    rows = []
    for algorithm in campaign.algorithm_names:
        if algorithm == baseline:
            continue
        verdicts = []
        for problem in campaign.problems:
            result = wilcoxon_rank_sum(samples[(baseline, problem.name, problem.dimension)],
                                       samples[(algorithm, problem.name, problem.dimension)])
            verdicts.append(result)
            rows.append(["wilcoxon", baseline, algorithm, problem.name, problem.dimension, result.statistic,
                         result.p_value, result.symbol, None, None, None, None, None])
        counts = win_tie_loss("{} vs {}".format(baseline, algorithm), verdicts)
        rows.append(["win_tie_loss", baseline, algorithm, None, None, None, None, None, None,
                     counts.wins, counts.ties, counts.losses, not_worse_ratio(counts)])
    if len(campaign.problems) >= 2 and len(campaign.algorithms) >= 2:
        result = friedman(mean_table(campaign, samples))
        for algorithm, avg_rank in zip(campaign.algorithm_names, result.avg_ranks):
            rows.append(["friedman_rank", baseline, algorithm, None, None, None, None, None, float(avg_rank),
                         None, None, None, None])
        rows.append(["friedman", baseline, None, None, None, result.statistic, result.p_value, None, None,
                     None, None, None, None])
    else:
        logger.info("Skipping the Friedman test, it needs at least 2 problems and 2 algorithms")
    return rows


def rank_rows(campaign, samples):
    """
    Per algorithm: average rank over the problems and how many times it
    placed first, second, third or worse (mean final best, ties share the
    better place).
    """
    ranks = rank_table(mean_table(campaign, samples))
    places = rank_distribution(ranks, places=RANK_PLACES)
    return [[algorithm, float(avg_rank)] + [int(count) for count in counts]
            for algorithm, avg_rank, counts in zip(campaign.algorithm_names, ranks.mean(axis=0), places)]


def run_campaign(campaign, workers=1, timing=True):
    # type: (Campaign, int, bool) -> CampaignResult
    """
    Runs all tasks of ``campaign`` on ``workers`` processes and writes the
    result files. Apart from the ``wall_ms`` column (left out with
    ``timing=False``) the files only depend on the campaign, never on the
    number of workers or the order the tasks finish in.
    """
    if not isinstance(campaign, Campaign):
        raise ConfigError("run_campaign expects a Campaign, got {}".format(type(campaign)))
    output_dir = campaign.output_dir
    check_output_dir(output_dir)
    write_config(campaign.to_dict(), os.path.join(output_dir, CAMPAIGN_FILE))
    tasks = build_tasks(campaign)
    logger.info("Running {!r}: {} tasks on {} worker(s), output in {}".format(campaign, len(tasks), workers, output_dir))

    def on_result(index, task, outcome):
        logger.info("[{}/{}] {} on {} (D={}) run {}: {!r}".format(index + 1, len(tasks), task.algorithm, task.problem,
                                                                 task.dimension, task.run_index, outcome.record.best_fitness))

    outcomes = ParallelRunner(execute_task, workers=workers, on_result=on_result).run(tasks)

    header = RESULTS_HEADER if timing else RESULTS_HEADER[:-1]
    write_csv(os.path.join(output_dir, RESULTS_FILE), header, result_rows(outcomes, timing))
    labels = trace_labels(campaign)
    for outcome in outcomes:
        task = outcome.task
        name = "{}_{}_{}.csv".format(task.algorithm, labels[(task.problem, task.dimension)], task.run_index)
        write_trace(os.path.join(output_dir, TRACES_DIR, name), outcome.trace)
    samples = group_samples(campaign, outcomes)
    summary = summary_rows(samples)
    write_csv(os.path.join(output_dir, SUMMARY_FILE), SUMMARY_HEADER, summary)
    stats = stats_rows(campaign, samples)
    write_csv(os.path.join(output_dir, STATS_FILE), STATS_HEADER, stats)
    write_csv(os.path.join(output_dir, RANKS_FILE), RANKS_HEADER, rank_rows(campaign, samples))
    logger.info("Campaign finished, {} runs written to {}".format(len(outcomes), output_dir))
    return CampaignResult(outcomes, summary, stats, output_dir)
