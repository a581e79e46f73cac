from core.errors import OptimizationError, InvalidArgumentError, InvalidStateError, EvaluationError
from core.rng import RngStream
from core.population import Bounds, Agent, Population
from core.problem import Problem, evaluate, evaluate_many, clamp
from core.records import RunConfig, RunRecord, ConvergenceTrace
