import numpy as np

from core.errors import InvalidArgumentError, EvaluationError
from core.population import Bounds

DEFAULT_PENALTY_COEFFICIENT = 1e10


class Problem(object):
    """
    A box-bounded minimization problem, optionally with inequality constraints
    ``g_k(x) <= 0``, turned into a box-constrained one with a static quadratic
    penalty:

        penalized(x) = objective(x) + penalty_coefficient * sum_k max(0, g_k(x) - tol)^2

    where ``tol`` is ``feasibility_tolerance`` (0 unless a problem states its
    constraints in normalized form and needs to absorb rounding). A feasible
    ``x`` is therefore evaluated to ``objective(x)`` exactly.

    Args:

        * ``name``: catalog name, used in error messages and result files
        * ``bounds``: ``Bounds`` of the search box
        * ``objective``: callable mapping a position vector to a real number
        * ``constraints``: list of callables ``g_k(x)``, feasible when ``<= 0``
        * ``penalty_coefficient``: weight of the squared violations
        * ``feasibility_tolerance``: violations up to this value are not penalized
        * ``optimum_value``, ``optimum_position``: known (or best known) optimum, ``None`` if unknown
        * ``optimum_exact``: False when the optimum is only the best reported one
    """

    def __init__(self, name, bounds, objective, constraints=None,
                 penalty_coefficient=DEFAULT_PENALTY_COEFFICIENT, feasibility_tolerance=0.0,
                 optimum_value=None, optimum_position=None, optimum_exact=True, description=""):
        if not isinstance(bounds, Bounds):
            raise InvalidArgumentError("Problem {} expects a Bounds object, got {}".format(name, type(bounds)))
        if penalty_coefficient < 0 or feasibility_tolerance < 0:
            raise InvalidArgumentError("Problem {}: penalty coefficient and tolerance must be non-negative".format(name))
        self.name = name
        self.bounds = bounds
        self.objective = objective
        self.constraints = list(constraints or [])
        self.penalty_coefficient = float(penalty_coefficient)
        self.feasibility_tolerance = float(feasibility_tolerance)
        self.optimum_value = optimum_value
        self.optimum_position = None if optimum_position is None else np.array(optimum_position, dtype=float)
        self.optimum_exact = optimum_exact
        self.description = description

    @property
    def dimension(self):
        return self.bounds.dimension

    @property
    def constrained(self):
        return bool(self.constraints)

    def constraint_values(self, position):
        return np.array([g(position) for g in self.constraints], dtype=float)

    def violations(self, position):
        """Per-constraint violations beyond the feasibility tolerance (zeros when feasible)."""
        if not self.constraints:
            return np.zeros(0)
        return np.maximum(0.0, self.constraint_values(position) - self.feasibility_tolerance)

    def penalty(self, position):
        if not self.constraints:
            return 0.0
        return self.penalty_coefficient * float(np.sum(self.violations(position) ** 2))

    def is_feasible(self, position):
        return not np.any(self.violations(position) > 0)

    def __repr__(self):
        return "Problem({}, D={}, constraints={})".format(self.name, self.dimension, len(self.constraints))


def evaluate(problem, position):
    # type: (Problem, np.ndarray) -> float
    """
    Penalized objective value of ``position``. Raises ``InvalidArgumentError``
    on a dimension mismatch and ``EvaluationError`` if the value is not finite.
    """
    position = np.asarray(position, dtype=float)
    if position.shape != (problem.dimension,):
        raise InvalidArgumentError("Problem {} expects a vector of length {}, got shape {}".format(problem.name, problem.dimension, position.shape))
    value = float(problem.objective(position))
    if not np.isfinite(value):
        raise EvaluationError(problem.name, "objective returned {} at {}".format(value, position.tolist()))
    if problem.constraints:
        penalty = problem.penalty(position)
        if not np.isfinite(penalty):
            raise EvaluationError(problem.name, "constraint penalty is {} at {}".format(penalty, position.tolist()))
        # adding an exact 0.0 keeps feasible values bit-identical to the objective
        value = value + penalty
    return value


def evaluate_many(problem, positions):
    """Evaluates every row of a block of positions."""
    return np.array([evaluate(problem, row) for row in np.atleast_2d(positions)], dtype=float)


def clamp(position, bounds):
    # type: (np.ndarray, Bounds) -> np.ndarray
    """Coordinate-wise projection into the box. Works on a vector or on a block of rows."""
    position = np.asarray(position, dtype=float)
    if position.shape[-1] != bounds.dimension:
        raise InvalidArgumentError("Cannot clamp a vector of length {} into {} dimensions".format(position.shape[-1], bounds.dimension))
    return np.clip(position, bounds.lower, bounds.upper)
