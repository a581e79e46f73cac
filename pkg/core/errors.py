class OptimizationError(Exception):
    pass


class InvalidArgumentError(OptimizationError, ValueError):
    pass


class InvalidStateError(OptimizationError, RuntimeError):
    pass


class EvaluationError(OptimizationError):
    def __init__(self, problem_name, message=""):
        self.problem_name = problem_name
        self.message = message
        OptimizationError.__init__(self, "Problem {}: {}".format(problem_name, message))
