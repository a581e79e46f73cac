"""
Classic analytic test functions. Every constructor takes the dimension and
returns a ``Problem`` on the function's conventional box, with its known
global minimum.
"""
import numpy as np

from core.errors import InvalidArgumentError
from core.population import Bounds
from core.problem import Problem

# seeds the rotation and the shift of rot-rastrigin, one stream per dimension
ROTATION_SEED = 20240607

SCHWEFEL_CONSTANT = 418.9828872724338
SCHWEFEL_OPTIMUM = 420.968746359982


def check_dimension(d):
    if int(d) < 2:
        raise InvalidArgumentError("Classic functions need d >= 2, got {}".format(d))
    return int(d)


def sphere(x):
    return float(np.sum(x ** 2))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rastrigin(x):
    return float(10.0 * x.size + np.sum(x ** 2 - 10.0 * np.cos(2.0 * np.pi * x)))


def ackley(x):
    d = x.size
    return float(-20.0 * np.exp(-0.2 * np.sqrt(np.sum(x ** 2) / d))
                 - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / d) + 20.0 + np.e)


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(1.0 + np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))))


def schwefel226(x):
    return float(SCHWEFEL_CONSTANT * x.size - np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def levy(x):
    w = 1.0 + (x - 1.0) / 4.0
    head = np.sin(np.pi * w[0]) ** 2
    body = np.sum((w[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * w[:-1] + 1.0) ** 2))
    tail = (w[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * w[-1]) ** 2)
    return float(head + body + tail)


def _classic(name, objective, d, low, high, optimum_position, description):
    return Problem(name, Bounds.uniform(low, high, d), objective, optimum_value=0.0,
                   optimum_position=optimum_position, description=description)


def sphere_problem(d):
    d = check_dimension(d)
    return _classic("sphere", sphere, d, -100.0, 100.0, np.zeros(d), "unimodal, separable")


def rosenbrock_problem(d):
    d = check_dimension(d)
    return _classic("rosenbrock", rosenbrock, d, -30.0, 30.0, np.ones(d), "unimodal, curved valley")


def rastrigin_problem(d):
    d = check_dimension(d)
    return _classic("rastrigin", rastrigin, d, -5.12, 5.12, np.zeros(d), "multimodal, separable")


def ackley_problem(d):
    d = check_dimension(d)
    return _classic("ackley", ackley, d, -32.768, 32.768, np.zeros(d), "multimodal, nearly flat outer region")


def griewank_problem(d):
    d = check_dimension(d)
    return _classic("griewank", griewank, d, -600.0, 600.0, np.zeros(d), "multimodal, non-separable")


def schwefel226_problem(d):
    d = check_dimension(d)
    return _classic("schwefel226", schwefel226, d, -500.0, 500.0, np.full(d, SCHWEFEL_OPTIMUM),
                    "multimodal, deceptive, optimum near the box corner")


def levy_problem(d):
    d = check_dimension(d)
    return _classic("levy", levy, d, -10.0, 10.0, np.ones(d), "multimodal")


class RotatedRastrigin(object):
    """
    Shifted and rotated Rastrigin on [-100, 100]^d:
    ``rastrigin(R @ ((x - o) * 5.12 / 100))``. The rotation ``R`` (Haar
    distributed, from a QR decomposition) and the shift ``o`` in [-80, 80]^d
    are drawn from a stream seeded with ``ROTATION_SEED`` and ``d``, so each
    dimension has one fixed instance.
    """

    def __init__(self, d, seed=ROTATION_SEED):
        self.dimension = check_dimension(d)
        generator = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(self.dimension,))))
        q, r = np.linalg.qr(generator.standard_normal((self.dimension, self.dimension)))
        self.rotation = q * np.sign(np.diag(r))
        self.shift = generator.uniform(-80.0, 80.0, self.dimension)

    def __call__(self, x):
        return rastrigin(self.rotation @ ((x - self.shift) * (5.12 / 100.0)))


def rot_rastrigin_problem(d):
    function = RotatedRastrigin(d)
    return _classic("rot-rastrigin", function, function.dimension, -100.0, 100.0, function.shift.copy(),
                    "multimodal, non-separable (seeded rotation and shift)")


CLASSIC_CONSTRUCTORS = [
    ("sphere", sphere_problem),
    ("rosenbrock", rosenbrock_problem),
    ("rastrigin", rastrigin_problem),
    ("ackley", ackley_problem),
    ("griewank", griewank_problem),
    ("schwefel226", schwefel226_problem),
    ("levy", levy_problem),
    ("rot-rastrigin", rot_rastrigin_problem),
]


def classic_suite(d):
    # type: (int) -> list
    """All classic functions in dimension ``d``."""
    d = check_dimension(d)
    return [constructor(d) for _, constructor in CLASSIC_CONSTRUCTORS]
