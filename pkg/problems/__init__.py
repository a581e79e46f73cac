from problems.classic import classic_suite, sphere_problem, rosenbrock_problem, rastrigin_problem, ackley_problem
from problems.classic import griewank_problem, schwefel226_problem, levy_problem, rot_rastrigin_problem, RotatedRastrigin
from problems.engineering import spring_problem, pressure_vessel_problem, welded_beam_problem, ENGINEERING_TOLERANCE
from problems.catalog import CATALOG, problem_names, get_problem, describe, DEFAULT_DIMENSION
