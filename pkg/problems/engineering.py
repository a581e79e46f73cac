"""
Constrained engineering design problems, in their standard literature forms.

Constraints are written dimensionless, as ``value / limit - 1 <= 0`` (or
``1 - value / limit``), so one feasibility tolerance fits all of them. The
best reported designs are rounded to 7-8 digits and sit on active
constraints, which is what ``ENGINEERING_TOLERANCE`` absorbs.
"""
import numpy as np

from core.population import Bounds
from core.problem import Problem

ENGINEERING_TOLERANCE = 1e-6


def spring_objective(x):
    """Wire volume ``(N + 2) * D * d^2`` of the coil, x = (d, D, N)."""
    return float((x[2] + 2.0) * x[1] * x[0] ** 2)


# shear-stress violation reported when the coil is no wider than its wire
SPRING_DEGENERATE_VIOLATION = 1e3


def spring_shear_constraint(x):
    """
    Shear stress limit. Its denominator ``d^3 * (D - d)`` vanishes at D == d
    and changes sign below it, so any D <= d counts as a fixed, finite
    violation.
    """
    if x[1] <= x[0]:
        return SPRING_DEGENERATE_VIOLATION
    return float((4.0 * x[1] ** 2 - x[0] * x[1]) / (12566.0 * (x[1] * x[0] ** 3 - x[0] ** 4))
                 + 1.0 / (5108.0 * x[0] ** 2) - 1.0)


def spring_constraints():
    return [
        # minimum deflection
        lambda x: 1.0 - x[1] ** 3 * x[2] / (71785.0 * x[0] ** 4),
        spring_shear_constraint,
        # surge frequency
        lambda x: 1.0 - 140.45 * x[0] / (x[1] ** 2 * x[2]),
        # outside diameter
        lambda x: (x[0] + x[1]) / 1.5 - 1.0,
    ]


def spring_problem():
    """
    Tension/compression spring: minimize the weight of a coil spring, x = (wire
    diameter d, mean coil diameter D, number of active coils N), subject to
    deflection, shear stress, surge frequency and outer diameter limits.

    The shear-stress constraint uses ``x2 * x1^3`` in the denominator and the
    trailing ``- 1``, as in the standard formulation.
    """
    return Problem("spring", Bounds([0.05, 0.25, 2.0], [2.0, 1.30, 15.0]), spring_objective,
                   constraints=spring_constraints(), feasibility_tolerance=ENGINEERING_TOLERANCE,
                   optimum_value=0.012665232788, optimum_position=[0.05168906, 0.35671774, 11.288965],
                   optimum_exact=False, description="tension/compression spring, D=3, 4 constraints")


def pressure_vessel_objective(x):
    """Material, forming and welding cost, x = (Ts, Th, R, L)."""
    return float(0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] ** 2
                 + 3.1661 * x[0] ** 2 * x[3] + 19.84 * x[0] ** 2 * x[2])


def pressure_vessel_constraints():
    return [
        # shell thickness: -Ts + 0.0193 R <= 0
        lambda x: 0.0193 * x[2] / x[0] - 1.0,
        # head thickness: -Th + 0.00954 R <= 0
        lambda x: 0.00954 * x[2] / x[1] - 1.0,
        # volume: -pi R^2 L - 4/3 pi R^3 + 1296000 <= 0
        lambda x: 1.0 - (np.pi * x[2] ** 2 * x[3] + 4.0 / 3.0 * np.pi * x[2] ** 3) / 1296000.0,
        # length: L - 240 <= 0
        lambda x: x[3] / 240.0 - 1.0,
    ]


def pressure_vessel_problem():
    """
    Cylindrical pressure vessel with hemispherical heads: minimize total cost,
    x = (shell thickness Ts, head thickness Th, inner radius R, length L).
    Thicknesses are continuous (no multiples of 0.0625). The shell and head
    thickness constraints carry their minus signs and the volume constraint
    requires at least 1296000 in^3, as in the standard formulation.
    """
    return Problem("pressure-vessel", Bounds([0.1, 0.1, 10.0, 10.0], [2.0, 2.0, 200.0, 200.0]),
                   pressure_vessel_objective, constraints=pressure_vessel_constraints(),
                   feasibility_tolerance=ENGINEERING_TOLERANCE, optimum_value=5885.332774,
                   optimum_position=[0.77816864, 0.38464916, 40.3196187, 200.0], optimum_exact=False,
                   description="pressure vessel, D=4, 4 constraints")


WELDED_BEAM_LOAD = 6000.0
WELDED_BEAM_LENGTH = 14.0
WELDED_BEAM_E = 30e6
WELDED_BEAM_G = 12e6
WELDED_BEAM_TAU_MAX = 13600.0
WELDED_BEAM_SIGMA_MAX = 30000.0
WELDED_BEAM_DELTA_MAX = 0.25


def welded_beam_objective(x):
    """Fabrication cost, x = (h, l, t, b)."""
    return float(1.10471 * x[0] ** 2 * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]))


def welded_beam_shear_stress(x):
    P, L = WELDED_BEAM_LOAD, WELDED_BEAM_LENGTH
    primary = P / (np.sqrt(2.0) * x[0] * x[1])
    moment = P * (L + x[1] / 2.0)
    radius = np.sqrt(x[1] ** 2 / 4.0 + ((x[0] + x[2]) / 2.0) ** 2)
    polar = 2.0 * np.sqrt(2.0) * x[0] * x[1] * (x[1] ** 2 / 4.0 + ((x[0] + x[2]) / 2.0) ** 2)
    secondary = moment * radius / polar
    return float(np.sqrt(primary ** 2 + 2.0 * primary * secondary * x[1] / (2.0 * radius) + secondary ** 2))


def welded_beam_bending_stress(x):
    return float(6.0 * WELDED_BEAM_LOAD * WELDED_BEAM_LENGTH / (x[3] * x[2] ** 2))


def welded_beam_deflection(x):
    return float(4.0 * WELDED_BEAM_LOAD * WELDED_BEAM_LENGTH ** 3 / (WELDED_BEAM_E * x[2] ** 3 * x[3]))


def welded_beam_buckling_load(x):
    E, G, L = WELDED_BEAM_E, WELDED_BEAM_G, WELDED_BEAM_LENGTH
    return float(4.013 * E * np.sqrt(x[2] ** 2 * x[3] ** 6 / 36.0) / L ** 2
                 * (1.0 - x[2] / (2.0 * L) * np.sqrt(E / (4.0 * G))))


def welded_beam_constraints():
    return [
        # x1 <= x4 comes first
        lambda x: x[0] / x[3] - 1.0,
        lambda x: welded_beam_shear_stress(x) / WELDED_BEAM_TAU_MAX - 1.0,
        lambda x: welded_beam_bending_stress(x) / WELDED_BEAM_SIGMA_MAX - 1.0,
        # cost of the weld and bar material: <= 5
        lambda x: (0.10471 * x[0] ** 2 + 0.04811 * x[2] * x[3] * (14.0 + x[1])) / 5.0 - 1.0,
        lambda x: 0.125 / x[0] - 1.0,
        lambda x: welded_beam_deflection(x) / WELDED_BEAM_DELTA_MAX - 1.0,
        lambda x: 1.0 - welded_beam_buckling_load(x) / WELDED_BEAM_LOAD,
    ]


def welded_beam_problem():
    """
    Welded beam: minimize the fabrication cost of a beam welded to a support,
    x = (weld thickness h, weld length l, bar height t, bar thickness b),
    under a 6000 lb tip load at L = 14 in (E = 30e6 psi, G = 12e6 psi).
    Limits: shear stress 13600 psi, bending stress 30000 psi, deflection
    0.25 in, buckling load above the tip load, h <= b, h >= 0.125.

    The polar moment of the weld is ``2*sqrt(2)*h*l*(l^2/4 + ((h+t)/2)^2)``;
    the best known design under it costs about 1.695247.
    """
    return Problem("welded-beam", Bounds([0.1, 0.1, 0.1, 0.1], [2.0, 10.0, 10.0, 2.0]), welded_beam_objective,
                   constraints=welded_beam_constraints(), feasibility_tolerance=ENGINEERING_TOLERANCE,
                   optimum_value=1.6952471, optimum_position=[0.2057296, 3.2531208, 9.0366239, 0.2057296],
                   optimum_exact=False, description="welded beam, D=4, 7 constraints")


ENGINEERING_CONSTRUCTORS = [
    ("spring", spring_problem),
    ("pressure-vessel", pressure_vessel_problem),
    ("welded-beam", welded_beam_problem),
]
