import numpy as np

from goa.rules import exploit_step, explore_levy_step, explore_brownian_step, converge_step
from goa.runner import apply_moves, split
from stochastics.schedules import check_iteration

EARLY = "early"
MIDDLE = "middle"
LATE = "late"


def ibuf_phase(t, T):
    # type: (int, int) -> str
    """
    Stage of the run: ``early`` for t < T/3, ``middle`` for T/3 <= t < 2T/3,
    ``late`` for t >= 2T/3. Boundary iterations go to the later stage.

    >>> [ibuf_phase(t, 300) for t in (1, 99, 100, 199, 200, 300)]
    ['early', 'early', 'middle', 'middle', 'late', 'late']
    """
    check_iteration(t, T)
    if 3 * t < T:
        return EARLY
    if 3 * t < 2 * T:
        return MIDDLE
    return LATE


def ibuf_update(population, problem, rng, params, t, T):
    """
    Update sweep scheduled by iteration instead of by a coin:

     * early: every agent grazes (Brownian exploitation)
     * middle: first half Levy flight, second half Brownian flight
     * late: first half Levy flight, second half converges on the elite

    Candidates are clamped, evaluated and accepted greedily. Returns the stage.
    """
    phase = ibuf_phase(t, T)
    elite = population.elite.position.copy()
    positions = population.positions
    if phase == EARLY:
        candidates = exploit_step(positions, elite, rng, params, t, T)
    else:
        half = split(population.size)
        second = explore_brownian_step if phase == MIDDLE else converge_step
        candidates = np.vstack([explore_levy_step(positions[:half], elite, rng, params, t, T),
                                second(positions[half:], elite, rng, params, t, T)])
    apply_moves(population, problem, candidates)
    return phase
