from core.errors import InvalidArgumentError

CF_VARIANTS = ("paper", "mpa")
APTS_BROWNIAN_EXPONENTS = ("t_over_T", "one_over_T")


def check_iteration(t, T):
    if int(T) < 1 or not 1 <= int(t) <= int(T):
        raise InvalidArgumentError("Iteration must be within 1..T, got t={}, T={}".format(t, T))


def cf_factor(t, T, variant="paper"):
    # type: (int, int, str) -> float
    """
    Step-control factor. ``paper``: (t/T)^(2t/T), growing from ~0 to 1;
    ``mpa``: (1 - t/T)^(2t/T), decaying to 0.

    >>> cf_factor(250, 500)
    0.5
    >>> cf_factor(500, 500, "mpa")
    0.0
    """
    check_iteration(t, T)
    ratio = float(t) / T
    if variant == "paper":
        return ratio ** (2.0 * ratio)
    elif variant == "mpa":
        return (1.0 - ratio) ** (2.0 * ratio)
    raise InvalidArgumentError("Unknown CF variant {}, expected one of {}".format(variant, CF_VARIANTS))


def apts_brownian_factor(t, T, exponent="t_over_T"):
    """(1 - t/T)^(t/T), or (1 - t/T)^(1/T) for the ``one_over_T`` reading. 0 at t = T."""
    check_iteration(t, T)
    ratio = float(t) / T
    if exponent == "t_over_T":
        return (1.0 - ratio) ** ratio
    elif exponent == "one_over_T":
        return (1.0 - ratio) ** (1.0 / T)
    raise InvalidArgumentError("Unknown APTS exponent {}, expected one of {}".format(exponent, APTS_BROWNIAN_EXPONENTS))


def apts_levy_factor(t, T):
    check_iteration(t, T)
    return 1.0 - float(t) / T


def apts_scale_brownian(rb, t, T, exponent="t_over_T"):
    return rb * apts_brownian_factor(t, T, exponent)


def apts_scale_levy(rl, t, T):
    return rl * apts_levy_factor(t, T)
