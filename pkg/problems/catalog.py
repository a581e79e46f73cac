from collections import OrderedDict, namedtuple

from core.errors import InvalidArgumentError
from problems.classic import CLASSIC_CONSTRUCTORS
from problems.engineering import ENGINEERING_CONSTRUCTORS

DEFAULT_DIMENSION = 10

# fixed_dimension is None for problems defined in any dimension >= 2
CatalogEntry = namedtuple("CatalogEntry", ["name", "constructor", "fixed_dimension", "kind"])


def build_catalog():
    catalog = OrderedDict()
    for name, constructor in CLASSIC_CONSTRUCTORS:
        catalog[name] = CatalogEntry(name, constructor, None, "classic")
    for name, constructor in ENGINEERING_CONSTRUCTORS:
        catalog[name] = CatalogEntry(name, constructor, constructor().dimension, "engineering")
    return catalog


CATALOG = build_catalog()


def problem_names():
    return list(CATALOG.keys())


def get_entry(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise InvalidArgumentError("Unknown problem {}, expected one of {}".format(name, ", ".join(CATALOG)))


def get_problem(name, dimension=None):
    # type: (str, int) -> Problem
    """
    Builds a catalog problem by name. Classic functions take ``dimension``
    (default 10); engineering problems have a fixed dimension and reject any
    other.
    """
    entry = get_entry(name)
    if entry.fixed_dimension is not None:
        if dimension is not None and int(dimension) != entry.fixed_dimension:
            raise InvalidArgumentError("Problem {} has a fixed dimension of {}, got {}".format(name, entry.fixed_dimension, dimension))
        return entry.constructor()
    return entry.constructor(DEFAULT_DIMENSION if dimension is None else dimension)


def describe(name):
    """One-line summary for listings: dimension rule, known optimum, description."""
    entry = get_entry(name)
    problem = get_problem(name, entry.fixed_dimension)
    dimension = "D={}".format(entry.fixed_dimension) if entry.fixed_dimension else "any D>=2"
    optimum = "unknown"
    if problem.optimum_value is not None:
        optimum = "{!r}{}".format(problem.optimum_value, "" if problem.optimum_exact else " (best known)")
    return "{}: {} [{}], optimum {}; {}".format(name, entry.kind, dimension, optimum, problem.description)
