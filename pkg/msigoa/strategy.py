from collections import OrderedDict

from core.errors import InvalidArgumentError
from goa.params import GoaParams
from stochastics import LevyParams, CF_VARIANTS, APTS_BROWNIAN_EXPONENTS

DPRM_SCOPES = ("all", "non_improved")

# name -> (use_ibuf, use_apts, use_dprm)
VARIANTS = OrderedDict([
    ("goa", (False, False, False)),
    ("goa-1", (True, False, False)),
    ("goa-2", (False, True, False)),
    ("goa-3", (False, False, True)),
    ("goa-12", (True, True, False)),
    ("goa-13", (True, False, True)),
    ("goa-23", (False, True, True)),
    ("msigoa", (True, True, True)),
])

# params accepted by from_name and by campaign files
PARAM_NAMES = ("s", "psr", "nd_multiplier", "cf_variant", "apts_brownian_exponent", "dprm_scope",
               "exploit_probability", "levy_alpha", "levy_scale")


class StrategyConfig(object):
    """
    Which of the three strategies are on, plus the numeric parameters of the
    run. The eight on/off combinations are registered in ``VARIANTS``;
    ``StrategyConfig.from_name("goa-13")`` builds one of them.

    Args:

        * ``use_ibuf``: iteration-based three-phase update schedule
        * ``use_apts``: adaptive scaling of the Brownian and Levy motion vectors
        * ``use_dprm``: dominant-population restart after the escape rule
        * ``nd_multiplier``: dominant archive holds ``nd_multiplier * D`` positions
        * ``dprm_scope``: ``all`` agents, or only those whose fitness did not improve in the iteration
        * the rest are passed on to ``GoaParams``
    """

    def __init__(self, use_ibuf=False, use_apts=False, use_dprm=False, nd_multiplier=25, cf_variant="paper",
                 apts_brownian_exponent="t_over_T", dprm_scope="all", s=0.88, psr=0.34,
                 exploit_probability=0.5, levy_alpha=1.5, levy_scale=0.05):
        if isinstance(nd_multiplier, bool) or int(nd_multiplier) != nd_multiplier or nd_multiplier < 1:
            raise InvalidArgumentError("nd_multiplier must be a positive integer, got {}".format(nd_multiplier))
        if dprm_scope not in DPRM_SCOPES:
            raise InvalidArgumentError("Unknown DPRM scope {}, expected one of {}".format(dprm_scope, DPRM_SCOPES))
        if cf_variant not in CF_VARIANTS:
            raise InvalidArgumentError("Unknown CF variant {}, expected one of {}".format(cf_variant, CF_VARIANTS))
        if apts_brownian_exponent not in APTS_BROWNIAN_EXPONENTS:
            raise InvalidArgumentError("Unknown APTS exponent {}, expected one of {}".format(apts_brownian_exponent, APTS_BROWNIAN_EXPONENTS))
        self.use_ibuf = bool(use_ibuf)
        self.use_apts = bool(use_apts)
        self.use_dprm = bool(use_dprm)
        self.nd_multiplier = int(nd_multiplier)
        self.cf_variant = cf_variant
        self.apts_brownian_exponent = apts_brownian_exponent
        self.dprm_scope = dprm_scope
        self.s = float(s)
        self.psr = float(psr)
        self.exploit_probability = float(exploit_probability)
        self.levy_alpha = float(levy_alpha)
        self.levy_scale = float(levy_scale)
        # fail early on bad numeric parameters
        self.goa_params()

    @classmethod
    def from_name(cls, name, **params):
        # type: (str, ...) -> StrategyConfig
        """
        >>> StrategyConfig.from_name("goa-13").flags
        (True, False, True)
        """
        key = str(name).lower()
        if key not in VARIANTS:
            raise InvalidArgumentError("Unknown variant {}, expected one of {}".format(name, ", ".join(VARIANTS)))
        unknown = sorted(set(params) - set(PARAM_NAMES))
        if unknown:
            raise InvalidArgumentError("Unknown strategy parameter(s) {}, expected some of {}".format(", ".join(unknown), ", ".join(PARAM_NAMES)))
        use_ibuf, use_apts, use_dprm = VARIANTS[key]
        return cls(use_ibuf=use_ibuf, use_apts=use_apts, use_dprm=use_dprm, **params)

    @property
    def flags(self):
        return (self.use_ibuf, self.use_apts, self.use_dprm)

    @property
    def name(self):
        """Registry name of the flag combination."""
        for name, flags in VARIANTS.items():
            if flags == self.flags:
                return name

    @property
    def params(self):
        return OrderedDict((name, getattr(self, name)) for name in PARAM_NAMES)

    def goa_params(self):
        return GoaParams(s=self.s, psr=self.psr, cf_variant=self.cf_variant,
                         levy=LevyParams(self.levy_alpha, self.levy_scale),
                         exploit_probability=self.exploit_probability, apts=self.use_apts,
                         apts_brownian_exponent=self.apts_brownian_exponent)

    def archive_capacity(self, dimension):
        return self.nd_multiplier * int(dimension)

    def __eq__(self, other):
        return isinstance(other, StrategyConfig) and (self.flags, self.params) == (other.flags, other.params)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "StrategyConfig({}, {})".format(self.name, ", ".join("{}={}".format(k, v) for k, v in self.params.items()))
