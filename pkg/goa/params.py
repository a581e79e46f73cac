from core.errors import InvalidArgumentError
from stochastics import LevyParams, CF_VARIANTS, APTS_BROWNIAN_EXPONENTS


class GoaParams(object):
    """
    Numeric parameters of the gazelle update rules.

    Args:

        * ``s``: grazing speed (0.88)
        * ``psr``: predator success rate, probability of the uniform-jump escape (0.34)
        * ``cf_variant``: ``paper`` for (t/T)^(2t/T), ``mpa`` for (1-t/T)^(2t/T)
        * ``levy``: ``LevyParams`` of the Levy steps
        * ``exploit_probability``: chance that an iteration exploits instead of exploring
        * ``mask_threshold``: escape mask entry is 0 where its uniform draw is below this
        * ``apts``: scale motion vectors with the adaptive factors
        * ``apts_brownian_exponent``: ``t_over_T`` or ``one_over_T``
    """

    def __init__(self, s=0.88, psr=0.34, cf_variant="paper", levy=None, exploit_probability=0.5,
                 mask_threshold=0.34, apts=False, apts_brownian_exponent="t_over_T"):
        if not float(s) > 0:
            raise InvalidArgumentError("Grazing speed s must be positive, got {}".format(s))
        if not 0.0 <= float(psr) <= 1.0:
            raise InvalidArgumentError("PSR must be within [0, 1], got {}".format(psr))
        if not 0.0 <= float(exploit_probability) <= 1.0:
            raise InvalidArgumentError("exploit_probability must be within [0, 1], got {}".format(exploit_probability))
        if not 0.0 <= float(mask_threshold) <= 1.0:
            raise InvalidArgumentError("mask_threshold must be within [0, 1], got {}".format(mask_threshold))
        if cf_variant not in CF_VARIANTS:
            raise InvalidArgumentError("Unknown CF variant {}, expected one of {}".format(cf_variant, CF_VARIANTS))
        if apts_brownian_exponent not in APTS_BROWNIAN_EXPONENTS:
            raise InvalidArgumentError("Unknown APTS exponent {}, expected one of {}".format(apts_brownian_exponent, APTS_BROWNIAN_EXPONENTS))
        self.s = float(s)
        self.psr = float(psr)
        self.cf_variant = cf_variant
        self.levy = levy if levy is not None else LevyParams()
        self.exploit_probability = float(exploit_probability)
        self.mask_threshold = float(mask_threshold)
        self.apts = bool(apts)
        self.apts_brownian_exponent = apts_brownian_exponent

    def replace(self, **kwargs):
        values = dict(s=self.s, psr=self.psr, cf_variant=self.cf_variant, levy=self.levy,
                      exploit_probability=self.exploit_probability, mask_threshold=self.mask_threshold,
                      apts=self.apts, apts_brownian_exponent=self.apts_brownian_exponent)
        values.update(kwargs)
        return GoaParams(**values)

    def __repr__(self):
        return "GoaParams(s={}, psr={}, cf_variant={}, levy={!r}, apts={})".format(
            self.s, self.psr, self.cf_variant, self.levy, self.apts)
