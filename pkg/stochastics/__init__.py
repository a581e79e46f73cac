from stochastics.motion import brownian_vector, mantegna_sigma, LevyParams, levy_vector
from stochastics.schedules import cf_factor, apts_brownian_factor, apts_levy_factor, apts_scale_brownian, apts_scale_levy
from stochastics.schedules import CF_VARIANTS, APTS_BROWNIAN_EXPONENTS
