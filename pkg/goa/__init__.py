from goa.params import GoaParams
from goa.rules import initialize, exploit_step, explore_levy_step, explore_brownian_step, converge_step, escape_step
from goa.runner import goa_sweep, apply_moves, run_loop, run_goa
