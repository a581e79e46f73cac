from msigoa.strategy import StrategyConfig, VARIANTS, PARAM_NAMES, DPRM_SCOPES
from msigoa.ibuf import ibuf_phase, ibuf_update, EARLY, MIDDLE, LATE
from msigoa.archive import DominantArchive, archive_update
from msigoa.dprm import dprm_weights, dprm_center_and_sample, dprm_restart
from msigoa.runner import run_variant
