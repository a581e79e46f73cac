from stats.descriptive import SampleSet, Summary, summarize
from stats.ranks import rank_data, rank_table, rank_distribution
from stats.nonparametric import TestResult, FriedmanResult, WinTieLoss, wilcoxon_rank_sum, friedman, win_tie_loss, not_worse_ratio
from stats.nonparametric import WIN, TIE, LOSS, SIGNIFICANCE
