from bench.config import ConfigError, UnknownNameError, Campaign, AlgorithmSpec, ProblemSpec, parse_config, campaign_from_dict
from bench.campaign import derive_seed, run_campaign, CampaignResult
