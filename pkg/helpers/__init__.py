from helpers.config_parse import read_config, write_config
from helpers.general import local_path_gen, Singleton
from helpers.runners import ParallelRunner
from helpers.logger import setup_logger
