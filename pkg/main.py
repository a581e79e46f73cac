#!/usr/bin/env python3

import signal
import sys

from bench.cli import main
from helpers import local_path_gen
import helpers.logger

local_path = local_path_gen(__name__)
logging_path = local_path('bench.log')


if __name__ == '__main__':
    """
    Parses arguments, initializes logging, runs the requested bench command
    """
    # log_conf.ini can be changed while a long campaign runs
    if hasattr(signal, "SIGHUP"):
        signal.signal(signal.SIGHUP, helpers.logger.on_reload)
    sys.exit(main(logging_path=logging_path))
