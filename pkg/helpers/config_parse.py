#!/usr/bin/env python3
from __future__ import print_function

import json

from helpers.logger import setup_logger
logger = setup_logger(__name__, "warning")

def read_config(config_path):
    # type: (str) -> dict
    """
    Reads a JSON config file. Malformed JSON raises ``ValueError`` with the
    parser's line/column information, a missing file raises ``IOError``.

    >>> print('{"runs":3, "problems":[{"name":"sphere"}]}', file=open('/tmp/a_valid_campaign_file', "w"))
    >>> c = read_config("/tmp/a_valid_campaign_file")
    >>> c['runs']
    3
    """
    logger.debug("Reading config from {}".format(config_path))
    with open(config_path, 'r') as f:
        data = json.load(f)
    return data

def write_config(config_dict, config_path):
    # type: (dict, str) -> None
    """
    Writes a config (or any JSON-serializable dict) with sorted keys, so that
    identical configs produce byte-identical files.
    """
    with open(config_path, 'w', newline='\n') as f:
        json.dump(config_dict, f, indent=1, sort_keys=True)
        f.write('\n')

if __name__ == "__main__":
    import sys
    print(read_config(sys.argv[1] if len(sys.argv) > 1 else "../default_config.json"))
