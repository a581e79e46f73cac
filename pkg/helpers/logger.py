#!/usr/bin/env python3

import argparse
import configparser
import logging
import os

from helpers.general import Singleton


logger = logging.getLogger(__name__)
logger.setLevel(logging.WARNING)

def setup_logger(logger_name, requested_level):
    # type: (str, str) -> logging.Logger
    level = check_log_level(requested_level, logging.WARNING)
    level = LoggingConfig().get_level(logger_name, level)
    logger.debug("Logger {} will be set to {} level".format(logger_name, get_log_level_name(level)))
    l = logging.getLogger(logger_name)
    l.setLevel(level)
    return l

def check_log_level(log_level_name, default_value):
    # type: (str, int) -> int
    """
    Verifies a logging level string - returns the requested log level
    if the supplied log level name is valid, default_value otherwise.

    >>> check_log_level("warning", logging.ERROR) == logging.WARNING
    True
    >>> check_log_level("invalid_level", logging.ERROR) == logging.ERROR
    True
    """
    level = logging.getLevelName(str(log_level_name).upper())
    if isinstance(level, int):
        return level
    return default_value

def get_log_level_name(level):
    return logging.getLevelName(level)

def on_reload(*args):
    LoggingConfig().reload_config()


class LoggingConfig(Singleton):
    """
    Keeps track of the logging config file, allowing to override logging levels
    of individual modules (say, ``bench.campaign`` or ``msigoa.runner``)
    without touching the code.
    """

    default_config_sections = ["global"]
    default_conf_path = "log_conf.ini"
    _initialized = False

    def __init__(self, conf_path=None):
        # Singleton: __init__ runs on every LoggingConfig() call, and only
        # an explicitly passed, different path loads another file
        if self._initialized and conf_path in (None, self._config_file_path):
            return
        if conf_path is None:
            conf_path = self.default_conf_path
        self.default_log_level = logging.WARNING
        self._config_file_path = conf_path
        self._module_overrides = {}
        self._load_config()
        self._initialized = True

    def get_level(self, module_name, default_value=None):
        """
        Gets the recommended log level for a module, based on
        whether it's overridden from the config file, the default level and
        the global default level.
        """
        if not default_value:
            default_value = self.default_log_level

        logging_level = self._module_overrides.get(module_name, default_value)
        logger.debug("The recommended log level for {} is {}".format(module_name, get_log_level_name(logging_level)))
        return logging_level

    def set_level(self, module_name, level):
        """
        Used when calling this file with "python -m helpers.logger set"
        to set a specific logging level in the config file.
        """
        self._module_overrides[module_name] = check_log_level(level, logging.WARNING)
        self._dispatch_log_levels()
        self.save_to_config()

    def _load_config(self):
        """
        Loads the config file and reads all log level overrides found in it.
        A missing file simply means there are no overrides.
        """
        if not os.path.exists(self._config_file_path):
            return
        config = configparser.ConfigParser()
        config.read(self._config_file_path)

        if config.has_section("global"):
            level_name = config.get("global", "default_level", fallback="warning")
            self.default_log_level = check_log_level(level_name, logging.WARNING)

        for module_name in config.sections():
            if module_name not in self.default_config_sections:
                for key, value in config.items(module_name):
                    if key == "level":
                        self._module_overrides[module_name] = check_log_level(value, logging.NOTSET)

    def reload_config(self):
        """
        Loads the config file once again, reading and applying all config level
        overrides found in it.
        """
        self._load_config()
        self._dispatch_log_levels()

    def __str__(self):
        config_str = "default log level: {}".format(get_log_level_name(self.default_log_level))
        if not len(self._module_overrides):
            config_str += "\n\tConfig file absent or empty"
        else:
            for module_name, level in sorted(self._module_overrides.items()):
                config_str += "\n\t{} : {}".format(module_name, get_log_level_name(level))
        return config_str

    def _dispatch_log_levels(self):
        """
        Actually applies the new logging levels from _module_overrides
        to the individual loggers.
        """
        for module_name, new_level in self._module_overrides.items():
            l = logging.getLogger(module_name)
            current_level = l.getEffectiveLevel()
            if current_level != new_level:
                cl_name = get_log_level_name(current_level)
                nl_name = get_log_level_name(new_level)
                logger.info("Logger {}: current level is {}, new level is {}".format(module_name, cl_name, nl_name))
                l.setLevel(new_level)

    def save_to_config(self):
        config = configparser.ConfigParser()
        config.add_section("global")
        config.set("global", "default_level", get_log_level_name(self.default_log_level))
        for module_name, level in sorted(self._module_overrides.items()):
            config.add_section(module_name)
            config.set(module_name, "level", get_log_level_name(level))
        with open(self._config_file_path, 'w') as config_file:
            config.write(config_file)


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description="bench logger configurator")
    subparsers = parser.add_subparsers(dest='cmd', help="Command")
    show_parser = subparsers.add_parser('show', help="Shows the current configuration")
    show_parser.add_argument('--path', dest='path', type=str, default="log_conf.ini")
    set_parser = subparsers.add_parser('set', help="Changes the log level of a given module")
    set_parser.add_argument('--path', dest='path', type=str, default="log_conf.ini")
    set_parser.add_argument('--name', dest="module_name", type=str, required=True)
    set_parser.add_argument('--level', dest='level', type=str, required=True)

    args = parser.parse_args()
    config = LoggingConfig(conf_path=args.path)
    if args.cmd == 'show':
        print(config)

    if args.cmd == 'set':
        config.set_level(args.module_name, args.level)
