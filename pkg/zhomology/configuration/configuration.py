"""
Merges optional config files, schema defaults and command line flags
"""
import logging
from argparse import Namespace
from copy import deepcopy
from typing import Any, Callable, Dict, List, Optional

from zhomology import constants
from zhomology.configuration.config_validation import (
    validate_config_consistency, validate_config_schema)
from zhomology.configuration.load_config import load_config_file
from zhomology.loggers import setup_logging
from zhomology.misc import deep_merge_dicts

logger = logging.getLogger(__name__)


class Configuration(object):
    """
    Class to read and init the configuration of a zhomology command.
    Config files are optional, command line flags override them.
    """

    def __init__(self, args: Namespace) -> None:
        self.args = args
        self.config: Optional[Dict[str, Any]] = None

    def get_config(self) -> Dict[str, Any]:
        """
        Return the config. Use this method to get the command config
        :return: Dict: command config
        """
        if self.config is None:
            self.config = self.load_config()

        return self.config

    @staticmethod
    def from_files(files: Optional[List[str]]) -> Dict[str, Any]:
        """
        Start from MINIMAL_CONFIG and merge every file over it, in order.
        A key set by a later file replaces the same key from an earlier one.
        Without files the minimal configuration is returned unvalidated.
        :param files: config paths given with -c, or None
        :return: merged configuration
        """
        config: Dict[str, Any] = deepcopy(constants.MINIMAL_CONFIG)

        if not files:
            return config

        for path in files:
            logger.info(f'Using config: {path} ...')

            config = deep_merge_dicts(load_config_file(path), config)

        logger.info('Validating configuration ...')
        validate_config_schema(config)

        return config

    def load_config(self) -> Dict[str, Any]:
        """
        Build the configuration of the parsed subcommand
        """
        config: Dict[str, Any] = Configuration.from_files(getattr(self.args, 'config', None))

        config['command'] = getattr(self.args, 'subparser', None)

        self._process_logging_options(config)

        self._process_query_options(config)

        self._process_barcode_options(config)

        validate_config_consistency(config)

        return config

    def _process_logging_options(self, config: Dict[str, Any]) -> None:
        """
        Copy -v and --logfile into the config and set up logging from it.
        """
        if 'verbosity' in self.args and self.args.verbosity:
            config.update({'verbosity': self.args.verbosity})
        else:
            config.setdefault('verbosity', 0)

        if 'logfile' in self.args and self.args.logfile:
            config.update({'logfile': self.args.logfile})

        setup_logging(config)

    def _process_query_options(self, config: Dict[str, Any]) -> None:

        self._args_to_config(config, argname='filtration_start',
                             logstring='Parameter --start detected, filtration starts at {} ...')

        self._args_to_config(config, argname='field',
                             logstring='Parameter --field detected, computing over {} ...')

        self._args_to_config(config, argname='output_format',
                             logstring='Using output format {} ...')

        self._args_to_config(config, argname='show_generators',
                             logstring='Parameter --generators detected ...')

        self._args_to_config(config, argname='use_oracle',
                             logstring='Parameter --oracle detected, using the oracle path ...')

    def _process_barcode_options(self, config: Dict[str, Any]) -> None:

        barcode = config.setdefault('barcode', {})
        barcode.setdefault('mode', 'stagewise')

        self._args_to_config(barcode, argname='barcode_mode', key='mode',
                             logstring='Using {} barcode description ...',
                             logfun=lambda mode: constants.BARCODE_MODE_ALIASES.get(mode, mode))
        barcode['mode'] = constants.BARCODE_MODE_ALIASES.get(barcode['mode'], barcode['mode'])

        self._args_to_config(barcode, argname='barcode_svg', key='svg',
                             logstring='Storing barcode SVG to {} ...')

        self._args_to_config(barcode, argname='barcode_degrees', key='degrees',
                             logstring='Limiting barcode to degrees {} ...')

    def _args_to_config(self, config: Dict[str, Any], argname: str,
                        logstring: str, logfun: Optional[Callable] = None,
                        key: Optional[str] = None) -> None:
        """
        Copy one parsed flag into config when it was given, and log the override.
        :param argname: attribute of the parsed namespace
        :param logstring: message with one {} placeholder for the value
        :param logfun: maps the stored value to what the message shows
        :param key: config key to store under, defaults to argname
        """
        value = getattr(self.args, argname, None)
        # 0 is a valid filtration start, unset flags are None or False
        if value is None or value is False:
            return
        key = key or argname
        config.update({key: value})
        if logfun:
            logger.info(logstring.format(logfun(config[key])))
        else:
            logger.info(logstring.format(config[key]))
