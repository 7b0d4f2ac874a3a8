"""
Reading of zhomology config files, with the shorthand values the cli also accepts
"""
import logging
import sys
from typing import Any, Dict

from zhomology import OperationalException, constants
from zhomology.misc import json_load


logger = logging.getLogger(__name__)


def _normalize_field(value: Any) -> Any:
    if isinstance(value, str):
        if value.upper() == 'Q':
            return 'Q'
        if value.isdigit():
            return int(value)
    return value


def normalize_config(config: Dict[str, Any], path: str) -> Dict[str, Any]:
    """
    Rewrite the shorthands of a loaded file into the values CONF_SCHEMA expects:
    'q' or a digit string as field, 'alt' as barcode mode, a single barcode degree.
    Anything else is left to schema validation.
    """
    if 'field' in config:
        config['field'] = _normalize_field(config['field'])

    barcode = config.get('barcode')
    if isinstance(barcode, dict):
        mode = barcode.get('mode')
        if mode in constants.BARCODE_MODE_ALIASES:
            barcode['mode'] = constants.BARCODE_MODE_ALIASES[mode]
            logger.info(f'{path}: barcode mode "{mode}" read as "{barcode["mode"]}"')
        if isinstance(barcode.get('degrees'), int):
            barcode['degrees'] = [barcode['degrees']]

    return config


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Load one config file, or stdin for '-'.
    :param path: path as str
    :return: normalized, not yet validated configuration
    :raises OperationalException: missing file, invalid JSON or no JSON object
    """
    try:
        with open(path) if path != '-' else sys.stdin as file:
            config = json_load(file)
    except FileNotFoundError:
        raise OperationalException(
            f'Config file "{path}" not found!'
            ' Please create a config file or check whether it exists.')
    except ValueError as e:
        raise OperationalException(f'Config file "{path}" is not valid JSON: {e}')

    if not isinstance(config, dict):
        raise OperationalException(f'Config file "{path}" must hold a JSON object.')

    return normalize_config(config, path)
