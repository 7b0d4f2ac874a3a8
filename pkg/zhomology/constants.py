# pragma pylint: disable=too-few-public-methods

"""
zhomology constants
"""
import math

INFINITY = math.inf
INFINITY_TEXT = 'inf'

DEFAULT_FILTRATION_START_SIMPLICIAL = 1
DEFAULT_FILTRATION_START_CHAIN = 0

OUTPUT_FORMATS = ['kenzo', 'tsv']
BARCODE_MODES = ['stagewise', 'alternative']
BARCODE_MODE_ALIASES = {'alt': 'alternative'}

SPECTRAL_COMMANDS = ['spsq-group', 'spsq-dffr', 'check-inequality', 'verify-equivalence']

TEXT_TABLE_FORMAT = 'pipe'
TSV_TABLE_FORMAT = 'tsv'

SVG_HASH_SALT = 'zhomology'
SVG_ROW_HEIGHT = 0.4  # inch
SVG_WIDTH = 8  # inch

MINIMAL_CONFIG = {
    'filtration_start': None,
    'field': None,
    'output_format': 'kenzo',
    'show_generators': False,
    'use_oracle': False,
    'barcode': {
        'mode': 'stagewise',
        'svg': None,
        'degrees': None,
    },
}

# Required json-schema for user specified config
CONF_SCHEMA = {
    'type': 'object',
    'properties': {
        'filtration_start': {'type': ['integer', 'null'], 'enum': [0, 1, None]},
        'field': {
            'anyOf': [
                {'type': 'null'},
                {'type': 'string', 'enum': ['Q', 'q']},
                {'type': 'integer', 'minimum': 0},
            ]
        },
        'output_format': {'type': 'string', 'enum': OUTPUT_FORMATS},
        'show_generators': {'type': 'boolean', 'default': False},
        'use_oracle': {'type': 'boolean', 'default': False},
        'barcode': {
            'type': 'object',
            'properties': {
                'mode': {'type': 'string', 'enum': BARCODE_MODES, 'default': 'stagewise'},
                'svg': {'type': ['string', 'null']},
                'degrees': {
                    'type': ['array', 'null'],
                    'items': {'type': 'integer'},
                },
            },
        },
        'verbosity': {'type': 'integer', 'minimum': 0},
        'logfile': {'type': ['string', 'null']},
    },
    'required': ['output_format'],
}
