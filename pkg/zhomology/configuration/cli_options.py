"""
Options of the zhomology subcommands, shared by all subparsers in arguments.py
"""
import argparse
from typing import Union

from zhomology import __version__, constants


def check_stage(value: str) -> Union[int, float]:
    """
    A filtration stage or spectral sequence level: an integer, or 'inf'.
    """
    if value.lower() in (constants.INFINITY_TEXT, 'infinity', '∞'):
        return constants.INFINITY
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{value} is invalid for this parameter, should be an integer or 'inf'"
        )


def check_field_arg(value: str) -> Union[int, str]:
    """
    'Q' for the rationals, otherwise the characteristic of a prime field.
    """
    if value in ('Q', 'q'):
        return 'Q'
    try:
        prime = int(value)
        if prime < 0:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{value} is invalid for this parameter, should be Q or a prime"
        )
    return prime


class Arg:
    # Optional CLI arguments; without option strings the argument is positional
    def __init__(self, *args, **kwargs):
        self.cli = args
        self.kwargs = kwargs

    @property
    def positional(self) -> bool:
        return not self.cli


# List of available command line options
AVAILABLE_CLI_OPTIONS = {
    # Common options
    "verbosity": Arg(
        '-v', '--verbose',
        help='Verbose mode (-vv for more, -vvv to get all messages).',
        action='count',
        default=0,
    ),
    "logfile": Arg(
        '--logfile',
        help='Log to the file specified.',
        metavar='FILE',
    ),
    "version": Arg(
        '-V', '--version',
        action='version',
        version=f'%(prog)s {__version__}',
    ),
    "config": Arg(
        '-c', '--config',
        help='Specify configuration file. '
        'Multiple --config options may be used. '
        'Can be set to `-` to read config from stdin.',
        action='append',
        metavar='PATH',
    ),
    # Inputs
    "complex_file": Arg(
        metavar='FILE',
        help='Filtered simplicial (.fsc) or chain complex (.fcc) file, `-` for stdin.',
    ),
    "equivalence_file": Arg(
        metavar='FILE',
        help='Equivalence file with [complex C|D|EC] and [map f1 .. h2] blocks.',
    ),
    "level": Arg(
        metavar='R',
        type=check_stage,
        help="Spectral sequence level r >= 1, or 'inf' for the final page.",
    ),
    "p": Arg(
        metavar='P',
        type=int,
        help='Filtration index p.',
    ),
    "q": Arg(
        metavar='Q',
        type=int,
        help='Complementary index q (total degree p + q).',
    ),
    "stage_i": Arg(
        metavar='I',
        type=int,
        help='Stage i.',
    ),
    "stage_j": Arg(
        metavar='J',
        type=int,
        help='Stage j.',
    ),
    "stage_k": Arg(
        metavar='K',
        type=check_stage,
        help="Stage k, or 'inf'.",
    ),
    "degree": Arg(
        metavar='N',
        type=int,
        help='Homological degree n.',
    ),
    # Query options
    "filtration_start": Arg(
        '--start',
        help='First filtration stage (default: 1 for simplicial, 0 for chain files).',
        type=int,
        choices=[0, 1],
    ),
    "field": Arg(
        '--field',
        help='Compute over Q or the prime field F_p instead of the integers.',
        type=check_field_arg,
        metavar='p|Q',
    ),
    "show_generators": Arg(
        '--generators',
        help='Print a representing cycle after each component.',
        action='store_true',
    ),
    "output_format": Arg(
        '--format',
        help='Output format: Kenzo style component lines or tab separated values.',
        choices=constants.OUTPUT_FORMATS,
    ),
    "use_oracle": Arg(
        '--oracle',
        help='Compute through stage homology and induced maps instead of the '
        'quotient formulas.',
        action='store_true',
    ),
    # Barcode options
    "barcode_mode": Arg(
        '--mode',
        help='Barcode description (default: stagewise).',
        choices=constants.BARCODE_MODES + list(constants.BARCODE_MODE_ALIASES),
    ),
    "barcode_svg": Arg(
        '--svg',
        help='Also store the barcode as SVG at the given path.',
        metavar='PATH',
    ),
    "barcode_degrees": Arg(
        '--degrees',
        help='Only draw bars of these degrees.',
        nargs='+',
        type=int,
        metavar='N',
    ),
}
