"""
Various formatting and file helpers for zhomology
"""
import logging
from typing import IO, Any, Optional, Sequence

import rapidjson

logger = logging.getLogger(__name__)


def format_cyclic(divisor: int) -> str:
    """
    Label of a single cyclic group: 0 -> "Z", d -> "Z/d"
    """
    return 'Z' if divisor == 0 else f'Z/{divisor}'


def format_label(divisors: Sequence[int]) -> str:
    """
    Label of a direct sum of cyclic groups, torsion first then free part.
    >>> format_label([2, 4, 0])
    'Z/2+Z/4+Z'
    >>> format_label([])
    '0'
    """
    if not divisors:
        return '0'
    ordered = sorted(d for d in divisors if d != 0) + [d for d in divisors if d == 0]
    return '+'.join(format_cyclic(d) for d in ordered)


def field_name(prime: int) -> str:
    return 'Q' if prime == 0 else f'F{prime}'


def format_component(divisor: int, field: Optional[int] = None) -> str:
    """
    One "Component" line in the style of the Kenzo transcripts.
    Over a field every component is a copy of the field itself.
    """
    if field is not None:
        return f'Component {field_name(field)}'
    return 'Component Z' if divisor == 0 else f'Component Z/{divisor}Z'


def format_chain(names: Sequence[str], coordinates: Sequence[int]) -> str:
    """
    Render a chain as a signed combination of generator names.
    >>> format_chain(['ab', 'ac', 'bc'], [1, -1, 0])
    '1*ab - 1*ac'
    """
    text = ''
    for name, coef in zip(names, coordinates):
        if coef == 0:
            continue
        if not text:
            text = f'{coef}*{name}'
        elif coef < 0:
            text += f' - {-coef}*{name}'
        else:
            text += f' + {coef}*{name}'
    return text or '0'


def json_load(datafile: IO) -> Any:
    """
    load data with rapidjson, accepting comments and trailing commas
    """
    return rapidjson.load(datafile, parse_mode=rapidjson.PM_COMMENTS | rapidjson.PM_TRAILING_COMMAS)


def deep_merge_dicts(source, destination):
    """
    Values from Source override destination, destination is returned (and modified!!)
    Sample:
    >>> a = {'barcode': {'mode': 'stagewise', 'svg': None}}
    >>> b = {'barcode': {'svg': 'out.svg'}}
    >>> deep_merge_dicts(b, a) == {'barcode': {'mode': 'stagewise', 'svg': 'out.svg'}}
    True
    """
    for key, value in source.items():
        if isinstance(value, dict):
            node = destination.setdefault(key, {})
            deep_merge_dicts(value, node)
        else:
            destination[key] = value

    return destination
