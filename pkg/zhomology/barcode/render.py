"""
Text rendering of integer barcode diagrams
"""
import logging
from typing import List

from tabulate import tabulate

from zhomology.barcode.diagram import BarcodeDiagram, IntegerBar
from zhomology.constants import INFINITY_TEXT, TEXT_TABLE_FORMAT
from zhomology.misc import field_name, format_label
from zhomology.state import BarcodeMode

logger = logging.getLogger(__name__)


def format_interval(bar: IntegerBar) -> str:
    death = INFINITY_TEXT if bar.infinite else str(bar.death)
    return f'[{bar.birth},{death})'


def diagram_label(diagram: BarcodeDiagram, divisors) -> str:
    """
    Group label of a bar. Field diagrams carry one copy of the field per bar.
    """
    if diagram.field is not None:
        return field_name(diagram.field) if divisors else '0'
    return format_label(divisors)


def _headers(diagram: BarcodeDiagram) -> List[str]:
    last = 'extension' if diagram.mode == BarcodeMode.ALTERNATIVE else 'quotient'
    return ['dim', 'interval', 'group', last]


def _rows(diagram: BarcodeDiagram) -> List[List[str]]:
    rows = [[str(bar.n), format_interval(bar), diagram_label(diagram, bar.group),
             diagram_label(diagram, bar.quotient)] for bar in diagram.bars]
    for link in diagram.links:
        joined = [diagram.bars[idx] for idx in link.bars]
        rows.append([str(joined[0].n), '+'.join(format_interval(bar) for bar in joined), '',
                     f'joined: {format_label(link.label)}'])
    return rows


def render_text(diagram: BarcodeDiagram, tablefmt: str = TEXT_TABLE_FORMAT) -> str:
    """
    One row per bar, then one row per extension link.
    An empty diagram renders as the header alone.
    :param tablefmt: tabulate table format, 'pipe' for terminals or 'tsv'
    """
    table = tabulate(_rows(diagram), headers=_headers(diagram), tablefmt=tablefmt,
                     disable_numparse=True, stralign='left')
    logger.debug('Rendered %s bar rows as %s', len(diagram.bars), tablefmt)
    return table + '\n'
