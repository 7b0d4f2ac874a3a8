"""
SVG rendering of integer barcode diagrams
"""
import io
import logging
from pathlib import Path
from typing import List, Tuple

from zhomology.barcode.diagram import BarcodeDiagram
from zhomology.barcode.render import diagram_label
from zhomology.constants import INFINITY_TEXT, SVG_HASH_SALT, SVG_ROW_HEIGHT, SVG_WIDTH
from zhomology.misc import format_label
from zhomology.state import BarcodeMode

logger = logging.getLogger(__name__)


try:
    import matplotlib
    from matplotlib.figure import Figure
except ImportError:
    logger.exception("Module matplotlib not found \n Please install using `pip install matplotlib`")
    exit(1)

BAR_COLOR = '#1f4e79'
LINK_COLOR = '#b03a2e'
GRID_COLOR = '#d0d0d0'


def _stage_axis(diagram: BarcodeDiagram) -> Tuple[List[int], int]:
    """
    Grid stages and the x position standing in for infinity.
    """
    stages = list(range(diagram.filtration_start, diagram.max_filtration + 1))
    return stages, diagram.max_filtration + 1


def _bar_label(diagram: BarcodeDiagram, idx: int) -> str:
    bar = diagram.bars[idx]
    if diagram.mode == BarcodeMode.ALTERNATIVE:
        return diagram_label(diagram, bar.group)
    return f'{diagram_label(diagram, bar.group)} ({diagram_label(diagram, bar.quotient)})'


def generate_barcode_figure(diagram: BarcodeDiagram) -> 'Figure':
    """
    Draw one row per bar and one row per extension link on a grid of stages.
    Births are filled circles, finite deaths hollow circles and
    infinite bars end in an arrow.
    """
    stages, infinity_x = _stage_axis(diagram)
    rows = len(diagram.bars) + len(diagram.links)
    fig = Figure(figsize=(SVG_WIDTH, SVG_ROW_HEIGHT * max(rows, 1) + 1))
    ax = fig.add_subplot(1, 1, 1)

    for stage in stages:
        ax.axvline(stage, color=GRID_COLOR, linewidth=0.8, zorder=0, gid=f'grid-{stage}')

    for idx, bar in enumerate(diagram.bars):
        end = infinity_x if bar.infinite else bar.death
        ax.plot([bar.birth, end], [idx, idx], color=BAR_COLOR, linewidth=3, gid=f'bar-{idx}')
        ax.plot([bar.birth], [idx], marker='o', color=BAR_COLOR, gid=f'birth-{idx}')
        if bar.infinite:
            ax.plot([end], [idx], marker='>', color=BAR_COLOR, gid=f'arrow-{idx}')
        else:
            ax.plot([end], [idx], marker='o', markerfacecolor='white',
                    markeredgecolor=BAR_COLOR, color=BAR_COLOR, gid=f'death-{idx}')
        ax.text(end + 0.15, idx, _bar_label(diagram, idx), va='center', fontsize=8,
                gid=f'label-{idx}')

    for number, link in enumerate(diagram.links):
        row = len(diagram.bars) + number
        joined = [diagram.bars[idx] for idx in link.bars]
        x = max(bar.birth for bar in joined)
        ax.plot([x] * (len(link.bars) + 1), list(link.bars) + [row], color=LINK_COLOR,
                linestyle='--', marker='.', gid=f'link-{number}')
        ax.text(x + 0.15, row, f'joined: {format_label(link.label)}', va='center', fontsize=8,
                color=LINK_COLOR, gid=f'link-label-{number}')

    ax.set_xticks(stages + [infinity_x])
    ax.set_xticklabels([str(s) for s in stages] + [INFINITY_TEXT])
    ax.set_xlim(diagram.filtration_start - 0.5, infinity_x + 1.5)
    ax.set_yticks(list(range(rows)))
    ax.set_yticklabels([f'dim {bar.n}' for bar in diagram.bars] + [''] * len(diagram.links))
    ax.set_ylim(max(rows, 1) - 0.5, -0.5)
    ax.set_xlabel('stage')
    ax.set_title(f'{diagram.mode.value} integer barcode')
    return fig


def render_svg(diagram: BarcodeDiagram) -> str:
    """
    Render the diagram as an SVG 1.1 document.
    Identical diagrams produce identical documents.
    """
    fig = generate_barcode_figure(diagram)
    buffer = io.StringIO()
    with matplotlib.rc_context({'svg.hashsalt': SVG_HASH_SALT, 'svg.fonttype': 'none'}):
        fig.savefig(buffer, format='svg', metadata={'Date': None})
    return buffer.getvalue()


def store_svg(diagram: BarcodeDiagram, filename: Path) -> None:
    """
    Write the SVG rendering of the diagram to filename
    """
    filename = Path(filename)
    filename.write_text(render_svg(diagram), encoding='utf-8')
    logger.info(f"Stored barcode as {filename}")
