# pragma pylint: disable=missing-docstring, C0103
import pytest

from zhomology.barcode.diagram import (BarcodeDiagram, IntegerBar, build_barcode,
                                       build_field_barcode)
from zhomology.barcode.render import diagram_label, format_interval, render_text
from zhomology.constants import INFINITY, TSV_TABLE_FORMAT
from zhomology.linalg.presentation import normalize_divisors
from zhomology.persistence.groups import triple_prst_group
from zhomology.state import BarcodeMode
from zhomology.tests.conftest import torsion_blocks, torsion_complex


def tsv_rows(text):
    return [[cell.strip() for cell in line.split('\t')] for line in text.splitlines()]


def test_format_interval() -> None:
    assert format_interval(IntegerBar(0, 2, 4, (0,), (0,))) == '[2,4)'
    assert format_interval(IntegerBar(1, 5, INFINITY, (0,), (0,))) == '[5,inf)'


def test_diagram_label(triangle) -> None:
    integer = build_barcode(triangle)
    assert diagram_label(integer, (2, 0)) == 'Z/2+Z'
    assert diagram_label(integer, ()) == '0'
    field = build_field_barcode(triangle, 3)
    assert diagram_label(field, (0,)) == 'F3'
    assert diagram_label(build_field_barcode(triangle, 0), (0,)) == 'Q'


def test_render_stagewise_tsv(staircase) -> None:
    diagram = build_barcode(staircase, BarcodeMode.STAGEWISE, degrees=[0])
    rows = tsv_rows(render_text(diagram, TSV_TABLE_FORMAT))
    assert rows[0] == ['dim', 'interval', 'group', 'quotient']
    assert rows[1:] == [
        ['0', '[1,3)', 'Z/2', 'Z/2'],
        ['0', '[1,4)', 'Z/4', 'Z/2'],
        ['0', '[2,5)', 'Z/8', 'Z/2'],
        ['0', '[2,6)', 'Z/16', 'Z/2'],
        ['0', '[2,7)', 'Z/32', 'Z/2'],
    ]


def test_render_alternative_links(extension) -> None:
    diagram = build_barcode(extension, BarcodeMode.ALTERNATIVE, degrees=[0])
    rows = tsv_rows(render_text(diagram, TSV_TABLE_FORMAT))
    assert rows[0][-1] == 'extension'
    assert rows[-1] == ['0', '[1,5)+[3,6)', '', 'joined: Z/4']


def test_render_pipe_table(triangle) -> None:
    text = render_text(build_barcode(triangle, BarcodeMode.ALTERNATIVE))
    lines = text.splitlines()
    assert lines[0].startswith('|')
    assert 'interval' in lines[0]
    assert len(lines) == 2 + 4
    assert '[1,inf)' in text
    assert text.endswith('\n')


def test_render_empty_diagram() -> None:
    diagram = BarcodeDiagram(BarcodeMode.STAGEWISE, [], [], 1, 1, [0])
    text = render_text(diagram)
    assert 'quotient' in text
    assert '[' not in text


def parse_label(label):
    if label == '0':
        return ()
    return tuple(0 if term == 'Z' else int(term[2:]) for term in label.split('+'))


def parse_interval(text):
    birth, death = text[1:-1].split(',')
    return int(birth), INFINITY if death == 'inf' else int(death)


@pytest.mark.parametrize('seeds', torsion_blocks(100))
def test_stagewise_tsv_reads_back_on_torsion_corpus(seeds) -> None:
    for seed in seeds:
        complex_ = torsion_complex(seed)
        diagram = build_barcode(complex_, BarcodeMode.STAGEWISE)
        rows = tsv_rows(render_text(diagram, TSV_TABLE_FORMAT))[1:]
        assert len(rows) == len(diagram.bars)
        for row, bar in zip(rows, diagram.bars):
            n, interval, group, quotient = row
            assert (int(n), *parse_interval(interval)) == (bar.n, bar.birth, bar.death)
            assert normalize_divisors(parse_label(group)) == list(bar.group), (seed, row)
            assert normalize_divisors(parse_label(quotient)) == list(bar.quotient), (seed, row)
            expected = triple_prst_group(complex_, bar.birth, bar.birth, bar.death, bar.n)
            assert list(bar.group) == expected.divisors
