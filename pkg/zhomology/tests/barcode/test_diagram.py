# pragma pylint: disable=missing-docstring, C0103
import pytest

from zhomology import FieldError
from zhomology.barcode.diagram import (ExtensionLink, IntegerBar, build_barcode,
                                       build_field_barcode)
from zhomology.constants import INFINITY
from zhomology.persistence.groups import bd_group
from zhomology.state import BarcodeMode
from zhomology.tests.conftest import log_has


def test_staircase_stagewise(staircase, caplog) -> None:
    diagram = build_barcode(staircase, BarcodeMode.STAGEWISE, degrees=[0])
    assert diagram.bars == [
        IntegerBar(0, 1, 3, (2,), (2,)),
        IntegerBar(0, 1, 4, (4,), (2,)),
        IntegerBar(0, 2, 5, (8,), (2,)),
        IntegerBar(0, 2, 6, (16,), (2,)),
        IntegerBar(0, 2, 7, (32,), (2,)),
    ]
    assert diagram.links == []
    assert diagram.degrees == [0]
    assert log_has('Built stagewise barcode with 5 bars and 0 links', caplog)


def test_extension_alternative(extension) -> None:
    diagram = build_barcode(extension, 'alternative', degrees=[0])
    assert diagram.mode == BarcodeMode.ALTERNATIVE
    assert diagram.bars == [IntegerBar(0, 1, 5, (2,), (2,)), IntegerBar(0, 3, 6, (2,), (2,))]
    # windows (3,3), (3,4) and (4,4) all see Z/4 instead of Z/2+Z/2
    assert diagram.links == [ExtensionLink((0, 1), (4,))]


def test_extension_infinite_bars(extension) -> None:
    diagram = build_barcode(extension, BarcodeMode.ALTERNATIVE, degrees=[1])
    infinite = [bar for bar in diagram.bars if bar.infinite]
    assert [bar.birth for bar in infinite] == [5, 6]
    assert all(bar.group == (0,) for bar in infinite)


def test_triangle_barcodes_agree_without_torsion(triangle) -> None:
    stagewise = build_barcode(triangle, BarcodeMode.STAGEWISE)
    alternative = build_barcode(triangle, BarcodeMode.ALTERNATIVE)
    intervals = [(bar.n, bar.birth, bar.death) for bar in stagewise.bars]
    assert intervals == [(0, 1, INFINITY), (0, 2, 4), (0, 3, 5), (1, 6, 7)]
    assert intervals == [(bar.n, bar.birth, bar.death) for bar in alternative.bars]
    assert alternative.links == []
    assert stagewise.bars_in(1) == [IntegerBar(1, 6, 7, (0,), (0,))]


def test_alternative_bars_are_bd_summands(random_complex) -> None:
    diagram = build_barcode(random_complex, BarcodeMode.ALTERNATIVE)
    for bar in diagram.bars:
        assert bar.group[0] in bd_group(random_complex, bar.birth, bar.death, bar.n).divisors


def test_empty_complex_has_no_bars(empty_complex) -> None:
    diagram = build_barcode(empty_complex, BarcodeMode.STAGEWISE)
    assert diagram.bars == []
    assert diagram.links == []


def test_unknown_mode(triangle) -> None:
    with pytest.raises(ValueError):
        build_barcode(triangle, 'diagonal')


def test_field_barcode(triangle, klein) -> None:
    diagram = build_field_barcode(triangle, 2, degrees=[1])
    assert diagram.field == 2
    assert diagram.bars == [IntegerBar(1, 6, 7, (0,), (0,))]
    over_f2 = build_field_barcode(klein, 2, degrees=[2])
    over_q = build_field_barcode(klein, 'Q', degrees=[2])
    assert len(over_f2.bars) == 1
    assert over_q.bars == []
    with pytest.raises(FieldError):
        build_field_barcode(triangle, 9)
