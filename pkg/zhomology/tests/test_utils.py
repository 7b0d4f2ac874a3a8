# pragma pylint: disable=missing-docstring, C0103
import pytest

from zhomology import StageOrderError, UnverifiedEquivalenceError
from zhomology.utils import (render_components, start_barcode, start_check_inequality,
                             start_prst_hmlg_group, start_spsq_dffr, start_spsq_group,
                             start_stage_hmlg_group, start_total_prst_hmlg_group,
                             start_triple_prst_hmlg_group, start_verify_equivalence)
from zhomology.tests.conftest import get_args, log_has, testdata


def tsv_rows(text):
    return [[cell.strip() for cell in line.split('\t')] for line in text.splitlines()]


def test_render_components() -> None:
    config = {'output_format': 'kenzo', 'show_generators': True}
    text = render_components('H^{1,2}_0', [(2, [1, 0]), (0, None)], ['a', 'b'], config)
    assert text == 'H^{1,2}_0\nComponent Z/2Z\n  generator: 1*a\nComponent Z\n'
    assert render_components('BD^{1,3}_0', [], ['a'], config) == 'BD^{1,3}_0\n'
    assert render_components('t', [(0, None)], [], config, field=0) == 't\nComponent Q\n'


def test_start_spsq_group(capsys) -> None:
    start_spsq_group(get_args(['spsq-group', testdata('triangle.fsc'), '1', '1', '-1']))
    assert capsys.readouterr().out == 'Spectral sequence E^1_{1,-1}\nComponent Z\n'


def test_start_spsq_group_generators(capsys) -> None:
    start_spsq_group(get_args(['spsq-group', testdata('triangle.fsc'), 'inf', '6', '-5',
                               '--generators']))
    assert capsys.readouterr().out == 'Spectral sequence E^inf_{6,-5}\n'

    start_spsq_group(get_args(['spsq-group', testdata('triangle.fsc'), '1', '1', '-1',
                               '--generators']))
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == 'Component Z'
    assert lines[2].startswith('  generator: ')
    assert lines[2].endswith('*<0>')


def test_start_spsq_dffr(capsys) -> None:
    start_spsq_dffr(get_args(['spsq-dffr', testdata('triangle.fsc'), '2', '4', '-3']))
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == 'Spectral sequence differential d^2_{4,-3}: E^2_{4,-3} -> E^2_{2,-2}'
    assert lines[1:5] == ['Source', 'Component Z', 'Target', 'Component Z']
    assert 'Matrix' in lines
    assert 'Zero differential' not in out


def test_start_spsq_dffr_zero(capsys) -> None:
    start_spsq_dffr(get_args(['spsq-dffr', testdata('triangle.fsc'), '1', '1', '-1']))
    out = capsys.readouterr().out
    assert 'Target\n' in out
    assert out.endswith('Zero differential\n')


def test_start_prst_hmlg_group(capsys) -> None:
    start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('extension.fcc'),
                                    '1', '5', '0']))
    assert capsys.readouterr().out == 'BD^{1,5}_0\nComponent Z/2Z\n'

    start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('extension.fcc'),
                                    '5', 'inf', '1', '--oracle']))
    assert capsys.readouterr().out == 'BD^{5,inf}_1\nComponent Z\n'


def test_start_prst_hmlg_group_generators(capsys) -> None:
    start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('extension.fcc'),
                                    '1', '5', '0', '--generators']))
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ['BD^{1,5}_0', 'Component Z/2Z']
    assert lines[2].startswith('  generator: ')


def test_start_prst_hmlg_group_tsv(capsys) -> None:
    start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('extension.fcc'),
                                    '3', '6', '0', '--format', 'tsv']))
    rows = tsv_rows(capsys.readouterr().out)
    assert rows[0] == ['divisor', 'generator']
    assert len(rows) == 2
    assert rows[1][0] == '2'


def test_start_prst_hmlg_group_over_field(capsys, caplog) -> None:
    start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('extension.fcc'),
                                    '1', '3', '0', '--field', '2', '--generators']))
    assert capsys.readouterr().out == 'BD^{1,3}_0\nComponent F2\n'
    assert log_has('Generators are not available over a field.', caplog)

    start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('extension.fcc'),
                                    '1', '3', '0', '--field', 'Q']))
    assert capsys.readouterr().out == 'BD^{1,3}_0\n'


def test_start_prst_hmlg_group_bad_order() -> None:
    with pytest.raises(StageOrderError):
        start_prst_hmlg_group(get_args(['prst-hmlg-group', testdata('triangle.fsc'),
                                        '3', '2', '0']))


def test_start_total_prst_hmlg_group(capsys) -> None:
    start_total_prst_hmlg_group(get_args(['total-prst-hmlg-group', testdata('extension.fcc'),
                                          '3', '4', '0']))
    assert capsys.readouterr().out == 'H^{3,4}_0\nComponent Z/4Z\n'


def test_start_triple_prst_hmlg_group(capsys) -> None:
    start_triple_prst_hmlg_group(get_args(['triple-prst-hmlg-group', testdata('staircase.fcc'),
                                           '1', '1', '4', '0']))
    assert capsys.readouterr().out == 'H^{1,1,4}_0\nComponent Z/4Z\n'


def test_start_stage_hmlg_group(capsys) -> None:
    start_stage_hmlg_group(get_args(['stage-hmlg-group', testdata('triangle.fsc'), '3', '0']))
    assert capsys.readouterr().out == 'H^{3,3}_0\n' + 'Component Z\n' * 3


def test_start_barcode(capsys) -> None:
    start_barcode(get_args(['barcode', testdata('extension.fcc'), '--mode', 'alt',
                            '--degrees', '0', '--format', 'tsv']))
    rows = tsv_rows(capsys.readouterr().out)
    assert rows == [['dim', 'interval', 'group', 'extension'],
                    ['0', '[1,5)', 'Z/2', 'Z/2'],
                    ['0', '[3,6)', 'Z/2', 'Z/2'],
                    ['0', '[1,5)+[3,6)', '', 'joined: Z/4']]


def test_start_barcode_over_field(capsys) -> None:
    start_barcode(get_args(['barcode', testdata('triangle.fsc'), '--field', '2',
                            '--degrees', '1', '--format', 'tsv']))
    rows = tsv_rows(capsys.readouterr().out)
    assert rows[1:] == [['1', '[6,7)', 'F2', 'F2']]


def test_start_barcode_svg(capsys, caplog, tmpdir) -> None:
    pytest.importorskip('matplotlib')
    filename = tmpdir / 'bars.svg'
    start_barcode(get_args(['barcode', testdata('triangle.fsc'), '--svg', str(filename)]))
    assert '[1,inf)' in capsys.readouterr().out
    assert filename.check()
    assert log_has(f'Stored barcode as {filename}', caplog)


def test_start_check_inequality(capsys) -> None:
    start_check_inequality(get_args(['check-inequality', testdata('triangle.fsc'), '1', '1']))
    assert capsys.readouterr().out == 'lhs=3 rhs=1 STRICT\n'

    start_check_inequality(get_args(['check-inequality', testdata('triangle.fsc'), '1', '0',
                                     '--format', 'tsv']))
    rows = tsv_rows(capsys.readouterr().out)
    assert rows == [['lhs', 'rhs', 'verdict'], ['3', '3', 'EQUAL']]


def test_start_verify_equivalence(capsys) -> None:
    start_verify_equivalence(get_args(['verify-equivalence', testdata('collapse.equiv'),
                                       '--format', 'tsv']))
    lines = capsys.readouterr().out.splitlines()
    assert lines[:4] == ['left reduction D => C: ok', 'right reduction D => EC: ok',
                         'homotopy order: left 0, right 1', 'filtered: yes']
    rows = tsv_rows('\n'.join(lines[4:]))
    assert rows == [['level', 'C', 'EC', 'status'],
                    ['1', 'Z+Z+Z+Z', '0', 'outside theorem range'],
                    ['2', '0', '0', 'match'],
                    ['3', '0', '0', 'match']]


def test_start_verify_equivalence_broken(capsys) -> None:
    with pytest.raises(UnverifiedEquivalenceError):
        start_verify_equivalence(get_args(['verify-equivalence', testdata('broken.equiv')]))
    lines = capsys.readouterr().out.splitlines()
    assert lines == ['left reduction D => C: 2 violations',
                     '  (1) fg = id fails in degree 0 on a',
                     '  (2) gf + dh + hd = id fails in degree 0 on a',
                     'right reduction D => EC: ok']
