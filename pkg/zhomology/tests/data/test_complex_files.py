# pragma pylint: disable=missing-docstring, C0103
import pytest

from zhomology import ComplexFormatError, OperationalException
from zhomology.constants import (DEFAULT_FILTRATION_START_CHAIN,
                                 DEFAULT_FILTRATION_START_SIMPLICIAL)
from zhomology.data.complex_files import (is_chain_text, load_complex, parse_combination,
                                          parse_filtered_chain_complex,
                                          parse_filtered_simplicial_complex)
from zhomology.tests.conftest import log_has_re, testdata


def test_parse_combination() -> None:
    assert parse_combination('2*a - b + -1*c', 1) == [(2, 'a'), (-1, 'b'), (-1, 'c')]
    assert parse_combination('x', 1) == [(1, 'x')]
    assert parse_combination('0', 1) == []
    assert parse_combination('', 1) == []
    with pytest.raises(ComplexFormatError, match=r'line 4: missing'):
        parse_combination('a b', 4)
    with pytest.raises(ComplexFormatError, match=r'line 2: cannot read term'):
        parse_combination('a + *', 2)


def test_load_simplicial_file(caplog) -> None:
    complex_ = load_complex(testdata('triangle.fsc'))
    assert complex_.filtration_start == 1
    assert complex_.rank(0) == 3
    assert complex_.rank(2) == 1
    assert log_has_re(r'Loaded FilteredChainComplex\(ranks=.*triangle\.fsc', caplog)


def test_load_simplicial_with_start_zero() -> None:
    complex_ = load_complex(testdata('interval.fsc'), filtration_start=0)
    assert complex_.filtration_start == 0
    assert complex_.max_filtration == 2


def test_load_chain_file() -> None:
    complex_ = load_complex(testdata('collapse.fcc'))
    assert complex_.filtration_start == 1
    assert complex_.basis(0) == ['a']
    assert list(complex_.differential(2)[:, 0]) == [0, 1]
    overridden = load_complex(testdata('collapse.fcc'), filtration_start=0)
    assert overridden.filtration_start == 0


def test_load_missing_file() -> None:
    with pytest.raises(OperationalException, match=r'Input file "nothing.fsc" not found'):
        load_complex('nothing.fsc')


def test_format_detection(tmpdir) -> None:
    assert is_chain_text('# comment\ngenerator a degree 0 stage 0\n')
    assert not is_chain_text('1 0\n')
    assert not is_chain_text('')
    path = tmpdir.join('complex.txt')
    path.write('start 1\ngenerator a degree 0 stage 1\n')
    assert load_complex(str(path)).basis(0) == ['a']
    path.write('1 0\n1 1\n')
    assert load_complex(str(path)).rank(0) == 2


def test_chain_file_defaults_to_start_zero() -> None:
    complex_ = parse_filtered_chain_complex('generator a degree 0 stage 0\n')
    assert complex_.filtration_start == 0
    assert DEFAULT_FILTRATION_START_CHAIN == 0
    assert parse_filtered_simplicial_complex('1 0\n').filtration_start == \
        DEFAULT_FILTRATION_START_SIMPLICIAL == 1


@pytest.mark.parametrize('text,message', [
    ('1 0\n1 x\n', r'line 2: "x" is not an integer'),
    ('1 0\n3\n', r'line 2: expected a stage'),
    ('1 1 0\n', r'line 1: vertices of <1,0> must be strictly increasing'),
    ('0 0\n', r'line 1: stage 0 lies before the filtration start 1'),
    ('1 0\n1 0\n', r'line 2: <0> already declared on line 1'),
    ('1 0\n2 0 1\n', r'line 2: face <1> of <0,1> is missing'),
    ('1 0\n3 1\n2 0 1\n', r'line 3: <0,1> enters at stage 2 before its face <1>'),
])
def test_simplicial_errors(text, message) -> None:
    with pytest.raises(ComplexFormatError, match=message):
        parse_filtered_simplicial_complex(text)


@pytest.mark.parametrize('text,message', [
    ('start 2\n', r'line 1: start must be 0 or 1'),
    ('generator a degree 0 stage 0\ngenerator a degree 1 stage 0\n',
     r'line 2: generator a declared twice'),
    ('generator a degree 0 stage 0\nd a = 0\nd a = 0\n', r'line 3: boundary of a given twice'),
    ('frobnicate\n', r'line 1: cannot parse "frobnicate"'),
    ('start 1\ngenerator a degree 0 stage 0\n', r'line 2: generator a has stage 0 below'),
    ('generator a degree 0 stage 0\nd b = a\n', r'line 2: unknown generator b'),
    ('generator a degree 1 stage 0\nd a = c\n', r'line 2: unknown generator c'),
    ('generator a degree 0 stage 0\ngenerator b degree 2 stage 0\nd b = a\n',
     r'line 3: a has degree 0, the boundary of b needs degree 1'),
    ('generator a degree 0 stage 2\ngenerator b degree 1 stage 1\nd b = a\n',
     r'line 3: filtration violated'),
    ('generator a degree 0 stage 0\ngenerator b degree 1 stage 0\n'
     'generator c degree 2 stage 0\nd b = a\nd c = b\n', r'line 5: d∘d is not zero on c'),
])
def test_chain_errors(text, message) -> None:
    with pytest.raises(ComplexFormatError, match=message):
        parse_filtered_chain_complex(text)


def test_error_carries_line_number() -> None:
    with pytest.raises(ComplexFormatError) as excinfo:
        parse_filtered_chain_complex('# header\n\nfrobnicate\n')
    assert excinfo.value.line == 3
