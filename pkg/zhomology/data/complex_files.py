"""
Readers for the two complex file formats.

Simplicial files hold one simplex per line, "<stage> <v0> <v1> ... <vk>".
Chain files hold an optional "start <0|1>" line, "generator <name> degree <n> stage <p>"
lines and "d <name> = <c1>*<g1> + ..." lines. '#' starts a comment in both.
"""
import logging
import re
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from zhomology import ComplexFormatError, OperationalException
from zhomology.constants import (DEFAULT_FILTRATION_START_CHAIN,
                                 DEFAULT_FILTRATION_START_SIMPLICIAL)
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.complexes.simplicial import (FilteredSimplicialComplex, chain_complex_of,
                                            faces, simplex_name)
from zhomology.linalg.matrix import zeros

logger = logging.getLogger(__name__)

NAME = r"[A-Za-z_][\w.']*"
GENERATOR_RE = re.compile(rf'^generator\s+({NAME})\s+degree\s+(-?\d+)\s+stage\s+(-?\d+)$')
DIFFERENTIAL_RE = re.compile(rf'^d\s+({NAME})\s*=\s*(.*)$')
START_RE = re.compile(r'^start\s+(\S+)$')
TERM_RE = re.compile(rf'\s*(?P<op>[+-])?\s*(?:(?P<coef>-?\d+)\s*\*\s*)?(?P<name>{NAME})\s*')

SIMPLICIAL_SUFFIXES = ('.fsc', '.simplicial')
CHAIN_SUFFIXES = ('.fcc', '.chain')


def _records(text: str) -> List[Tuple[int, str]]:
    """
    Non-empty lines with comments stripped, paired with their 1-based line number.
    """
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            result.append((number, line))
    return result


def parse_combination(text: str, line: int) -> List[Tuple[int, str]]:
    """
    Parse "2*a - b + -1*c" into [(2, 'a'), (-1, 'b'), (-1, 'c')]; "0" is the empty sum.
    """
    text = text.strip()
    if text in ('', '0'):
        return []
    terms = []
    pos = 0
    while pos < len(text):
        match = TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ComplexFormatError(line, f'cannot read term at "{text[pos:]}"')
        if terms and match.group('op') is None:
            raise ComplexFormatError(line, f'missing "+" or "-" before "{match.group("name")}"')
        coef = int(match.group('coef')) if match.group('coef') is not None else 1
        if match.group('op') == '-':
            coef = -coef
        terms.append((coef, match.group('name')))
        pos = match.end()
    return terms


def parse_filtered_simplicial_complex(
        text: str, filtration_start: int = DEFAULT_FILTRATION_START_SIMPLICIAL,
) -> FilteredSimplicialComplex:
    """
    Parse a simplicial file. Faces are never added implicitly.
    :raises ComplexFormatError: with the number of the offending line
    """
    simplices: Dict[Tuple[int, ...], int] = {}
    lines: Dict[Tuple[int, ...], int] = {}
    for number, line in _records(text):
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            bad = next(t for t in tokens if not re.match(r'^-?\d+$', t))
            raise ComplexFormatError(number, f'"{bad}" is not an integer')
        if len(values) < 2:
            raise ComplexFormatError(number, 'expected a stage followed by at least one vertex')
        stage, simplex = values[0], tuple(values[1:])
        if any(a >= b for a, b in zip(simplex, simplex[1:])):
            raise ComplexFormatError(
                number, f'vertices of {simplex_name(simplex)} must be strictly increasing')
        if stage < filtration_start:
            raise ComplexFormatError(
                number, f'stage {stage} lies before the filtration start {filtration_start}')
        if simplex in simplices:
            raise ComplexFormatError(
                number, f'{simplex_name(simplex)} already declared on line {lines[simplex]}')
        simplices[simplex] = stage
        lines[simplex] = number

    for simplex, stage in simplices.items():
        for face in faces(simplex):
            if face not in simplices:
                raise ComplexFormatError(
                    lines[simplex], f'face {simplex_name(face)} of {simplex_name(simplex)} '
                                    'is missing')
            if simplices[face] > stage:
                raise ComplexFormatError(
                    lines[simplex], f'{simplex_name(simplex)} enters at stage {stage} before '
                                    f'its face {simplex_name(face)} (stage {simplices[face]})')
    logger.debug('Parsed %s simplices', len(simplices))
    return FilteredSimplicialComplex(simplices, filtration_start=filtration_start)


def parse_filtered_chain_complex(text: str,
                                 filtration_start: Optional[int] = None) -> FilteredChainComplex:
    """
    Parse a chain file. Generators without a "d" line are cycles.
    Checks d∘d = 0 and filtration compatibility while reading.
    :raises ComplexFormatError: with the number of the offending line
    """
    start: Optional[int] = None
    generators: Dict[str, Tuple[int, int, int]] = {}  # name -> (degree, stage, line)
    boundaries: Dict[str, Tuple[List[Tuple[int, str]], int]] = {}

    for number, line in _records(text):
        match = START_RE.match(line)
        if match:
            if match.group(1) not in ('0', '1'):
                raise ComplexFormatError(number, 'start must be 0 or 1')
            start = int(match.group(1))
            continue
        match = GENERATOR_RE.match(line)
        if match:
            name = match.group(1)
            if name in generators:
                raise ComplexFormatError(number, f'generator {name} declared twice')
            generators[name] = (int(match.group(2)), int(match.group(3)), number)
            continue
        match = DIFFERENTIAL_RE.match(line)
        if match:
            name = match.group(1)
            if name in boundaries:
                raise ComplexFormatError(number, f'boundary of {name} given twice')
            boundaries[name] = (parse_combination(match.group(2), number), number)
            continue
        raise ComplexFormatError(number, f'cannot parse "{line}"')

    if filtration_start is not None:
        start = filtration_start
    if start is None:
        start = DEFAULT_FILTRATION_START_CHAIN

    for name, (degree, stage, number) in generators.items():
        if stage < start:
            raise ComplexFormatError(
                number, f'generator {name} has stage {stage} below the filtration start {start}')

    # boundary as a sparse dict, checked term by term
    sparse: Dict[str, Dict[str, int]] = {}
    for name, (terms, number) in boundaries.items():
        if name not in generators:
            raise ComplexFormatError(number, f'unknown generator {name}')
        degree, stage, _ = generators[name]
        combination: Dict[str, int] = {}
        for coef, target in terms:
            if target not in generators:
                raise ComplexFormatError(number, f'unknown generator {target}')
            if generators[target][0] != degree - 1:
                raise ComplexFormatError(
                    number, f'{target} has degree {generators[target][0]}, '
                            f'the boundary of {name} needs degree {degree - 1}')
            if generators[target][1] > stage:
                raise ComplexFormatError(
                    number, f'filtration violated: {target} (stage {generators[target][1]}) '
                            f'appears in the boundary of {name} (stage {stage})')
            combination[target] = combination.get(target, 0) + coef
        sparse[name] = {k: v for k, v in combination.items() if v}

    for name, combination in sparse.items():
        twice: Dict[str, int] = {}
        for target, coef in combination.items():
            for inner, inner_coef in sparse.get(target, {}).items():
                twice[inner] = twice.get(inner, 0) + coef * inner_coef
        if any(twice.values()):
            raise ComplexFormatError(boundaries[name][1], f'd∘d is not zero on {name}')

    basis: Dict[int, List[str]] = {}
    stages: Dict[int, List[int]] = {}
    for name, (degree, stage, _) in generators.items():
        basis.setdefault(degree, []).append(name)
        stages.setdefault(degree, []).append(stage)
    differentials = {}
    for degree, names in basis.items():
        targets = basis.get(degree - 1, [])
        position = {t: idx for idx, t in enumerate(targets)}
        mat = zeros(len(targets), len(names))
        for j, name in enumerate(names):
            for target, coef in sparse.get(name, {}).items():
                mat[position[target], j] = coef
        differentials[degree] = mat
    logger.debug('Parsed %s generators in degrees %s', len(generators), sorted(basis))
    return FilteredChainComplex(basis, differentials, stages, filtration_start=start)


def read_text(path: str) -> str:
    """
    Read a UTF-8 input file; '-' reads stdin.
    :raises OperationalException: the file does not exist
    """
    try:
        with open(path, encoding='utf-8') if path != '-' else sys.stdin as file:
            return file.read()
    except FileNotFoundError:
        raise OperationalException(f'Input file "{path}" not found!')


def is_chain_text(text: str) -> bool:
    for _, line in _records(text):
        return line.split()[0] in ('generator', 'start', 'd')
    return False


def load_complex(path: str, filtration_start: Optional[int] = None) -> FilteredChainComplex:
    """
    Load a filtered chain complex from a simplicial or chain file.
    The format follows the suffix (.fsc / .fcc), else the first record.
    :param path: file path, or '-' for stdin
    :param filtration_start: overrides the format's default start stage
    """
    text = read_text(path)
    suffix = Path(path).suffix.lower()
    if suffix in SIMPLICIAL_SUFFIXES:
        chain_format = False
    elif suffix in CHAIN_SUFFIXES:
        chain_format = True
    else:
        chain_format = is_chain_text(text)
    if chain_format:
        complex_ = parse_filtered_chain_complex(text, filtration_start)
    else:
        start = (DEFAULT_FILTRATION_START_SIMPLICIAL if filtration_start is None
                 else filtration_start)
        complex_ = chain_complex_of(parse_filtered_simplicial_complex(text, start))
    logger.info('Loaded %s from "%s"', complex_, path)
    return complex_
