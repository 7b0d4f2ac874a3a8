"""
Reader for equivalence files: three chain-complex blocks and six map blocks.

    [complex C] / [complex D] / [complex EC]   chain-complex text
    [map f1] ... [map h2]                      "<source> = <combination of targets>"

Directions: f1 D->C, g1 C->D, h1 D->D (+1), f2 D->EC, g2 EC->D, h2 D->D (+1).
"""
import logging
import re
from typing import Dict, List, Tuple

from zhomology import ComplexFormatError
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.data.complex_files import parse_combination, parse_filtered_chain_complex, read_text
from zhomology.linalg.matrix import IntMatrix, zeros
from zhomology.transfer.equivalence import Equivalence
from zhomology.transfer.reduction import Reduction

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r'^\[\s*(complex|map)\s+(\w+)\s*\]$')
MAP_LINE_RE = re.compile(r"^([A-Za-z_][\w.']*)\s*=\s*(.*)$")

COMPLEX_BLOCKS = ('C', 'D', 'EC')
# name -> (source complex, target complex, degree shift)
MAP_BLOCKS = {
    'f1': ('D', 'C', 0),
    'g1': ('C', 'D', 0),
    'h1': ('D', 'D', 1),
    'f2': ('D', 'EC', 0),
    'g2': ('EC', 'D', 0),
    'h2': ('D', 'D', 1),
}


def _split_blocks(text: str) -> Dict[Tuple[str, str], List[Tuple[int, str]]]:
    blocks: Dict[Tuple[str, str], List[Tuple[int, str]]] = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        match = HEADER_RE.match(line)
        if match:
            current = (match.group(1), match.group(2))
            valid = COMPLEX_BLOCKS if current[0] == 'complex' else tuple(MAP_BLOCKS)
            if current[1] not in valid:
                raise ComplexFormatError(number, f'unknown block [{current[0]} {current[1]}]')
            if current in blocks:
                raise ComplexFormatError(number, f'block [{current[0]} {current[1]}] repeated')
            blocks[current] = []
            continue
        if current is None:
            raise ComplexFormatError(number, 'content before the first block header')
        blocks[current].append((number, raw))
    return blocks


def _block_text(lines: List[Tuple[int, str]]) -> str:
    """
    Block content padded with empty lines so parser line numbers stay file-global.
    """
    if not lines:
        return ''
    last = lines[-1][0]
    padded = [''] * last
    for number, raw in lines:
        padded[number - 1] = raw
    return '\n'.join(padded)


def _parse_map(lines: List[Tuple[int, str]], source: FilteredChainComplex,
               target: FilteredChainComplex, shift: int, name: str) -> Dict[int, IntMatrix]:
    maps = {n: zeros(target.rank(n + shift), source.rank(n)) for n in source.degrees}
    seen = set()
    for number, raw in lines:
        line = raw.split('#', 1)[0].strip()
        match = MAP_LINE_RE.match(line)
        if not match:
            raise ComplexFormatError(number, f'cannot parse map line "{line}"')
        generator = match.group(1)
        try:
            degree, column = source.generator_index(generator)
        except KeyError:
            raise ComplexFormatError(number, f'{name}: unknown source generator {generator}')
        if generator in seen:
            raise ComplexFormatError(number, f'{name}: image of {generator} given twice')
        seen.add(generator)
        for coef, target_name in parse_combination(match.group(2), number):
            try:
                target_degree, row = target.generator_index(target_name)
            except KeyError:
                raise ComplexFormatError(number, f'{name}: unknown target generator {target_name}')
            if target_degree != degree + shift:
                raise ComplexFormatError(
                    number, f'{name}: {target_name} has degree {target_degree}, '
                            f'expected {degree + shift}')
            maps[degree][row, column] += coef
    return maps


def parse_equivalence(text: str) -> Equivalence:
    """
    Parse an equivalence file into C <= D => EC.
    :raises ComplexFormatError: with the number of the offending line
    """
    blocks = _split_blocks(text)
    complexes: Dict[str, FilteredChainComplex] = {}
    for name in COMPLEX_BLOCKS:
        if ('complex', name) not in blocks:
            raise ComplexFormatError(1, f'missing block [complex {name}]')
        complexes[name] = parse_filtered_chain_complex(_block_text(blocks[('complex', name)]))

    maps = {}
    for name, (source, target, shift) in MAP_BLOCKS.items():
        lines = blocks.get(('map', name), [])
        maps[name] = _parse_map(lines, complexes[source], complexes[target], shift, name)

    top = complexes['D']
    left = Reduction(top, complexes['C'], maps['f1'], maps['g1'], maps['h1'])
    right = Reduction(top, complexes['EC'], maps['f2'], maps['g2'], maps['h2'])
    logger.debug('Parsed equivalence with top %s', top)
    return Equivalence(left, right)


def load_equivalence(path: str) -> Equivalence:
    equivalence = parse_equivalence(read_text(path))
    logger.info('Loaded equivalence from "%s"', path)
    return equivalence
