# pragma pylint: disable=missing-docstring
import logging
import re
from functools import lru_cache, reduce
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.complexes.simplicial import FilteredSimplicialComplex, chain_complex_of
from zhomology.configuration import Arguments
from zhomology.data.complex_files import load_complex
from zhomology.linalg.matrix import identity, matmul, zeros
from zhomology.transfer.equivalence import AcyclicPair, Equivalence, acyclic_extension
from zhomology.transfer.reduction import Reduction


logging.getLogger('').setLevel(logging.INFO)

TESTDATA = Path(__file__).parent / 'testdata'


def log_has(line, logs):
    # caplog mocker returns log as a tuple: ('zhomology.something', logging.WARNING, 'foobar')
    # and we want to match line against foobar in the tuple
    return reduce(lambda a, b: a or b,
                  filter(lambda x: x[2] == line, logs.record_tuples),
                  False)


def log_has_re(line, logs):
    return reduce(lambda a, b: a or b,
                  filter(lambda x: re.match(line, x[2]), logs.record_tuples),
                  False)


def get_args(args):
    return Arguments(args, '').get_parsed_arg()


def patched_configuration_load_config_file(mocker, config) -> None:
    mocker.patch(
        'zhomology.configuration.configuration.load_config_file',
        lambda *args, **kwargs: config
    )


def testdata(name: str) -> str:
    return str(TESTDATA / name)


testdata.__test__ = False  # helper, not a test; keep pytest from collecting it


def closure(top_simplices, stage):
    simplices = {}
    for simplex in top_simplices:
        for size in range(1, len(simplex) + 1):
            for face in combinations(sorted(simplex), size):
                simplices.setdefault(face, stage(face))
    return simplices


def grid_surface(twisted: bool) -> FilteredSimplicialComplex:
    """
    3x3 grid of squares, two triangles per square. Opposite sides are glued
    straight (torus) or the last row flipped (Klein bottle).
    Stages: vertices 1, edges 2, triangles 3.
    """
    def vertex(i, j):
        return 3 * (i % 3) + (j % 3)

    triangles = []
    for i in range(3):
        for j in range(3):
            a, b = vertex(i, j), vertex(i, j + 1)
            if twisted and i == 2:
                c, d = vertex(0, -j), vertex(0, -j - 1)
            else:
                c, d = vertex(i + 1, j), vertex(i + 1, j + 1)
            triangles.append(tuple(sorted((a, c, d))))
            triangles.append(tuple(sorted((a, b, d))))
    return FilteredSimplicialComplex(closure(triangles, len), filtration_start=1)


def random_simplicial(seed: int, vertices: int = 5, top: int = 6,
                      stages: int = 5) -> FilteredSimplicialComplex:
    """
    Seeded random filtered complex: random triangles and edges, each face entering no
    later than its cofaces.
    """
    rng = np.random.default_rng(seed)
    candidates = list(combinations(range(vertices), 3)) + list(combinations(range(vertices), 2))
    chosen = [candidates[idx] for idx in rng.choice(len(candidates), size=top, replace=False)]
    entry = {}
    for simplex in sorted(chosen, key=len, reverse=True):
        entry[simplex] = int(rng.integers(1, stages + 1))
    simplices = {}
    for simplex in chosen:
        for size in range(1, len(simplex) + 1):
            for face in combinations(simplex, size):
                stage = min(entry.get(face, stages), entry[simplex])
                simplices[face] = min(simplices.get(face, stage), stage)
    for simplex in list(simplices):
        if len(simplex) == 1 and simplex not in entry:
            simplices[simplex] = max(1, simplices[simplex] - int(rng.integers(0, 2)))
    return FilteredSimplicialComplex(simplices, filtration_start=1)


TORSION_STAGES = 4


def filtered_change_of_basis(rng, stages, moves):
    """
    Random unimodular P with P^-1, both mapping every C^p onto itself: column j of P is
    e_j plus multiples of generators entering no later than e_j.
    """
    size = len(stages)
    forward, backward = identity(size), identity(size)
    pairs = [(i, j) for i in range(size) for j in range(size)
             if i != j and stages[i] <= stages[j]]
    for _ in range(moves if pairs else 0):
        i, j = pairs[int(rng.integers(len(pairs)))]
        factor = int(rng.choice([-2, -1, 1, 2]))
        forward[:, j] += factor * forward[:, i]
        backward[i, :] -= factor * backward[j, :]
    return forward, backward


@lru_cache(maxsize=None)
def torsion_complex(seed: int, stages: int = TORSION_STAGES,
                    coefficient: int = 3, moves: int = 6) -> FilteredChainComplex:
    """
    Seeded random filtered chain complex in degrees 0..2 with torsion and extensions.
    Degrees 0 and 1 start with cycle generators. The other generators of degrees 1 and 2
    bound random combinations of the cycles one degree down entering no later than
    themselves. Every degree is then rewritten by filtered_change_of_basis.
    At most 6 generators per degree.
    """
    rng = np.random.default_rng(seed)
    cycles = {0: int(rng.integers(1, 4)), 1: int(rng.integers(1, 4)), 2: 0}
    bounding = {0: 0, 1: int(rng.integers(1, 4)), 2: int(rng.integers(1, 4))}
    stages_of = {n: [int(rng.integers(1, stages + 1)) for _ in range(cycles[n] + bounding[n])]
                 for n in range(3)}

    differentials = {}
    for n in (1, 2):
        mat = zeros(len(stages_of[n - 1]), len(stages_of[n]))
        for col in range(cycles[n], len(stages_of[n])):
            for row in range(cycles[n - 1]):
                if stages_of[n - 1][row] <= stages_of[n][col]:
                    mat[row, col] = int(rng.integers(-coefficient, coefficient + 1))
        differentials[n] = mat

    changes = {n: filtered_change_of_basis(rng, stages_of[n], moves) for n in range(3)}
    for n in (1, 2):
        differentials[n] = matmul(changes[n - 1][1], matmul(differentials[n], changes[n][0]))

    basis = {n: [f'g{n}_{idx}' for idx in range(len(stages_of[n]))] for n in range(3)}
    return FilteredChainComplex(basis, differentials, stages_of, filtration_start=1)


def torsion_blocks(count: int, blocks: int = 10):
    """
    Seeds 0..count-1 cut into blocks, one parametrized test per block.
    """
    size = count // blocks
    return [range(block * size, (block + 1) * size) for block in range(blocks)]


@pytest.fixture(scope='function')
def triangle():
    return load_complex(testdata('triangle.fsc'))


@pytest.fixture(scope='function')
def interval():
    return load_complex(testdata('interval.fsc'))


@pytest.fixture(scope='function')
def collapse():
    return load_complex(testdata('collapse.fcc'))


@pytest.fixture(scope='function')
def extension():
    return load_complex(testdata('extension.fcc'))


@pytest.fixture(scope='function')
def staircase():
    return load_complex(testdata('staircase.fcc'))


@pytest.fixture(scope='module')
def torus():
    return chain_complex_of(grid_surface(twisted=False))


@pytest.fixture(scope='module')
def klein():
    return chain_complex_of(grid_surface(twisted=True))


@pytest.fixture(scope='function')
def empty_complex():
    return FilteredChainComplex({}, filtration_start=1)


@pytest.fixture(params=[11, 23, 42, 97])
def random_complex(request):
    return chain_complex_of(random_simplicial(request.param))


@pytest.fixture(scope='function')
def shifted_equivalence(triangle):
    """
    triangle <= D => D, D adjoining an acyclic pair with h raising the filtration by 2.
    """
    pairs = [AcyclicPair(n=0, x_stage=3, y_stage=5, x_name='x', y_name='y')]
    top, reduction = acyclic_extension(triangle, pairs)
    return Equivalence(reduction, Reduction.identity(top))
