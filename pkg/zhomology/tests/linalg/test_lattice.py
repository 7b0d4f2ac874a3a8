# pragma pylint: disable=missing-docstring, C0103
import numpy as np
import pytest

from zhomology import LatticeMismatchError, ShapeMismatchError
from zhomology.linalg.lattice import (Lattice, coordinate_lattice, embed, image_lattice,
                                      kernel_lattice, lattice_intersection, lattice_sum)
from zhomology.linalg.matrix import int_matrix, matmul, is_zero


def contains_lattice(outer, inner):
    return all(column in outer for column in inner.columns())


def test_lattice_membership() -> None:
    evens = Lattice(1, int_matrix([[2]]))
    assert [4] in evens
    assert [-2] in evens
    assert [3] not in evens
    assert evens.coefficients([6]) == [3]
    with pytest.raises(LatticeMismatchError, match=r'lives in rank 1'):
        evens.coefficients([1, 2])


def test_lattice_equality_is_representation_equality() -> None:
    left = image_lattice(int_matrix([[2, 0], [0, 2]]))
    right = image_lattice(int_matrix([[2, 2, 4], [2, 0, 2]]))
    assert left == right
    assert hash(left) == hash(right)
    assert left != Lattice.full(2)
    assert Lattice.zero(2).rank == 0
    assert Lattice.full(3).rank == 3


def test_lattice_wrong_generator_shape() -> None:
    with pytest.raises(ShapeMismatchError, match=r'ambient rank 3'):
        Lattice(3, int_matrix([[1], [0]]))


def test_kernel_lattice_is_saturated() -> None:
    mat = int_matrix([[2, 4]])
    kernel = kernel_lattice(mat)
    assert kernel.rank == 1
    assert [2, -1] in kernel or [-2, 1] in kernel
    assert is_zero(matmul(mat, kernel.generators))


def test_kernel_of_zero_and_full_rank() -> None:
    assert kernel_lattice(int_matrix([[0, 0]])) == Lattice.full(2)
    assert kernel_lattice(int_matrix([[1, 0], [0, 3]])) == Lattice.zero(2)


def test_lattice_sum_and_intersection() -> None:
    twos = image_lattice(int_matrix([[2]]))
    threes = image_lattice(int_matrix([[3]]))
    assert lattice_sum(twos, threes) == Lattice.full(1)
    assert lattice_intersection(twos, threes) == image_lattice(int_matrix([[6]]))
    assert lattice_intersection(twos, Lattice.zero(1)) == Lattice.zero(1)
    assert lattice_sum(Lattice.zero(1), threes) == threes


def test_lattice_intersection_in_the_plane() -> None:
    diagonal = image_lattice(int_matrix([[1], [1]]))
    grid = image_lattice(int_matrix([[2, 0], [0, 4]]))
    assert lattice_intersection(diagonal, grid) == image_lattice(int_matrix([[4], [4]]))


def test_ambient_mismatch() -> None:
    with pytest.raises(LatticeMismatchError):
        lattice_sum(Lattice.full(1), Lattice.full(2))
    with pytest.raises(LatticeMismatchError):
        lattice_intersection(Lattice.full(1), Lattice.full(2))


def test_containment_of_lattices() -> None:
    assert contains_lattice(Lattice.full(2), image_lattice(int_matrix([[3], [5]])))
    assert not contains_lattice(image_lattice(int_matrix([[2, 0], [0, 2]])), Lattice.full(2))


def test_embed_and_coordinates() -> None:
    evens = Lattice(1, int_matrix([[2]]))
    placed = embed(evens, [1], 3)
    assert placed.ambient_rank == 3
    assert [0, 4, 0] in placed
    assert [4, 0, 0] not in placed
    assert coordinate_lattice([0, 2], 3) == image_lattice(int_matrix([[1, 0], [0, 0], [0, 1]]))
    with pytest.raises(LatticeMismatchError, match=r'along 2 positions'):
        embed(evens, [0, 1], 3)


def random_lattice(rng, ambient=4):
    cols = int(rng.integers(1, 4))
    return image_lattice(int_matrix(rng.integers(-4, 5, size=(ambient, cols)).tolist()))


@pytest.mark.parametrize('seed', range(20))
def test_sum_and_intersection_are_modular(seed) -> None:
    rng = np.random.default_rng(seed)
    s, t, u = random_lattice(rng), random_lattice(rng), random_lattice(rng)
    assert lattice_sum(s, lattice_intersection(s, t)) == s
    assert lattice_intersection(s, lattice_sum(s, t)) == s
    assert lattice_sum(s, t) == lattice_sum(t, s)
    assert lattice_intersection(s, t) == lattice_intersection(t, s)
    # s <= outer gives outer ∩ (s + t) = s + (outer ∩ t)
    outer = lattice_sum(s, u)
    assert contains_lattice(outer, s)
    assert (lattice_intersection(outer, lattice_sum(s, t))
            == lattice_sum(s, lattice_intersection(outer, t)))
