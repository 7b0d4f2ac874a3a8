from zhomology.linalg.matrix import IntMatrix, int_matrix, smith, hermite  # noqa: F401
from zhomology.linalg.lattice import (Lattice, kernel_lattice, image_lattice,  # noqa: F401
                                      lattice_sum, lattice_intersection, lattice_contains)
from zhomology.linalg.presentation import (AbelianGroupPresentation,  # noqa: F401
                                           quotient_presentation, normalize_divisors)
from zhomology.linalg.field import check_field, field_rank  # noqa: F401
