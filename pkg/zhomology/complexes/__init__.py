from zhomology.complexes.chain_complex import (FilteredChainComplex,  # noqa: F401
                                               almost_cycles, filtration_submodule)
from zhomology.complexes.simplicial import (FilteredSimplicialComplex,  # noqa: F401
                                            chain_complex_of)
