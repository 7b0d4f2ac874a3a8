from zhomology.transfer.reduction import (Reduction, Violation,  # noqa: F401
                                           ReductionReport, HomotopyOrder, verify_reduction,
                                           filtered_map_ok, homotopy_order, compose_reductions)
from zhomology.transfer.equivalence import (Equivalence, SpectralQuery,  # noqa: F401
                                             TransferReport, AcyclicPair, transfer_check,
                                             transfer_generators, acyclic_extension)
