from zhomology.persistence.groups import (PersistenceQuery, PersistentGroup,  # noqa: F401
                                          bd_group, total_prst_group, triple_prst_group,
                                          stage_homology, homology, compute,
                                          persistent_generators)
from zhomology.persistence.oracle import oracle_persistence  # noqa: F401
from zhomology.persistence.field import (FieldBettiTable, field_betti,  # noqa: F401
                                         mu_counts, field_barcode)
