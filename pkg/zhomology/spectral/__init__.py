from zhomology.spectral.pages import (PageGroupId, PageGroup, PageDifferential,  # noqa: F401
                                      InequalityReport, spsq_group, spsq_differential,
                                      image_group, page_homology, limit_level,
                                      convergence_level, check_inequality)
