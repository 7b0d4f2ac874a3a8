# pragma pylint: disable=too-few-public-methods

"""
Enumerations shared across the packages
"""
from enum import Enum


class QueryKind(Enum):
    """
    Persistent homology group families: BD^{i,k}, H^{i,j} and H^{i,j,k}.
    """
    BD = "bd"
    TOTAL = "total"
    TRIPLE = "triple"


class BarcodeMode(Enum):
    """
    Barcode variants: one bar per filtration jump, or one bar per cyclic
    BD summand with extension links.
    """
    STAGEWISE = "stagewise"
    ALTERNATIVE = "alternative"


class TransferStatus(Enum):
    """
    Outcome of comparing a group on both ends of an equivalence.
    """
    MATCH = "match"
    MISMATCH_OUTSIDE_RANGE = "outside theorem range"
    VIOLATION = "violation"
