""" Integer persistent homology and spectral sequences """
__version__ = '2019.10-dev'


class OperationalException(Exception):
    """
    Requires manual intervention and stops the current command.
    This happens when an input file is missing, a flag combination is not supported
    or the given configuration is invalid.
    """


class DomainError(Exception):
    """
    Base class of every mathematical failure on valid input syntax.
    The command line reports these with exit status 1.
    """


class LatticeMismatchError(DomainError):
    """
    Two lattices (or a lattice and a chain) live in free modules of different rank.
    """


class ContainmentError(DomainError):
    """
    A quotient was requested whose denominator is not contained in its numerator.
    """


class StageOrderError(DomainError):
    """
    Stage indices of a persistence query are not ordered as i <= j <= k.
    """


class ShapeMismatchError(DomainError):
    """
    Matrices passed in do not have the shapes the bases of the complexes demand.
    """


class InvalidComplexError(DomainError):
    """
    A complex violates face closure, face monotonicity, d∘d = 0 or
    filtration compatibility.
    """


class ComplexFormatError(InvalidComplexError):
    """
    A complex or equivalence file could not be parsed.
    Carries the 1-based line number of the offending record.
    """

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f'line {line}: {message}')


class UnverifiedEquivalenceError(DomainError):
    """
    A transfer was attempted over a reduction that does not satisfy the reduction identities.
    """


class NotACycleError(DomainError):
    """
    A chain handed over as a homology generator has a nonzero boundary.
    """


class FieldError(DomainError):
    """
    The requested coefficient field is neither Q nor a prime field.
    """


class InvariantViolation(AssertionError):
    """
    An internal consistency check failed. This is a bug, never a user error.
    """
