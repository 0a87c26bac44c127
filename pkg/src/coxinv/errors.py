"""Exception types shared across the package."""


class CoxinvError(Exception):
    """Base class for all package errors."""


class InvalidClassification(CoxinvError):
    """Type/rank pair is not a valid classification entry."""


class ZeroVector(CoxinvError):
    """A nonzero vector was required."""


class SingularGram(CoxinvError):
    """Simple roots are linearly dependent; weight system unsolvable."""


class SingularMatrix(CoxinvError):
    """Exact linear solve hit a singular matrix."""


class NotCrystallographic(CoxinvError):
    """Operation requires a crystallographic root system."""


class NotFinite(CoxinvError):
    """Operation requires a finite group."""


class NotReflections(CoxinvError):
    """A generator is not an involutive linear reflection."""


class IndependenceFailure(CoxinvError):
    """Degree search exhausted without an algebraically independent system."""


class WeightNotInLattice(CoxinvError):
    """Vector is not an element of the weight lattice."""


class InvolutionNotFound(CoxinvError):
    """No index involution matches the folded negated weights (root-data bug)."""


class BadIndexTuple(CoxinvError):
    """Form index tuple is not strictly increasing or out of range."""


class EnumerationCapExceeded(CoxinvError):
    """Group order or orbit radius exceeds the configured enumeration budget."""
