"""Exception taxonomy shared across the package.

Every failure mode raised by library code derives from CharQuasiError so a
caller (notably the CLI) can map any library failure to a spec/usage error
without enumerating subclasses.
"""


class CharQuasiError(Exception):
    """Base class for all errors raised by this package."""


class EmptyArrangement(CharQuasiError):
    """The requested family/dimension combination has no hyperplanes."""


class InvalidChain(CharQuasiError):
    """The diagonal entries violate the divisibility chain s_t | ... | s_1."""


class InvalidParity(CharQuasiError):
    """The even-prefix/odd-tail structure of a type-D tuple is violated."""


class IndexOutOfRange(CharQuasiError, IndexError):
    """A column index set refers to columns outside 1..n."""


class TooManyColumns(CharQuasiError):
    """Full subset enumeration refused: 2^n terms would exceed the budget."""


class BudgetExceeded(CharQuasiError):
    """Point enumeration would exceed the configured budget."""


class NotIntegral(CharQuasiError):
    """Interpolation produced a non-integer coefficient."""


class NotMonic(CharQuasiError):
    """Interpolation produced a constituent that is not monic of full degree."""


class InvalidResidue(CharQuasiError):
    """A residue-class index is not a positive integer."""


class SpecMismatch(CharQuasiError):
    """A deformation tuple does not have the shape an operation requires."""
