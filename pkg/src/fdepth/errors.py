"""Exception types shared across the package."""


class FDepthError(Exception):
    """Base class for all package-specific errors."""


class ZeroInverse(FDepthError):
    """Inversion of the zero residue mod p."""


class DimensionMismatch(FDepthError):
    """Objects from rings with different variable counts were combined."""


class UnitIdeal(FDepthError):
    """Operation undefined for the unit ideal."""


class NotMonomial(FDepthError):
    """A monomial ideal was required."""


class NotSquarefree(FDepthError):
    """A squarefree monomial ideal was required."""


class ZeroDimensional(FDepthError):
    """The punctured-spectrum check needs dim R/I >= 1."""


class NotHomogeneous(FDepthError):
    """A homogeneous ideal/complex was required."""


class LiftFailed(FDepthError):
    """A chain-map lift did not exist.  The lift always exists for exact
    targets, so this signals an internal bug, not bad input."""


class ResourceExhausted(FDepthError):
    """A Groebner computation exceeded its pair-reduction cap."""


class CappedChain(FDepthError):
    """A kernel chain hit max_e without stabilizing; the verdict is Unknown."""

    def __init__(self, j, max_e):
        super().__init__(f"kernel chain at j={j} not stabilized within max_e={max_e}")
        self.j = j
        self.max_e = max_e


class ParseError(FDepthError):
    """Malformed polynomial or ideal-file input."""
