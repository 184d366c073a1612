"""Exception hierarchy shared by all modules."""


class LrbError(Exception):
    """Base class for all library errors."""


class ShapeMismatch(LrbError):
    """Tensor or matrix dimensions are inconsistent."""


class ContainmentViolated(LrbError):
    """Coboundary space is not contained in the cocycle space."""


class OracleDisagreement(LrbError):
    """Two independent computation routes returned different results.

    This signals an internal bug, never a user error.
    """


class InvalidInput(LrbError):
    """A structure failed its validation precondition."""


class InvalidOperator(InvalidInput):
    """An operator failed the weighted Rota-Baxter identity."""


class InvalidDeformation(InvalidInput):
    """A deformation failed the deformation equations."""


class StructureIncompatible(LrbError):
    """The canonical degree-1 elements do not square/commute to zero."""


class BaseMismatch(LrbError):
    """Deformation coefficient list does not start with the base operator."""


class NotInvertible(LrbError):
    """A linear map required to be invertible is singular."""


class NotAdjointContext(LrbError):
    """Operation requires a non-relative (adjoint) operator context."""


class CharacteristicTwo(LrbError):
    """Operation needs division by 2, unavailable over GF(2)."""


class WrongField(LrbError):
    """Operation requires a different scalar field (e.g. enumeration over GF(p))."""


class WrongWeight(LrbError):
    """Operation is only defined for a specific weight."""


class ResourceLimit(LrbError):
    """A configured enumeration or dimension cap would be exceeded."""


class ManifestError(LrbError):
    """Manifest text failed to parse or resolve."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
