"""Exception types shared across the package."""


class SexticFormsError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatch(SexticFormsError):
    """Operands live in different coefficient domains."""


class NotDivisible(SexticFormsError):
    """An exact division has a nonzero remainder."""


class OrderTooSmall(SexticFormsError):
    """Transvectant index exceeds the order of an argument."""


class UnknownName(SexticFormsError):
    """Name not present in a registry or catalog."""


class NotUnimodular(SexticFormsError):
    """Matrix does not have determinant one."""


class OddCharacteristic(SexticFormsError):
    """An even theta characteristic was required."""


class EvenCharacteristic(SexticFormsError):
    """An odd theta characteristic was required."""


class NormalizationFailure(SexticFormsError):
    """A pinned normalization coefficient has the wrong shape."""


class WeightMismatch(SexticFormsError):
    """Expansions have incompatible weight, character or truncation."""


class SupportViolation(SexticFormsError):
    """Fourier support outside the positive semi-definite cone."""


class CharacterForm(SexticFormsError):
    """Operation undefined for forms with nontrivial character."""


class BoundarySliceError(SexticFormsError):
    """Vector coordinates fail to vanish on the boundary slice."""


class OddWeight(SexticFormsError):
    """Even weight required."""


class OddOrder(SexticFormsError):
    """Even order required."""


class ZeroAfterReduction(SexticFormsError):
    """An invariant vanished identically after reduction."""


class ParseError(SexticFormsError):
    """Malformed polynomial input; carries a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
