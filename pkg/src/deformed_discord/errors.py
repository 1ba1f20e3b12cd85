"""Exception hierarchy shared by all modules."""


class DeformedDiscordError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DeformedDiscordError, ValueError):
    """Input outside the region where a quantity is defined."""


class OutOfDomain(DomainError):
    pass


class DivergentSeries(DomainError):
    pass


class TruncationTooSmall(DeformedDiscordError):
    """Fock cutoff too small to keep the neglected tail under tolerance."""


class DegenerateBasis(DomainError):
    """Cat basis undefined because |alpha> and |-alpha> coincide."""


class FormulaDomainError(DomainError):
    """A printed closed form produced a negative radicand."""


class NotHermitian(DeformedDiscordError, ValueError):
    pass


class UnsupportedStructure(DeformedDiscordError, ValueError):
    """Matrix lacks the X-shape required by a structured algorithm."""


class NonConvergence(DeformedDiscordError, RuntimeError):
    pass
