"""Exception hierarchy shared by all modules."""


class PosetError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class CycleError(PosetError):
    """Input relation has a directed cycle, so no strict order contains it."""


class SizeError(PosetError):
    """Instance exceeds a size guard."""


class SizeMismatch(PosetError):
    """Operands live on domains of different sizes."""


class InvalidRotation(PosetError):
    """Rotation spec violates a precondition (overlap / not-downset / not-upset / not-below)."""


class NotDownset(PosetError):
    """Set expected to be a downset is not one."""


class InvalidTriple(PosetError):
    """Extension type is not an extendible triple of its induced subposet."""


class NotAnEmbedding(PosetError):
    """Map does not embed its source poset (not injective or not relation-preserving both ways)."""
