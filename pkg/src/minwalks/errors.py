"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

# Largest coefficient / counter value accepted before an overflow is reported.
MAX_NATURAL = 2**64 - 1


class MinwalksError(Exception):
    """Base class; ``kind`` is the machine-readable tag printed by the CLI."""

    kind = "error"


class DomainError(MinwalksError, ValueError):
    """A precondition of an operation does not hold."""

    kind = "domain"


class OrdinalSyntaxError(MinwalksError, ValueError):
    kind = "syntax"

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class NaturalOverflowError(MinwalksError, OverflowError):
    kind = "overflow"


class ResourceLimitError(MinwalksError, RuntimeError):
    """A configured guard (step count, member count, stage count) was exceeded."""

    kind = "resource"


class CertificateViolation(MinwalksError, RuntimeError):
    """A coloring fiber exceeded its recorded bound. Always an implementation bug."""

    kind = "certificate"


def check_natural(value: int, what: str = "natural") -> int:
    if value < 0:
        raise DomainError(f"{what} must be non-negative, got {value}")
    if value > MAX_NATURAL:
        raise NaturalOverflowError(f"{what} {value} exceeds {MAX_NATURAL}")
    return value
