"""Exception hierarchy shared by every mtkit module."""

from __future__ import annotations


class MTKitError(Exception):
    """Base class for all library errors."""


class ValidationError(MTKitError):
    """Input does not describe the structure it claims to be."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotATopology(ValidationError):
    pass


class NotAPoset(ValidationError):
    pass


class NotALattice(ValidationError):
    pass


class NotDistributive(ValidationError):
    pass


class NotAFrameHom(ValidationError):
    pass


class NotContinuous(ValidationError):
    pass


class NotOpen(ValidationError):
    pass


class NotClosed(ValidationError):
    pass


class NotNormal(ValidationError):
    pass


class NotRatherBelow(ValidationError):
    pass


class PreconditionViolated(ValidationError):
    pass


class BoundExceeded(ValidationError):
    pass


class SchemaError(MTKitError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class InvariantViolation(AssertionError):
    """A property that must hold by construction failed; always a bug."""


def ensure(condition: bool, message: str) -> None:
    # Unlike `assert`, survives `python -O`.
    if not condition:
        raise InvariantViolation(message)
