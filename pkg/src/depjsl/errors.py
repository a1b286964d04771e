from __future__ import annotations
"""Exception hierarchy.

Every error carries an optional ``witness``: the pair, subset, row or cycle
that shows why the input was rejected. ``exit_code`` is what the CLI returns.
"""

from typing import Any, Optional

__all__ = [
    "DepJslError",
    "DuplicateElementError",
    "CarrierMismatchError",
    "NotInCarrierError",
    "CycleError",
    "NoBottomError",
    "NoJoinError",
    "NotAMorphismError",
    "NotMonotoneError",
    "NotDepMorphismError",
    "InvalidWitnessError",
    "NotDistributiveError",
    "InvalidSubalgebraError",
    "NotBilinearError",
    "NotTightError",
    "NotSelfAdjointError",
    "AxiomViolationError",
    "NotSymmetricError",
    "FactorizationError",
    "NotReducedError",
    "KindMismatchError",
    "SizeGuardError",
    "GenerationExhaustedError",
    "ParseError",
    "UnknownSuiteError",
    "PropertyViolation",
]


class DepJslError(Exception):
    """Base class. ``exit_code`` 2 marks an input or validation error."""

    exit_code = 2

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class DuplicateElementError(DepJslError):
    pass


class CarrierMismatchError(DepJslError):
    pass


class NotInCarrierError(DepJslError):
    pass


class CycleError(DepJslError):
    """Antisymmetry violation; ``witness`` is the cycle as a list of elements."""


class NoBottomError(DepJslError):
    pass


class NoJoinError(DepJslError):
    pass


class NotAMorphismError(DepJslError):
    pass


class NotMonotoneError(DepJslError):
    pass


class NotDepMorphismError(DepJslError):
    pass


class InvalidWitnessError(DepJslError):
    pass


class NotDistributiveError(DepJslError):
    pass


class InvalidSubalgebraError(DepJslError):
    pass


class NotBilinearError(DepJslError):
    pass


class NotTightError(DepJslError):
    pass


class NotSelfAdjointError(DepJslError):
    pass


class AxiomViolationError(DepJslError):
    pass


class NotSymmetricError(DepJslError):
    pass


class FactorizationError(DepJslError):
    pass


class NotReducedError(DepJslError):
    pass


class KindMismatchError(DepJslError):
    pass


class SizeGuardError(DepJslError):
    pass


class GenerationExhaustedError(DepJslError):
    pass


class ParseError(DepJslError):
    def __init__(self, message: str, line: Optional[int] = None, witness: Optional[Any] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, witness)
        self.line = line


class UnknownSuiteError(DepJslError):
    pass


class PropertyViolation(DepJslError):
    """A check suite found a counterexample."""

    exit_code = 1
