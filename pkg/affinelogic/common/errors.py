"""Exception types raised by affinelogic.

Violations, verdicts and residuals are returned as data. The classes below are reserved for inputs
that cannot be processed at all.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Position inside a text source. ``line`` and ``column`` start at 1."""
    file: str = '<string>'
    line: int = 1
    column: int = 1

    def __post_init__(self):
        assert self.line >= 1 and self.column >= 1, "line and column start at 1."

    def __str__(self):
        return f"{self.file}:{self.line}:{self.column}"


class AffineLogicError(Exception):
    """Base class of every error raised by the package."""

    def __init__(self, message: str = '', span: SourceSpan or None = None):
        self.message = message
        self.span = span
        super().__init__(f"{span}: {message}" if span is not None else message)


# syntax / parser

class UnknownSymbol(AffineLogicError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ArityMismatch(AffineLogicError, ValueError):
    pass


class ALSyntaxError(AffineLogicError, ValueError):
    pass


class SchemaError(AffineLogicError, ValueError):
    pass


class DimensionMismatch(AffineLogicError, ValueError):
    pass


class NotSubstitutable(AffineLogicError, ValueError):
    pass


# semantics

class UnboundVariable(AffineLogicError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IllDefinedQuotient(AffineLogicError, ValueError):
    pass


class InvalidStructure(AffineLogicError):
    """A structure fails validation; ``violations`` lists what :func:`validate_structure` found."""

    def __init__(self, message: str = '', violations=()):
        self.violations = tuple(violations)
        super().__init__(message)


# ultramean

class SizeMismatch(AffineLogicError, ValueError):
    pass


class ProductTooLarge(AffineLogicError, ValueError):
    pass


# proof

class UnknownAxiom(AffineLogicError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


UnknownAxiomName = UnknownAxiom


class MalformedBindings(AffineLogicError, ValueError):
    pass


class DanglingPremiseId(AffineLogicError, ValueError):
    pass


class RejectedScript(AffineLogicError):
    pass


class StepRejected(AffineLogicError):
    """A proof step does not check. ``reason`` is the name reported in the verdict."""

    def __init__(self, reason: str, message: str = ''):
        self.reason = reason
        super().__init__(message)


class KernelSoundnessError(AffineLogicError):
    """An accepted script has a counterexample. Always a bug in the kernel."""


# analysis

class OpenCondition(AffineLogicError, ValueError):
    pass


class Infeasible(AffineLogicError):
    """No mixture of the given model family satisfies the theory.

    This is relative to the family only and does not refute satisfiability in general.
    """


class FamilyMiss(AffineLogicError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BudgetExceeded(AffineLogicError):
    pass


# cli

class ConfigError(AffineLogicError, ValueError):
    pass
