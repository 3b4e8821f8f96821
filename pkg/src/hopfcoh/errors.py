"""Exception hierarchy.

Each class maps onto one CLI exit code (see :mod:`hopfcoh.cli`).
"""
from __future__ import annotations


class HopfcohError(Exception):
    exit_code = 1
    kind = "error"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ContractError(HopfcohError, ValueError):
    """A precondition of an operation was violated by the caller."""

    exit_code = 2
    kind = "contract"


class StructureError(HopfcohError, ValueError):
    """Dimensions of the supplied maps do not fit together."""

    exit_code = 3
    kind = "structure"


class ValidationError(HopfcohError):
    """An axiom (associativity, Eq. of Hopf modules, ...) fails on the input."""

    exit_code = 3
    kind = "validation"


class InternalConsistencyError(HopfcohError, AssertionError):
    """An identity that holds by construction failed; signals a bug."""

    exit_code = 4
    kind = "internal"


class TheoremViolation(HopfcohError):
    exit_code = 4
    kind = "theorem-violation"


class EnumerationBudgetExceeded(HopfcohError):
    exit_code = 5
    kind = "budget"

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(f"{what}: enumeration needs {required} points, cap is {cap}")
        self.required = required
        self.cap = cap


class UnsupportedInput(HopfcohError):
    kind = "unsupported"
    exit_code = 2


class SchemaError(HopfcohError):
    exit_code = 2
    kind = "schema"


class InstanceParseError(HopfcohError):
    exit_code = 6
    kind = "parse"
