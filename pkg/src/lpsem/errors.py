"""Exception types shared across the package."""

from __future__ import annotations


class LpsemError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LpsemError):
    """Syntax error in the text format, with source position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class LogicError(LpsemError):
    """A connective is not admissible in the requested logic or translation."""


class ProgramClassError(LpsemError):
    """An operation was applied to a program or formula outside its class."""


class CapError(LpsemError):
    """The enumeration alphabet exceeds the configured atom cap."""

    def __init__(self, required: int, cap: int):
        super().__init__(
            f"alphabet has {required} atoms, which exceeds the cap of {cap}; "
            f"raise the cap to at least {required}"
        )
        self.required = required
        self.cap = cap


class GenerationError(LpsemError):
    """A random-generation request cannot be satisfied."""
