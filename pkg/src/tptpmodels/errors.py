"""Diagnostics and exception types shared across the toolkit."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    """One reportable problem, tied to a source position when one is known."""

    severity: str  # "error" or "warning"
    code: str      # stable machine-readable kind, e.g. "SyntaxError", "WorldsNotDistinct"
    message: str
    line: int | None = None
    column: int | None = None

    def render(self) -> str:
        pos = f"{self.line}:{self.column}: " if self.line is not None else ""
        return f"{pos}{self.severity}: {self.code}: {self.message}"


def error(code: str, message: str, line: int | None = None, column: int | None = None) -> Diagnostic:
    return Diagnostic("error", code, message, line, column)


def warning(code: str, message: str, line: int | None = None, column: int | None = None) -> Diagnostic:
    return Diagnostic("warning", code, message, line, column)


class TptpError(Exception):
    """Base class for toolkit errors."""


class TokenizeError(TptpError):
    def __init__(self, code: str, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {code}: {message}")
        self.code = code
        self.line = line
        self.column = column
        self.detail = message

    def as_diagnostic(self) -> Diagnostic:
        return error(self.code, self.detail, self.line, self.column)


class ParseError(TptpError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: SyntaxError: {message}")
        self.code = "SyntaxError"
        self.line = line
        self.column = column
        self.detail = message

    def as_diagnostic(self) -> Diagnostic:
        return error(self.code, self.detail, self.line, self.column)


class AssemblyError(TptpError):
    """Raised by strict assembly entry points when the report carries errors."""

    def __init__(self, diagnostics):
        super().__init__("; ".join(d.render() for d in diagnostics))
        self.diagnostics = list(diagnostics)


class EmissionError(TptpError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
