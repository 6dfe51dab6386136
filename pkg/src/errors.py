"""Exception types raised by the gl2word library."""

from typing import Optional


class Gl2WordError(ValueError):
    """Base class for every error raised on bad input."""


class NotUnimodularError(Gl2WordError):
    """Raised when a matrix is not in GL2(Z)."""

    def __init__(self, det: int):
        self.det = det
        super().__init__(f"determinant is {det}, not ±1")


class ContinuedFractionError(Gl2WordError):
    """Raised for quotient lists that break the continued-fraction invariants."""


class ParseError(Gl2WordError):
    """
    Syntax error in one of the text formats.

    Args:
        message: What went wrong
        text: The full input being parsed
        position: 0-based column of the offending character, if known
    """

    kind = "input"

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        self.reason = message
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(f"invalid {self.kind}: {message}")


class MatrixSyntaxError(ParseError):
    kind = "matrix"


class WordSyntaxError(ParseError):
    kind = "word"


class RationalSyntaxError(ParseError):
    kind = "rational"


class ContinuedFractionSyntaxError(ParseError):
    kind = "continued fraction"
