from typing import Optional


class AlgebraError(Exception):
    """Base class for every error raised by the algebra services."""


class ForeignKeyError(AlgebraError):
    def __init__(self, key: str):
        super().__init__(f"foreign key: {key!r} is not in the ambient basis")
        self.key = key


class DiagramSyntaxError(AlgebraError):
    def __init__(self, text: str, position: int, reason: str):
        super().__init__(f"syntax error at position {position} in {text!r}: {reason}")
        self.text = text
        self.position = position
        self.reason = reason


class InvariantViolation(AlgebraError):
    def __init__(self, invariant: str, detail: Optional[str] = None):
        message = f"invariant violated: {invariant}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.invariant = invariant


class AmbientTooLargeError(AlgebraError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"ambient too large: {count} monomials exceeds the cap of {cap}")
        self.count = count
        self.cap = cap


class DifferentialMismatchError(AlgebraError):
    def __init__(self, full, reduced):
        super().__init__("full alternating coface sum disagrees with the reduced differential")
        self.full = full
        self.reduced = reduced


class ModelError(AlgebraError):
    """Unknown quotient model or an out-of-range component count."""
