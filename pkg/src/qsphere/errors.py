"""Exception types shared across the package."""


class QsphereError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(QsphereError):
    """Division by the zero element of Q(q^(1/2))."""


class EvaluationPole(QsphereError):
    """Numeric evaluation hit a pole of the rational function."""


class NotInHopfDomain(QsphereError):
    """Hopf-algebra operation applied to a localized element."""


class NotInSubalgebra(QsphereError):
    """Element does not lie in the quantum-sphere subalgebra."""


class CutoffExceeded(QsphereError):
    """Requested data lies beyond the configured truncation cutoff."""


class ArityError(QsphereError):
    """Mismatched tensor arity in a chain/cochain operation."""


class TokenContextError(QsphereError):
    """Expression token used outside its algebra context."""


class ParseError(QsphereError):
    """Syntax error in an expression string."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
