"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`SaitoError`,
so callers (the CLI in particular) can separate computation failures from
programming errors.
"""


class SaitoError(Exception):
    """Base class for all library errors."""


class TreeError(SaitoError, ValueError):
    """Malformed resolution tree or construction step."""


class UnknownVertex(TreeError):
    pass


class Rule2EdgeMissing(TreeError):
    """A two-parent insertion references an edge that does not exist."""


class NotComparable(TreeError):
    """Access tree requested between vertices that are not ordered."""


class EmptyTree(TreeError):
    pass


class IntegralityViolation(SaitoError, ArithmeticError):
    """A configuration entry came out as a proper half-integer."""


class UniquenessViolation(SaitoError, AssertionError):
    """Zero or several admissible dicriticities were found."""


class InternalInconsistency(SaitoError, AssertionError):
    """The inductive solver found both or neither root candidate admissible."""


class TreeTooLarge(SaitoError, ValueError):
    pass


class DegenerateAssignment(SaitoError, ArithmeticError):
    """The gluing solver could not avoid a zero weight."""


class InvalidCharacteristic(SaitoError, ValueError):
    pass


class SmoothCurve(InvalidCharacteristic):
    pass


class UnknownFamily(SaitoError, ValueError):
    pass


class OddR(SaitoError, ValueError):
    pass


class UnsupportedInstance(SaitoError, ValueError):
    """A moduli level rule declined its input."""

    def __init__(self, message, snapshot=None):
        super().__init__(message)
        self.snapshot = snapshot


class NegativeResult(SaitoError, ValueError):
    pass


class ParseError(SaitoError, ValueError):
    """Syntax error in a tree document; carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateId(ParseError):
    pass


class ForwardReference(ParseError):
    pass
