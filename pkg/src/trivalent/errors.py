"""Exception hierarchy shared by every module."""


class TrivalentError(Exception):
    """Base class for all errors raised by the package."""


class FormulaSyntaxError(TrivalentError, ValueError):
    """Raised by the parser; carries the UTF-8 byte offset and the tokens that would have been accepted."""

    def __init__(self, message: str, offset: int, expected: frozenset[str]):
        self.offset = offset
        self.expected = expected
        shown = ", ".join(sorted(expected)) if expected else "nothing"
        super().__init__(f"{message} at byte {offset} (expected one of: {shown})")


class UnboundAtomError(TrivalentError, KeyError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(atom)

    def __str__(self) -> str:
        return f"atom {self.atom!r} has no value in the valuation"


class AtomLimitError(TrivalentError):
    """Too many atoms (or assignments) for exhaustive enumeration."""


class PremiseLimitError(TrivalentError):
    pass


class SchemeError(TrivalentError, ValueError):
    """A validity scheme was asked to handle something it does not define."""


class UndefinedAssertabilityError(TrivalentError, ZeroDivisionError):
    pass


class ClosedBranchError(TrivalentError):
    pass


class NoRuleError(TrivalentError, ValueError):
    """No calculus rule applies to the given label or principal formula."""


class AlgebraError(TrivalentError):
    pass


class NotALatticeError(AlgebraError):
    pass


class NotPseudocomplementedError(AlgebraError):
    pass


class MissingElementError(AlgebraError):
    pass


class FileFormatError(TrivalentError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
