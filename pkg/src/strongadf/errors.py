"""Exception hierarchy shared by the library and the CLI."""


class AdfError(Exception):
    """Base class for all errors raised by strongadf."""


class ParseError(AdfError):
    """Malformed input text. Carries an optional 1-based line and column."""

    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(self._render())

    def _render(self):
        where = []
        if self.source:
            where.append(str(self.source))
        if self.line is not None:
            where.append(str(self.line))
        if self.column is not None:
            where.append(str(self.column))
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message

    def located(self, line=None, source=None):
        """Copy of this error with line/source filled in (column kept)."""
        return type(self)(
            self.message,
            line=self.line if line is None else line,
            column=self.column,
            source=self.source if source is None else source,
        )


class UndeclaredArgumentError(ParseError):
    """A formula or attack mentions an argument that was never declared."""


class DuplicateArgumentError(ParseError):
    pass


class DomainMismatchError(AdfError, ValueError):
    """Two interpretations (or an interpretation and a framework) disagree on the universe."""


class UnknownArgumentError(AdfError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class JoinConflictError(AdfError, ValueError):
    """The operands of a join assign opposite decided values to one argument."""

    def __init__(self, argument):
        self.argument = argument
        super().__init__(
            f"join conflict on argument {argument!r}: one operand says t, the other f"
        )


class CapExceededError(AdfError):
    """A brute-force routine was asked to work beyond its configured size cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class PreconditionError(AdfError, ValueError):
    """An operation was called outside its documented precondition."""


class LatticeViolationError(AdfError):
    """The strongly admissible set failed a lattice check. Indicates a bug."""
