class SullivanKitError(Exception):
    """Base class for every error raised by the toolkit."""


class ModelParseError(SullivanKitError, ValueError):
    """Text (a polynomial or a model file) could not be parsed."""

    def __init__(
        self,
        message: str,
        *,
        line: int | None = None,
        column: int | None = None,
        source: str | None = None,
    ) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        where = []
        if self.source:
            where.append(self.source)
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message


class ModelValidationError(SullivanKitError, ValueError):
    """An input parsed but violates an invariant (degree, d²=0, ...)."""

    def __init__(self, message: str, *, invariant: str | None = None) -> None:
        self.invariant = invariant
        super().__init__(message)


class GeneratorMismatchError(ModelValidationError):
    """Two elements live in free algebras on different generator sets."""


class UnknownCatalogEntry(SullivanKitError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown catalog entry"


class InapplicableError(SullivanKitError, ValueError):
    """The operation's hypotheses do not hold for this input."""


class UnsupportedShapeError(InapplicableError):
    """The model does not have the shape an operation is defined for."""


class MalformedRelativeModelError(ModelValidationError):
    pass


class ContradictionError(SullivanKitError, RuntimeError):
    """A situation that is proven impossible for valid inputs was reached."""


class ResourceLimitError(SullivanKitError, RuntimeError):
    """A computation would exceed the configured size limits."""
