"""Exception hierarchy.

Math-layer failures derive from :class:`MathError`; malformed input files
raise :class:`SchemaError`. The CLI maps the two families to distinct exit
codes.
"""


class SphereClosureError(Exception):
    """Base class for every error raised by this package."""


class MathError(SphereClosureError):
    pass


class SchemaError(SphereClosureError):
    """Input document does not match the problem-file schema."""

    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        where = path or "<root>"
        if line is not None:
            where = f"line {line}: {where}"
        super().__init__(f"{where}: {message}")


class ReduciblePolynomial(MathError):
    pass


class UncertifiableIrreducibility(MathError):
    pass


class EmptyRootBox(MathError):
    pass


class AmbiguousRootBox(MathError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


class PrecisionExhausted(MathError):
    pass


class InconsistentSystem(MathError):
    pass


class SingularGram(MathError):
    pass


class PoleAtBase(MathError):
    pass


class DimensionZero(MathError):
    pass


class InvalidSpec(MathError):
    """A sphere problem violates a structural invariant (degenerate sphere,
    indefinite form, complex designated root in theorem mode, ...)."""
