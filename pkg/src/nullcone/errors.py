"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class NullConeError(Exception):
    """Base class for all errors raised by ``nullcone``."""


class InvalidInputError(NullConeError, ValueError):
    """Non-finite or otherwise malformed numeric input."""


class ConfigError(NullConeError, ValueError):
    """Invalid configuration (tolerances, grids, names, modes)."""


class ExprSyntaxError(NullConeError, ValueError):
    """Expression text could not be parsed.

    ``offset`` is the 1-based byte offset of the offending token; end of
    input is reported as ``len(src) + 1``.
    """

    def __init__(self, message: str, offset: int, src: str = ""):
        self.message = message
        self.offset = offset
        self.src = src
        super().__init__(f"{message} at offset {offset}")


class UnknownIdentifierError(ExprSyntaxError):
    """An identifier other than ``t``, ``pi`` or a known function name."""


class DomainError(NullConeError, ArithmeticError):
    """Evaluation left the domain of an operation (1/0, sqrt of a negative).

    ``offset`` locates the failing node in the source text when known.
    """

    def __init__(self, message: str, offset: int | None = None, t: float | None = None):
        self.message = message
        self.offset = offset
        self.t = t
        where = []
        if offset is not None:
            where.append(f"node at offset {offset}")
        if t is not None:
            where.append(f"t={t!r}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)


class SingularError(NullConeError):
    """A point where a construction is undefined; reported, never fatal to sweeps."""

    def __init__(self, message: str, t: float | None = None):
        self.t = t
        super().__init__(message if t is None else f"{message} at t={t!r}")


class SingularFrameError(SingularError):
    """The pairing ``D = <perp(gamma), gamma'>`` is too close to zero."""

    def __init__(self, t: float, pairing: float):
        self.pairing = pairing
        super().__init__(f"singular frame: pairing D={pairing!r}", t)


class KindDomainError(SingularError):
    """A family-specific position formula is undefined (e.g. sinh of the angle is 0)."""


class TableDenominatorError(SingularError):
    """A denominator of a closed-form curvature table vanishes.

    ``symbol`` names the offending quantity as it appears in the table.
    """

    def __init__(self, symbol: str, value: float, t: float | None = None):
        self.symbol = symbol
        self.value = value
        super().__init__(f"denominator {symbol}={value!r} vanishes", t)


class FrameAxiomError(NullConeError):
    """Frame pairing conditions fail; curvatures are not reported for such a frame."""

    def __init__(self, t: float, residuals: dict[str, float], tol: float):
        self.t = t
        self.residuals = residuals
        self.tol = tol
        worst = max(residuals, key=lambda k: residuals[k])
        super().__init__(
            f"frame axioms violated at t={t!r}: {worst} residual {residuals[worst]!r} > {tol!r}"
        )
