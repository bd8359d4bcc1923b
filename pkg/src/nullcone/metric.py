"""Linear algebra of the flat space of signature (2, 2).

The metric is ``diag(-1, -1, +1, +1)``:

    <u, v> = -u1*v1 - u2*v2 + u3*v3 + u4*v4

``inner`` and ``perp`` are written against the four attributes ``c1..c4``
so they work unchanged on plain :class:`Vec4` values and on
:class:`nullcone.jet.VecJet` (vectors of truncated Taylor series).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ConfigError, InvalidInputError

#: Diagonal of the metric tensor.
SIGNATURE = (-1, -1, 1, 1)
SIGNATURE_TAG = "diag(-1,-1,+1,+1)"

DEFAULT_CAUSAL_TOL = 1e-9


@dataclass(frozen=True)
class Vec4:
    """A point or vector with four finite double components."""

    c1: float
    c2: float
    c3: float
    c4: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "c4"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError) as exc:
                raise InvalidInputError(f"{name} is not a number: {value!r}") from exc
            if not math.isfinite(value):
                raise InvalidInputError(f"{name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def of(cls, values) -> Vec4:
        c1, c2, c3, c4 = values
        return cls(c1, c2, c3, c4)

    def __iter__(self) -> Iterator[float]:
        yield self.c1
        yield self.c2
        yield self.c3
        yield self.c4

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.c1, self.c2, self.c3, self.c4)

    def __add__(self, other: Vec4) -> Vec4:
        return Vec4(self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other: Vec4) -> Vec4:
        return Vec4(self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self) -> Vec4:
        return Vec4(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, k: float) -> Vec4:
        return Vec4(k * self.c1, k * self.c2, k * self.c3, k * self.c4)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Vec4:
        return Vec4(self.c1 / k, self.c2 / k, self.c3 / k, self.c4 / k)

    def max_abs(self) -> float:
        return max(abs(self.c1), abs(self.c2), abs(self.c3), abs(self.c4))


ZERO = Vec4(0.0, 0.0, 0.0, 0.0)


class CausalCharacter(enum.Enum):
    NULL = "null"
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    ZERO = "zero"


class PerpVariant(enum.Enum):
    """The two natural orthogonal null-vector operators."""

    P13 = "P13"
    P14 = "P14"


def inner(u, v):
    """Signature-(2,2) inner product of ``u`` and ``v``."""
    return -u.c1 * v.c1 - u.c2 * v.c2 + u.c3 * v.c3 + u.c4 * v.c4


def norm_sq(v):
    return inner(v, v)


def exact_inner(u, v) -> float:
    """Inner product of the exact binary values of ``u`` and ``v``, rounded once.

    Components may be floats or :class:`fractions.Fraction`; the only rounding
    is the final conversion back to float.
    """
    a = [Fraction(x) for x in _components(u)]
    b = [Fraction(x) for x in _components(v)]
    return float(sum(s * x * y for s, x, y in zip(SIGNATURE, a, b)))


def _components(v):
    if hasattr(v, "c1"):
        return (v.c1, v.c2, v.c3, v.c4)
    return tuple(v)


def causal_character(v: Vec4, tol: float = DEFAULT_CAUSAL_TOL) -> CausalCharacter:
    if not tol > 0:
        raise ConfigError(f"tolerance must be > 0, got {tol!r}")
    if v.max_abs() <= tol:
        return CausalCharacter.ZERO
    q = inner(v, v)
    if abs(q) <= tol:
        return CausalCharacter.NULL
    return CausalCharacter.SPACELIKE if q > 0 else CausalCharacter.TIMELIKE


def perp(v, variant: PerpVariant = PerpVariant.P14):
    """Orthogonal companion of ``v``.

    ``P13``: (v2, -v1, v4, -v3);  ``P14``: (v2, -v1, -v4, v3).
    Both satisfy ``inner(v, perp(v)) == 0`` and preserve the inner product.
    """
    cls = type(v)
    if variant is PerpVariant.P13:
        return cls(v.c2, -v.c1, v.c4, -v.c3)
    if variant is PerpVariant.P14:
        return cls(v.c2, -v.c1, -v.c4, v.c3)
    raise ConfigError(f"unknown perp variant {variant!r}")


def parse_perp_variant(name: str) -> PerpVariant:
    try:
        return PerpVariant(name.upper())
    except ValueError:
        raise ConfigError(f"unknown perp variant {name!r} (expected P13 or P14)") from None
