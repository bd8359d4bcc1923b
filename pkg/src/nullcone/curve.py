"""Null curves on the lightlike cone in canonical generator-pair form.

A pair of scalar functions ``f, g`` and a constant ``m`` define

    gamma(t) = (f + m g,  g - m f,  f - m g,  g + m f)

which satisfies ``<gamma, gamma> = 0`` and ``<gamma', gamma'> = 0``
identically. Admissible curves additionally need the Wronskian-type
invariant ``Omega = f g' - f' g`` to be nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .errors import ConfigError, DomainError, InvalidInputError, NullConeError
from .expr import Expr, as_expr, evaluate, fd_derivative, jet_eval, to_text
from .jet import MAX_ORDER, Jet, VecJet
from .metric import Vec4, exact_inner, inner

DEFAULT_NULL_TOL = 1e-12


@dataclass(frozen=True)
class GeneratorPair:
    f: Expr
    g: Expr
    m: float

    def __post_init__(self):
        object.__setattr__(self, "f", as_expr(self.f))
        object.__setattr__(self, "g", as_expr(self.g))
        m = float(self.m)
        if not math.isfinite(m):
            raise InvalidInputError(f"m must be finite, got {self.m!r}")
        object.__setattr__(self, "m", m)

    def describe(self) -> dict[str, Any]:
        return {"f": to_text(self.f), "g": to_text(self.g), "m": self.m}

    def check_window(self, grid: Sequence[float]) -> None:
        """Reject pairs with ``f`` and ``g`` both zero at every grid point."""
        for t in grid:
            try:
                if evaluate(self.f, t) != 0.0 or evaluate(self.g, t) != 0.0:
                    return
            except DomainError:
                continue
        raise InvalidInputError("f and g vanish on the whole evaluation window")


@dataclass(frozen=True)
class ConeCurve:
    """A curve given by a jet-valued position map.

    ``position(t, order)`` returns a :class:`VecJet`. ``provenance`` is one of
    ``("canonical", GeneratorPair)``, ``("derived", SmarandacheSpec)`` or
    ``("explicit", components)``; the last is used for controls and for curves
    not in canonical form.
    """

    position: Callable[[float, int], VecJet] = field(repr=False)
    provenance: tuple[str, Any]

    def at(self, t: float) -> Vec4:
        return self.position(t, 0).value()

    def jet(self, t: float, order: int = MAX_ORDER) -> VecJet:
        return self.position(t, order)

    @property
    def kind(self) -> str:
        return self.provenance[0]

    @property
    def generator(self) -> GeneratorPair:
        if self.kind != "canonical":
            raise NullConeError(f"{self.kind} curve has no generator pair")
        return self.provenance[1]


def _canonical_jet(gp: GeneratorPair, t: float, order: int) -> VecJet:
    f = _component_jet(gp.f, t, order, "f")
    g = _component_jet(gp.g, t, order, "g")
    m = gp.m
    return VecJet(f + g * m, g - f * m, f - g * m, g + f * m)


def _component_jet(e: Expr, t: float, order: int, name: str) -> Jet:
    try:
        return jet_eval(e, t, order)
    except DomainError as exc:
        raise DomainError(f"{name}: {exc.message}", exc.offset, t) from None


def canonical_curve(gp: GeneratorPair) -> ConeCurve:
    return ConeCurve(lambda t, order: _canonical_jet(gp, t, order), ("canonical", gp))


def explicit_curve(components: Sequence) -> ConeCurve:
    """Curve from four component expressions (not necessarily on the cone)."""
    exprs = tuple(as_expr(c) for c in components)
    if len(exprs) != 4:
        raise InvalidInputError("an explicit curve needs four components")

    def position(t: float, order: int) -> VecJet:
        return VecJet(*(_component_jet(e, t, order, f"component {i + 1}") for i, e in enumerate(exprs)))

    return ConeCurve(position, ("explicit", exprs))


def omega(gp: GeneratorPair, t: float) -> float:
    """``f g' - f' g`` at ``t`` from jets."""
    f = jet_eval(gp.f, t, 1)
    g = jet_eval(gp.g, t, 1)
    return f.value * g.derivative(1) - f.derivative(1) * g.value


def omega_jet(gp: GeneratorPair, t: float, order: int = MAX_ORDER - 1) -> Jet:
    f = jet_eval(gp.f, t, order + 1)
    g = jet_eval(gp.g, t, order + 1)
    return (f * g.deriv() - f.deriv() * g).truncate(order)


def omega_fd(gp: GeneratorPair, t: float) -> float:
    """Finite-difference counterpart of :func:`omega` (independent oracle)."""
    return evaluate(gp.f, t) * fd_derivative(gp.g, t, 1) - fd_derivative(gp.f, t, 1) * evaluate(gp.g, t)


def scaled(gp: GeneratorPair, lam: float) -> GeneratorPair:
    from .expr import Const, Times

    return GeneratorPair(Times(Const(lam), gp.f), Times(Const(lam), gp.g), gp.m)


# --- nullity validation --------------------------------------------------------


@dataclass(frozen=True)
class NullResidual:
    t: float
    position: float | None
    tangent: float | None
    error: str | None = None

    @property
    def worst(self) -> float:
        if self.error is not None:
            return math.inf
        return max(self.position, self.tangent)


@dataclass(frozen=True)
class NullValidation:
    points: tuple[NullResidual, ...]
    tol: float

    @property
    def passed(self) -> bool:
        return all(p.error is None and p.worst <= self.tol for p in self.points)

    @property
    def max_residual(self) -> float:
        return max(p.worst for p in self.points)


def _exact_canonical(gp: GeneratorPair, t: float) -> tuple[tuple, tuple]:
    # Assemble position and tangent from the double values of f, g, f', g'
    # without intermediate rounding.
    f = jet_eval(gp.f, t, 1)
    g = jet_eval(gp.g, t, 1)
    m = Fraction(gp.m)

    def assemble(a: float, b: float) -> tuple:
        a, b = Fraction(a), Fraction(b)
        return (a + m * b, b - m * a, a - m * b, b + m * a)

    return assemble(f.value, g.value), assemble(f.derivative(1), g.derivative(1))


def null_residuals(c: ConeCurve, t: float, exact: bool = True) -> tuple[float, float]:
    """``(|<gamma,gamma>|, |<gamma',gamma'>|)`` at ``t``.

    With ``exact`` the inner products are taken in rational arithmetic over
    the computed double values; for canonical curves the components are
    assembled from ``f, g, f', g'`` exactly as well, so the residual measures
    the canonical construction rather than rounding of the stored components.
    """
    if exact and c.kind == "canonical":
        pos, tan = _exact_canonical(c.generator, t)
        return abs(exact_inner(pos, pos)), abs(exact_inner(tan, tan))
    j = c.jet(t, 1)
    pos, tan = j.value(), j.derivative_value(1)
    if exact:
        return abs(exact_inner(pos, pos)), abs(exact_inner(tan, tan))
    return abs(inner(pos, pos)), abs(inner(tan, tan))


def validate_null(
    c: ConeCurve, grid: Sequence[float], tol: float = DEFAULT_NULL_TOL, exact: bool = True
) -> NullValidation:
    """Per-point nullity residuals of position and tangent; failures are recorded, not raised."""
    if len(grid) == 0:
        raise ConfigError("grid must be nonempty")
    if not tol > 0:
        raise ConfigError(f"tolerance must be > 0, got {tol!r}")
    points = []
    for t in grid:
        try:
            p, q = null_residuals(c, t, exact)
            points.append(NullResidual(t, p, q))
        except (DomainError, InvalidInputError) as exc:
            points.append(NullResidual(t, None, None, str(exc)))
    return NullValidation(tuple(points), tol)


# --- named fixtures ------------------------------------------------------------

FIXTURE_KINDS = ("hyperbolic", "trigonometric")


def fixture(kind: str, a: float = 1.0, m: float = 0.0) -> GeneratorPair:
    """Generator pairs with closed-form frames.

    ``hyperbolic``: f = sinh(a t)/2, g = cosh(a t)/2, curvatures (0, a^2, 0).
    ``trigonometric``: f = sin(a t)/2, g = cos(a t)/2, curvatures (0, -a^2, 0).
    """
    a = float(a)
    if not math.isfinite(a) or a == 0.0:
        raise ConfigError(f"fixture parameter a must be finite and nonzero, got {a!r}")
    if kind == "hyperbolic":
        fs, gs = "sinh", "cosh"
    elif kind == "trigonometric":
        fs, gs = "sin", "cos"
    else:
        raise ConfigError(f"unknown fixture {kind!r} (expected one of {', '.join(FIXTURE_KINDS)})")
    arg = "t" if a == 1.0 else f"({a!r})*t"
    return GeneratorPair(f"{fs}({arg})/2", f"{gs}({arg})/2", m)


def grid(t0: float, t1: float, samples: int) -> list[float]:
    """``samples`` evenly spaced points from ``t0`` to ``t1`` inclusive."""
    if samples < 1:
        raise ConfigError("samples must be >= 1")
    if samples == 1:
        return [float(t0)]
    step = (t1 - t0) / (samples - 1)
    pts = [t0 + i * step for i in range(samples)]
    pts[-1] = float(t1)
    return [0.0 if abs(x) < 1e-15 * max(1.0, abs(step)) else x for x in pts]
