"""Natural frames {gamma, xi, N, W} of curves on the cone and their curvatures.

With ``p = perp(gamma, P14)`` and ``D = <p, gamma'>`` the frame is

    xi = gamma',   N = p / D,   W = -p' / D

The minus sign on ``W`` makes ``<gamma, W> = +1``: since ``<gamma, p> = 0``
identically, ``<gamma, p'> = -<gamma', p> = -D``. Curvatures are

    h = <gamma'', N>,   k1 = <gamma'', W>,   k2 = <N', W>

and for null curves on the cone the frame obeys

    gamma' = xi,  xi' = h xi + k1 gamma,  N' = -h N + k2 gamma - W,
    W' = -k2 xi - k1 N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .curve import ConeCurve
from .errors import FrameAxiomError, SingularFrameError
from .expr import central_difference
from .jet import MAX_ORDER, Jet, VecJet
from .metric import PerpVariant, Vec4, inner, perp

DEFAULT_PAIRING_TOL = 1e-10
DEFAULT_AXIOM_TOL = 1e-9
W_SIGN = -1

GRAM_CONDITIONS = (
    "<gamma,gamma>",
    "<gamma,xi>",
    "<gamma,N>",
    "<xi,xi>",
    "<xi,W>",
    "<N,N>",
    "<W,W>",
    "<N,W>",
    "<xi,N>-1",
    "<gamma,W>-1",
)

FRENET_EQUATIONS = ("gamma'-xi", "xi'-(h xi+k1 gamma)", "N'-(-h N+k2 gamma-W)", "W'-(-k2 xi-k1 N)")


@dataclass(frozen=True)
class NaturalFrame:
    t: float
    gamma: Vec4
    xi: Vec4
    N: Vec4
    W: Vec4
    pairing: float

    def vectors(self) -> dict[str, Vec4]:
        return {"gamma": self.gamma, "xi": self.xi, "N": self.N, "W": self.W}


@dataclass(frozen=True)
class CurvatureTriple:
    h: float
    k1: float
    k2: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.h, self.k1, self.k2)

    def is_finite(self) -> bool:
        return all(math.isfinite(x) for x in self.as_tuple())


@dataclass(frozen=True)
class FrameJets:
    """Frame fields as jets one order below the position jet they came from."""

    t: float
    gamma: VecJet
    xi: VecJet
    N: VecJet
    W: VecJet
    pairing: Jet

    def frame(self) -> NaturalFrame:
        return NaturalFrame(
            self.t, self.gamma.value(), self.xi.value(), self.N.value(), self.W.value(), self.pairing.value
        )


def frame_from_position(
    pos: VecJet,
    t: float,
    pairing_tol: float = DEFAULT_PAIRING_TOL,
    numerator: PerpVariant = PerpVariant.P14,
) -> FrameJets:
    """Perp construction applied to an arbitrary position jet.

    The pairing ``D`` always uses P14. ``numerator`` selects the perp used in
    the numerators of ``N`` and ``W``; anything other than P14 is only useful
    as a deliberately broken control.
    """
    xi = pos.deriv()
    p = perp(pos, PerpVariant.P14)
    d = inner(p, xi)
    if abs(d.value) <= pairing_tol:
        raise SingularFrameError(t, d.value)
    q = p if numerator is PerpVariant.P14 else perp(pos, numerator)
    n = q / d
    w = q.deriv() * float(W_SIGN) / d
    gamma = VecJet(*(c.truncate(xi.order) for c in pos.components()))
    return FrameJets(t, gamma, xi, n, w, d)


def frame_jets(c: ConeCurve, t: float, order: int = MAX_ORDER, pairing_tol: float = DEFAULT_PAIRING_TOL) -> FrameJets:
    return frame_from_position(c.jet(t, order), t, pairing_tol)


def build_frame(c: ConeCurve, t: float, pairing_tol: float = DEFAULT_PAIRING_TOL) -> NaturalFrame:
    return frame_jets(c, t, 1, pairing_tol).frame()


def gram_residuals(frame: NaturalFrame) -> dict[str, float]:
    """Absolute residuals of the ten pairing conditions, keyed by condition."""
    g, xi, n, w = frame.gamma, frame.xi, frame.N, frame.W
    values = (
        inner(g, g),
        inner(g, xi),
        inner(g, n),
        inner(xi, xi),
        inner(xi, w),
        inner(n, n),
        inner(w, w),
        inner(n, w),
        inner(xi, n) - 1.0,
        inner(g, w) - 1.0,
    )
    return {name: abs(v) for name, v in zip(GRAM_CONDITIONS, values)}


def _scale(x: float) -> float:
    return max(1.0, abs(x))


def curvatures_from_jets(fj: FrameJets, pos: VecJet) -> CurvatureTriple:
    acc = pos.derivative_value(2)
    n = fj.N.value()
    w = fj.W.value()
    dn = fj.N.derivative_value(1)
    return CurvatureTriple(inner(acc, n), inner(acc, w), inner(dn, w))


def curvatures(
    c: ConeCurve,
    t: float,
    axiom_tol: float | None = DEFAULT_AXIOM_TOL,
    pairing_tol: float = DEFAULT_PAIRING_TOL,
) -> CurvatureTriple:
    """Curvature triple at ``t``.

    Unless ``axiom_tol`` is None the frame is checked first and
    :class:`FrameAxiomError` is raised when any pairing condition fails,
    so curves off the cone never get curvatures reported.
    """
    pos = c.jet(t, 2)
    fj = frame_from_position(pos, t, pairing_tol)
    if axiom_tol is not None:
        res = gram_residuals(fj.frame())
        if max(res.values()) > axiom_tol:
            raise FrameAxiomError(t, res, axiom_tol)
    return curvatures_from_jets(fj, pos)


def frenet_residuals(c: ConeCurve, t: float, pairing_tol: float = DEFAULT_PAIRING_TOL) -> dict[str, float]:
    """Max-abs componentwise residuals of the four frame equations."""
    pos = c.jet(t, 3)
    fj = frame_from_position(pos, t, pairing_tol)
    h, k1, k2 = curvatures_from_jets(fj, pos).as_tuple()
    g, xi, n, w = (v.value() for v in (fj.gamma, fj.xi, fj.N, fj.W))
    dg, dxi, dn, dw = (v.derivative_value(1) for v in (fj.gamma, fj.xi, fj.N, fj.W))
    diffs = (
        dg - xi,
        dxi - (xi * h + g * k1),
        dn - (n * -h + g * k2 - w),
        dw - (xi * -k2 - n * k1),
    )
    return {name: d.max_abs() for name, d in zip(FRENET_EQUATIONS, diffs)}


def compatibility_residuals(c: ConeCurve, t: float) -> dict[str, float]:
    """Derivatives of the two unit pairings, which must vanish."""
    fj = frame_jets(c, t, 2)
    return {
        "d<xi,N>/dt": abs(inner(fj.xi, fj.N).derivative(1)),
        "d<gamma,W>/dt": abs(inner(fj.gamma, fj.W).derivative(1)),
    }


# --- finite-difference oracle ----------------------------------------------------

FD_OUTER_STEP = 1e-3


def _cached(fn: Callable[[float], object]) -> Callable[[float], object]:
    memo: dict[float, object] = {}

    def wrapped(s: float):
        if s not in memo:
            memo[s] = fn(s)
        return memo[s]

    return wrapped


def fd_vector(fn: Callable[[float], Vec4], t: float, j: int, h: float | None = None) -> Vec4:
    """Componentwise central difference of a vector function, evaluating each point once."""
    fn = _cached(fn)
    return Vec4(*(central_difference(lambda s, i=i: fn(s).as_tuple()[i], t, j, h) for i in range(4)))


@dataclass(frozen=True)
class FdFrame:
    frame: NaturalFrame
    acceleration: Vec4
    dN: Vec4
    dW: Vec4


def fd_frame(position: Callable[[float], Vec4], t: float, pairing_tol: float = DEFAULT_PAIRING_TOL) -> FdFrame:
    """The frame and its derivatives from point evaluations of the position only."""
    position = _cached(position)

    def fields(s: float) -> tuple[Vec4, Vec4, Vec4, Vec4, float]:
        g = position(s)
        xi = fd_vector(position, s, 1)
        p = perp(g, PerpVariant.P14)
        dp = fd_vector(lambda u: perp(position(u), PerpVariant.P14), s, 1)
        d = inner(p, xi)
        if abs(d) <= pairing_tol:
            raise SingularFrameError(s, d)
        return g, xi, p / d, dp * float(W_SIGN) / d, d

    fields = _cached(fields)
    g, xi, n, w, d = fields(t)
    h = FD_OUTER_STEP * _scale(t)
    dn = fd_vector(lambda s: fields(s)[2], t, 1, h)
    dw = fd_vector(lambda s: fields(s)[3], t, 1, h)
    acc = fd_vector(position, t, 2, h)
    return FdFrame(NaturalFrame(t, g, xi, n, w, d), acc, dn, dw)


def fd_curvatures(position: Callable[[float], Vec4], t: float, fr: FdFrame | None = None) -> CurvatureTriple:
    """Curvatures from :func:`fd_frame`; pass ``fr`` to reuse an already computed frame."""
    fr = fr or fd_frame(position, t)
    f = fr.frame
    return CurvatureTriple(inner(fr.acceleration, f.N), inner(fr.acceleration, f.W), inner(fr.dN, f.W))
