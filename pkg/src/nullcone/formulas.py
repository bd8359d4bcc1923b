"""Closed-form normalizers and curvature tables for the seven families.

Each family is evaluated in two steps: ``coefficients`` builds every named
intermediate (normalizer radicand, coefficient tiers, Omega) as jets, and
``combine`` turns them into the curvature triple. The split lets callers
replace a coefficient tier and observe the effect on the final combination.

Two modes exist. ``literal`` evaluates the tables verbatim, including
terms that look like transcription slips; ``corrected`` swaps in the plausible intended
term for each entry of :data:`CORRECTIONS`. Entries of :data:`READINGS` are
ambiguous tokens that need a single interpretation in both modes.

All quantities are jets in ``t``; primes are jet derivatives. Base
curvatures enter as jets so their derivatives are available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import KindDomainError, TableDenominatorError
from .jet import Jet, VecJet, sin, sin_cos, sinh, sinh_cosh, sqrt
from .kinds import FormulaMode, SmarandacheKind as K
from .metric import inner

DENOMINATOR_TOL = 1e-12
SQRT2 = math.sqrt(2.0)

CORRECTIONS: dict[K, tuple[str, ...]] = {
    K.GAMMA_W: (
        "n-table: psi''/psi^2 replaced by psi''/psi'^2",
        "M1 radicand: k2*sin(2*h*psi) replaced by k2*sinh(2*psi)",
    ),
    K.XI_N: (),
    K.W_N: ("a-table: +M3'/M3 replaced by -M3'/M3",),
    K.GAMMA_ZETA_N: (),
    K.XI_N_W: (),
    K.GAMMA_XI_W: ("M6 radicand: trailing G3' replaced by G3'^2",),
    K.GAMMA_XI_N_W: ("c1: alpha3*k2 replaced by b3*k2",),
}

READINGS: dict[K, tuple[str, ...]] = {
    K.GAMMA_W: ("b3 read as the b-table entry b3",),
    K.XI_N: ("h denominator uses the derivative of the family's own angle",),
    K.W_N: (
        "h denominator uses psi' of this family",
        "one n-table serves both modes",
    ),
    K.GAMMA_ZETA_N: ("k2 numerator: missing operator before the fourth product read as +",),
    K.XI_N_W: ("k2 evaluated directly as the stated inner product",),
    K.GAMMA_XI_W: ("n-table divides by Omega6",),
    K.GAMMA_XI_N_W: ("b_i = alpha_i / M7",),
}

#: Coefficient tier entering ``h`` and ``k1`` linearly, per family.
LINEAR_TIER: dict[K, str] = {
    K.GAMMA_W: "b",
    K.XI_N: "n",
    K.W_N: "a",
    K.GAMMA_ZETA_N: "b",
    K.XI_N_W: "c",
    K.GAMMA_XI_W: "b",
    K.GAMMA_XI_N_W: "c",
}

NORMALIZER_SYMBOL = {kind: f"M{i}^2" for i, kind in enumerate(K, start=1)}


@dataclass(frozen=True)
class FormulaInputs:
    """Base curvature jets, the curve constant ``m`` and the angle jets at ``t``."""

    t: float
    h: Jet
    k1: Jet
    k2: Jet
    m: float
    angles: tuple[Jet, ...]
    mode: FormulaMode = FormulaMode.LITERAL

    @property
    def literal(self) -> bool:
        return self.mode is FormulaMode.LITERAL


Coeffs = dict[str, object]


def _den(symbol: str, x: Jet, t: float) -> Jet:
    if abs(x.value) <= DENOMINATOR_TOL:
        raise TableDenominatorError(symbol, x.value, t)
    return x


def _root(symbol: str, radicand: Jet, t: float) -> Jet:
    """``sqrt(|radicand|)``; a vanishing radicand is a zero denominator."""
    _den(symbol, radicand, t)
    return sqrt(radicand if radicand.value > 0 else -radicand)


def _tier(c: Coeffs, prefix: str) -> tuple[Jet, Jet, Jet, Jet]:
    return tuple(c[f"{prefix}{i}"] for i in range(1, 5))  # type: ignore[return-value]


def _put(c: Coeffs, prefix: str, values) -> None:
    for i, v in enumerate(values, start=1):
        c[f"{prefix}{i}"] = v


def _frenet_tier(x1, x2, x3, x4, h, k1, k2, third=None):
    """The four combinations ``(x1' + x2 k1 + x3 k2, ...)`` shared by several tables."""
    third = x3 if third is None else third
    return (
        x1.deriv() + x2 * k1 + third * k2,
        x2.deriv() + x1 + x2 * h - x4 * k2,
        x3.deriv() - x3 * h - x4 * k1,
        x4.deriv() - x3,
    )


# --- gamma-w ---------------------------------------------------------------------


def _gamma_w_radicand(x: FormulaInputs) -> Jet:
    psi, h, k1, k2 = x.angles[0], x.h, x.k1, x.k2
    s, c = sinh_cosh(psi)
    p = psi.deriv()
    mixed = k2 * sin(2.0 * h * psi) if x.literal else k2 * sinh(2.0 * psi)
    return -(p * p) + (k1 * k1 - k2 * k2) * c * c - s * s + mixed


def _gamma_w(x: FormulaInputs) -> Coeffs:
    psi = x.angles[0]
    h, k1, k2, m = x.h, x.k1, x.k2, x.m
    s, c = sinh_cosh(psi)
    p = psi.deriv()
    pp = p.deriv()
    r = _gamma_w_radicand(x)
    mm = _root("M1", r, x.t)
    a = (p * c / mm, (s - k2 * c) / mm, -k1 * c / mm, p * s / mm)
    b = tuple(v / mm for v in _frenet_tier(*a, h, k1, k2))
    q = pp / (_den("psi^2", psi * psi, x.t) if x.literal else _den("psi'^2", p * p, x.t))
    u = 1.0 + m * m
    n = (
        -(q * (c - m * s) + s - m * c) / u,
        (q * (s + m * c) + c + m * s) / u,
        (q * (c + m * s) + s + m * c) / u,
        -(q * (s - m * c) + c - m * s) / u,
    )
    out: Coeffs = {"M1^2": r, "s": s, "c": c, "p": p, "Omega1": -p / 4.0}
    _put(out, "a", a)
    _put(out, "b", b)
    _put(out, "n", n)
    return out


def _gamma_w_combine(x: FormulaInputs, c: Coeffs):
    m, u = x.m, 1.0 + x.m * x.m
    s, co, p = c["s"], c["c"], c["p"]
    b1, b2, b3, b4 = _tier(c, "b")
    n1, n2, n3, n4 = _tier(c, "n")
    h = -(-b1 * (co - m * s) + b2 * (s + m * co) - b3 * (co + m * s) + b4 * (s - m * co)) / (
        u * _den("psi'", p, x.t)
    )
    k1 = (-b1 * (s - m * co) + b2 * (co + m * s) - b3 * (s + m * co) + b4 * (co - m * s)) / u
    k2 = -(-n1 * (s - m * co) + n2 * (co + m * s) - n3 * (s + m * co) + n4 * (co - m * s)) / u
    return h, k1, k2


# --- xi-n ------------------------------------------------------------------------


def _xi_n_radicand(x: FormulaInputs) -> Jet:
    psi, h, k1, k2 = x.angles[0], x.h, x.k1, x.k2
    s, c = sinh_cosh(psi)
    p = psi.deriv()
    return (
        -(k1 * k1) * s * s
        + (1.0 - k2 * k2) * c * c
        - p * p
        + h * h
        - sinh(2.0 * psi) * (k1 * k2 + 2.0 * p * h)
    )


def _xi_n(x: FormulaInputs) -> Coeffs:
    psi = x.angles[0]
    h, k1, k2, m = x.h, x.k1, x.k2, x.m
    s, c = sinh_cosh(psi)
    p = psi.deriv()
    pp = p.deriv()
    r = _xi_n_radicand(x)
    mm = _root("M2", r, x.t)
    dm = mm.deriv()
    m2, m3 = mm * mm, mm * mm * mm
    a1, a2, a3 = k1 * s + k2 * c, p * c + h * s, p * s - h * c
    n = (
        (-dm / mm * a1 + a1.deriv() + a2 * k1 + a3 * k2) / m2,
        -dm / m3 * a2 + (a1 + a2.deriv() + h * a2 + k2 * c) / m2,
        -dm / m3 * a3 + (a3.deriv() - h * a3 + k1 * c) / m2,
        -(p * s + a3) / m2,
    )
    q = pp / _den("psi'^2", p * p, x.t)
    u = 1.0 + m * m
    ups = (
        (-q * (s - m * c) + c - m * s) / u,
        (q * (c + m * s) - s - m * c) / u,
        (q * (s + m * c) - c - m * s) / u,
        (-q * (c - m * s) + s - m * c) / u,
    )
    out: Coeffs = {"M2^2": r, "s": s, "c": c, "p": p, "Omega2": p / 4.0}
    _put(out, "a", (a1, a2, a3))
    _put(out, "n", n)
    _put(out, "Upsilon", ups)
    return out


def _xi_n_combine(x: FormulaInputs, c: Coeffs):
    m, u = x.m, 1.0 + x.m * x.m
    s, co, p = c["s"], c["c"], c["p"]
    n1, n2, n3, n4 = _tier(c, "n")
    y1, y2, y3, y4 = _tier(c, "Upsilon")
    h = (-n1 * (s - m * co) + n2 * (co + m * s) - n3 * (co + m * s) + n4 * (s - m * co)) / (
        u * _den("psi'", p, x.t)
    )
    k1 = (n1 * (co - m * s) + n2 * (-s - m * co) - n3 * (-co - m * s) - n4 * (s - m * co)) / u
    k2 = -(-y1 * (co - m * s) + y2 * (s + m * co) - y3 * (co + m * s) + y4 * (s - m * co)) / u
    return h, k1, k2


# --- w-n -------------------------------------------------------------------------


def _w_n_radicand(x: FormulaInputs) -> Jet:
    psi, h, k1, k2 = x.angles[0], x.h, x.k1, x.k2
    sn, cs = sin_cos(psi)
    p = psi.deriv()
    return (
        -(k2 * k2)
        + sn * sn * (h * h + (1.0 + p) * (1.0 + p))
        + cs * cs * (p - k1) * (p - k1)
        - h * (p - k1) * sin(2.0 * psi)
    )


def _w_n(x: FormulaInputs) -> Coeffs:
    psi = x.angles[0]
    h, k1, k2, m = x.h, x.k1, x.k2, x.m
    sn, cs = sin_cos(psi)
    p = psi.deriv()
    pp = p.deriv()
    b = (k2 * sn, -k2 * cs, (p - k1) * cs - h * sn, -(1.0 + p) * sn)
    r = _w_n_radicand(x)
    mm = _root("M3", r, x.t)
    ratio = mm.deriv() / mm * (1.0 if x.literal else -1.0)
    m2 = mm * mm
    b1, b2, b3, b4 = b
    a = (
        (ratio * b1 + b1.deriv() + b2 * k1 + b3 * k2) / m2,
        (ratio * b2 + b1 + b2.deriv() + b2 * h - b4 * k2) / m2,
        (ratio * b3 + b3.deriv() - b3 * h - b4 * k1) / m2,
        (ratio * b4 + b4.deriv() - b3) / m2,
    )
    q = pp / _den("psi'^2", p * p, x.t)
    u = 1.0 + m * m
    n = (
        (-q * (cs - m * sn) + sn - m * cs) / u,
        (q * (sn + m * cs) + cs - m * sn) / u,
        (q * (cs + m * sn) - sn + m * cs) / u,
        (-q * (sn - m * cs) - cs - m * sn) / u,
    )
    out: Coeffs = {"M3^2": r, "sn": sn, "cs": cs, "p": p, "Omega3": -p / 4.0}
    _put(out, "b", b)
    _put(out, "a", a)
    _put(out, "n", n)
    return out


def _w_n_combine(x: FormulaInputs, c: Coeffs):
    m, u = x.m, 1.0 + x.m * x.m
    sn, cs, p = c["sn"], c["cs"], c["p"]

    def second(v1, v2, v3, v4):
        return (v1 * (sn + m * cs) - v2 * (-cs + m * sn) + v3 * (sn - m * cs) + v4 * (cs + m * sn)) / u

    a1, a2, a3, a4 = _tier(c, "a")
    h = (a1 * (cs - m * sn) - a2 * (sn + m * cs) + a3 * (cs + m * sn) - a4 * (sn - m * cs)) / (
        u * _den("psi'", p, x.t)
    )
    return h, second(a1, a2, a3, a4), second(*_tier(c, "n"))


# --- gamma-zeta-n ----------------------------------------------------------------


def _gamma_zeta_n_parts(x: FormulaInputs):
    phi1, phi2 = x.angles
    h, k1, k2 = x.h, x.k1, x.k2
    sn1, cs1 = sin_cos(phi1)
    sh2, ch2 = sinh_cosh(phi2)
    if abs(sh2.value) <= DENOMINATOR_TOL:
        raise KindDomainError("sinh(phi2) vanishes", x.t)
    g1, g2, g3 = sn1 / sh2, cs1 / sh2, ch2 / sh2
    u1 = g1.deriv() + k1 * g2
    u2 = g1 + g2.deriv() + h * g2 + k2 * g3
    u3 = g3.deriv() - h * g3
    r = -(u1 * u1) - u2 * u2 + u3 * u3 + g3 * g3
    return r, (sn1, cs1, sh2, ch2), (g1, g2, g3), (u1, u2, u3)


def _gamma_zeta_n(x: FormulaInputs) -> Coeffs:
    h, k1, k2, m = x.h, x.k1, x.k2, x.m
    r, (sn1, cs1, sh2, ch2), (g1, g2, g3), (u1, u2, u3) = _gamma_zeta_n_parts(x)
    mm = _root("M4", r, x.t)
    g = (u1 / mm, u2 / mm, u3 / mm, -g3 / mm)
    b = tuple(v / mm for v in _frenet_tier(*g, h, k1, k2))
    two_sh = 2.0 * sh2
    e = sn1 + ch2
    hh = (
        (cs1 - m * e) / two_sh,
        -(e + m * cs1) / two_sh,
        -(cs1 + m * e) / two_sh,
        (e - m * cs1) / two_sh,
    )
    f_, g_ = e / two_sh, cs1 / two_sh
    om = f_ * g_.deriv() - f_.deriv() * g_
    _den("Omega4", om, x.t)
    kk = 2.0 * (1.0 + m * m) * om
    out: Coeffs = {"M4^2": r, "sin1": sn1, "cos1": cs1, "sinh2": sh2, "cosh2": ch2, "Omega4": om}
    _put(out, "G", (g1, g2, g3))
    _put(out, "g", g)
    _put(out, "b", b)
    _put(out, "hh", hh)
    _put(out, "n", tuple(v / kk for v in hh))
    return out


def _gamma_zeta_n_combine(x: FormulaInputs, c: Coeffs):
    h0, k1_, k2_, m = x.h, x.k1, x.k2, x.m
    u = 1.0 + m * m
    sn1, cs1, sh2, ch2, om = c["sin1"], c["cos1"], c["sinh2"], c["cosh2"], c["Omega4"]
    e = sn1 + ch2
    kk = 2.0 * u * om
    b1, b2, b3, b4 = _tier(c, "b")
    e1, e2, e3, e4 = _frenet_tier(*_tier(c, "hh"), h0, k1_, k2_)
    r1, r2, r3, r4 = _frenet_tier(*_tier(c, "n"), h0, k1_, k2_)
    h = (-b1 * (cs1 - m * e) + b2 * (e + m * cs1) - b3 * (cs1 + m * e) + b4 * (e - m * cs1)) / (
        4.0 * u * om * sh2
    )
    k1 = (-b1 * e1 - b2 * e2 + b3 * e3 + b4 * e4) / kk
    k2 = (-r1 * e1 - r2 * e2 + r3 * e3 + r4 * e4) / kk
    return h, k1, k2


# --- xi-n-w ----------------------------------------------------------------------


def _xi_n_w_radicand(x: FormulaInputs) -> Jet:
    phi, h, k1, k2 = x.angles[0], x.h, x.k1, x.k2
    s, c = sinh_cosh(phi)
    p = phi.deriv()
    return 0.5 * (
        -((k1 * s + k2) * (k1 * s + k2))
        - ((p - k2) * c + h * s) * ((p - k2) * c + h * s)
        + (h + k1 * c) * (h + k1 * c)
        + (p * s - 1.0) * (p * s - 1.0)
    )


def _xi_n_w(x: FormulaInputs) -> Coeffs:
    phi = x.angles[0]
    h, k1, k2 = x.h, x.k1, x.k2
    s, c = sinh_cosh(phi)
    p = phi.deriv()
    a = (
        (k1 * s + k2) / SQRT2,
        ((p - k2) * c + h * s) / SQRT2,
        -(h + k1 * c) / SQRT2,
        (p * s - 1.0) / SQRT2,
    )
    a1, a2, a3, a4 = a
    r = _xi_n_w_radicand(x)
    mm = _root("M5", r, x.t)
    lead = mm.deriv() / (mm * mm)
    cc = (
        -lead * a1 + (a1.deriv() + a2 * k1 + a3 * k2) / mm,
        -lead * a2 + (a1 + a2.deriv() + h * a2 - k2 * a4) / mm,
        -lead * a3 + (a3.deriv() - h * a3 - k1 * a4) / mm,
        -lead * a4 + (a4.deriv() - a3) / mm,
    )
    out: Coeffs = {"M5^2": r, "E": s + c, "P": p, "Omega5": p * (s + c) / 8.0}
    _put(out, "a", a)
    _put(out, "c", cc)
    return out


def _xi_n_w_combine(x: FormulaInputs, c: Coeffs):
    m, u = x.m, 1.0 + x.m * x.m
    e, p = c["E"], c["P"]
    _den("E", e, x.t)
    _den("Phi'", p, x.t)
    c1, c2, c3, c4 = _tier(c, "c")
    r2 = SQRT2
    h = (
        4.0
        * (
            -c1 * (e / (2.0 * r2) - m / r2)
            + c2 * (1.0 / r2 + m * e / (2.0 * r2))
            - c3 * (e / (2.0 * r2) + m / r2)
            + c4 * (1.0 / r2 - m * e / (2.0 * r2))
        )
        / (u * p * e)
    )
    k1 = -r2 * (-c1 * e + c2 * m * e - c3 * e - c4 * m * e) / (u * e)
    gp = VecJet(e - 2.0 * m, -2.0 - m * e, -e - 2.0 * m, 2.0 - m * e) / (2.0 * r2)
    n5 = gp * (4.0 / (u * p * e))
    k2 = -4.0 / (u * e * p) * inner(n5.deriv(), gp.deriv())
    return h, k1, k2


# --- gamma-xi-w ------------------------------------------------------------------


def _gamma_xi_w_parts(x: FormulaInputs):
    w1, w2 = x.angles
    h, k1, k2 = x.h, x.k1, x.k2
    sh1, ch1 = sinh_cosh(w1)
    sn2, cs2 = sin_cos(w2)
    g1, g2, g3 = sh1 * sn2, sh1 * cs2, ch1
    u1 = g1.deriv() + g2 * k1
    u2 = g1 + g2.deriv() + h * g2 - k2 * g3
    u3 = -k1 * g3
    u4 = g3.deriv()
    tail = u4 if x.literal else u4 * u4
    r = -(u1 * u1) - u2 * u2 + u3 * u3 + tail
    return r, (sh1, ch1, sn2, cs2), (g1, g2, g3), (u1, u2, u3, u4)


def _gamma_xi_w(x: FormulaInputs) -> Coeffs:
    w1, w2 = x.angles
    h, k1, k2, m = x.h, x.k1, x.k2, x.m
    r, (sh1, ch1, sn2, cs2), (g1, g2, g3), (u1, u2, u3, u4) = _gamma_xi_w_parts(x)
    mm = _root("M6", r, x.t)
    alpha = (u1 / mm, u2 / mm, u3 / mm, u4 / mm)
    b = tuple(v / mm for v in _frenet_tier(*alpha, h, k1, k2))
    om = 0.5 * (-w1.deriv() * (sn2 + cs2) - 0.5 * w2.deriv() * (cs2 - sn2) * sinh(2.0 * w1))
    _den("Omega6", om, x.t)
    tt = sn2 + cs2
    cc = (
        0.5 * (ch1 - m * sh1 * tt),
        0.5 * (-sh1 * tt - m * ch1),
        0.5 * (-ch1 - m * sh1 * tt),
        0.5 * (sh1 * tt - m * ch1),
    )
    kk = 2.0 * (1.0 + m * m) * om
    out: Coeffs = {"M6^2": r, "Omega6": om}
    _put(out, "G", (g1, g2, g3))
    _put(out, "alpha", alpha)
    _put(out, "b", b)
    _put(out, "c", cc)
    _put(out, "n", tuple(v / kk for v in cc))
    return out


def _gamma_xi_w_combine(x: FormulaInputs, c: Coeffs):
    h0, k1_, k2_, m = x.h, x.k1, x.k2, x.m
    kk = 2.0 * (1.0 + m * m) * c["Omega6"]
    b1, b2, b3, b4 = _tier(c, "b")
    c1, c2, c3, c4 = _tier(c, "c")
    e1, e2, e3, e4 = _frenet_tier(c1, c2, c3, c4, h0, k1_, k2_)
    r1, r2, r3, r4 = _frenet_tier(*_tier(c, "n"), h0, k1_, k2_)
    h = (-b1 * c1 - b2 * c2 + b3 * c3 + b4 * c4) / kk
    k1 = -(-b1 * e1 - b2 * e2 + b3 * e3 + b4 * e4) / kk
    k2 = -(-r1 * e1 - r2 * e2 + r3 * e3 + r4 * e4) / kk
    return h, k1, k2


# --- gamma-xi-n-w ----------------------------------------------------------------


def _gamma_xi_n_w_alpha(x: FormulaInputs):
    w1, w2 = x.angles
    h, k1, k2 = x.h, x.k1, x.k2
    sh1, ch1 = sinh_cosh(w1)
    sh2, ch2 = sinh_cosh(w2)
    d1, d2 = w1.deriv(), w2.deriv()
    return (
        (d1 * ch1 + sh2 * k1 - k2 * ch2) / SQRT2,
        (sh1 + d2 * ch2 + h * sh2 - k2 * ch1) / SQRT2,
        (d2 * sh2 - h * ch2 - k1 * ch1) / SQRT2,
        (-ch2 + d1 * sh1) / SQRT2,
    )


def _gamma_xi_n_w_radicand(x: FormulaInputs) -> Jet:
    a1, a2, a3, a4 = _gamma_xi_n_w_alpha(x)
    return -(a1 * a1) - a2 * a2 + a3 * a3 + a4 * a4


def _gamma_xi_n_w(x: FormulaInputs) -> Coeffs:
    w1, w2 = x.angles
    h, k1, k2 = x.h, x.k1, x.k2
    sh1, ch1 = sinh_cosh(w1)
    sh2, ch2 = sinh_cosh(w2)
    d1, d2 = w1.deriv(), w2.deriv()
    alpha = _gamma_xi_n_w_alpha(x)
    r = _gamma_xi_n_w_radicand(x)
    mm = _root("M7", r, x.t)
    b = tuple(v / mm for v in alpha)
    third = alpha[2] if x.literal else b[2]
    cc = tuple(v / mm for v in _frenet_tier(*b, h, k1, k2, third=third))
    f_ = (sh1 + ch2) / (2.0 * SQRT2)
    g_ = (sh2 + ch1) / (2.0 * SQRT2)
    om = ((d1 + d2) * sinh(w1 - w2) - d1 + d2) / 8.0
    _den("Omega7", om, x.t)
    out: Coeffs = {"M7^2": r, "f": f_, "g": g_, "Omega7": om}
    _put(out, "alpha", alpha)
    _put(out, "b", b)
    _put(out, "c", cc)
    return out


def _gamma_xi_n_w_combine(x: FormulaInputs, c: Coeffs):
    m = x.m
    f_, g_, om = c["f"], c["g"], c["Omega7"]
    kk = 2.0 * (1.0 + m * m) * om
    fp, gp = f_.deriv(), g_.deriv()
    c1, c2, c3, c4 = _tier(c, "c")
    h = (-c1 * (g_ - m * f_) + c2 * (f_ + m * g_) - c3 * (g_ + m * f_) + c4 * (f_ - m * g_)) / kk
    k1 = (c1 * (gp - m * fp) - c2 * (fp + m * gp) + c3 * (gp + m * fp) - c4 * (fp - m * gp)) / kk
    lg = om.deriv() / om
    pairs = (
        (-1.0, g_ - m * f_, gp - m * fp),
        (-1.0, f_ + m * g_, fp + m * gp),
        (1.0, g_ + m * f_, gp + m * fp),
        (1.0, f_ - m * g_, fp - m * gp),
    )
    k2 = sum(sign * (-lg * v + dv) * dv for sign, v, dv in pairs) / (kk * kk)
    return h, k1, k2


_TABLES: dict[K, tuple[Callable[[FormulaInputs], Coeffs], Callable]] = {
    K.GAMMA_W: (_gamma_w, _gamma_w_combine),
    K.XI_N: (_xi_n, _xi_n_combine),
    K.W_N: (_w_n, _w_n_combine),
    K.GAMMA_ZETA_N: (_gamma_zeta_n, _gamma_zeta_n_combine),
    K.XI_N_W: (_xi_n_w, _xi_n_w_combine),
    K.GAMMA_XI_W: (_gamma_xi_w, _gamma_xi_w_combine),
    K.GAMMA_XI_N_W: (_gamma_xi_n_w, _gamma_xi_n_w_combine),
}


def coefficients(kind: K, x: FormulaInputs) -> Coeffs:
    """Every named intermediate of the family's table, as jets."""
    return _TABLES[kind][0](x)


def combine(kind: K, x: FormulaInputs, coeffs: Coeffs) -> tuple[float, float, float]:
    h, k1, k2 = _TABLES[kind][1](x, coeffs)
    return (_value(h), _value(k1), _value(k2))


def _value(v) -> float:
    return v.value if isinstance(v, Jet) else float(v)


_RADICANDS: dict[K, Callable[[FormulaInputs], Jet]] = {
    K.GAMMA_W: _gamma_w_radicand,
    K.XI_N: _xi_n_radicand,
    K.W_N: _w_n_radicand,
    K.GAMMA_ZETA_N: lambda x: _gamma_zeta_n_parts(x)[0],
    K.XI_N_W: _xi_n_w_radicand,
    K.GAMMA_XI_W: lambda x: _gamma_xi_w_parts(x)[0],
    K.GAMMA_XI_N_W: _gamma_xi_n_w_radicand,
}


def normalizer_radicand(kind: K, x: FormulaInputs) -> float:
    """Signed radicand of the family's normalizer; zero and negative values are returned as is."""
    return _RADICANDS[kind](x).value


def curvature_table(kind: K, x: FormulaInputs) -> tuple[float, float, float]:
    return combine(kind, x, coefficients(kind, x))


def zero_linear_tier(kind: K, coeffs: Coeffs) -> Coeffs:
    """Copy of ``coeffs`` with the tier feeding ``h`` and ``k1`` set to zero."""
    out = dict(coeffs)
    prefix = LINEAR_TIER[kind]
    for i in range(1, 5):
        key = f"{prefix}{i}"
        v = out[key]
        out[key] = v * 0.0
    return out
