"""Smarandache curves built from the natural frame of a canonical null curve.

Positions of the seven families (``s``/``c`` are sinh/cosh):

    gamma-w       s(psi) gamma + c(psi) W
    xi-n          s(psi) xi + c(psi) N
    w-n           sin(psi) N + cos(psi) W
    gamma-zeta-n  (sin(phi1) gamma + cos(phi1) xi + c(phi2) N) / s(phi2)
    xi-n-w        (s(phi3) xi + N + c(phi3) W) / sqrt(2)
    gamma-xi-w    s(w1) sin(w2) gamma + s(w1) cos(w2) xi + c(w1) W
    gamma-xi-n-w  (s(w1) gamma + s(w2) xi + c(w2) N + c(w1) W) / sqrt(2)

The derived curve is audited two ways: the closed-form tables in
:mod:`nullcone.formulas`, and a definitional oracle that applies the perp
frame construction directly to the derived position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import formulas
from .curve import ConeCurve
from .errors import (
    ConfigError,
    DomainError,
    InvalidInputError,
    KindDomainError,
    SingularError,
)
from .expr import Expr, as_expr, jet_eval, to_text
from .frame import (
    DEFAULT_PAIRING_TOL,
    CurvatureTriple,
    curvatures,
    curvatures_from_jets,
    fd_vector,
    frame_from_position,
    gram_residuals,
)
from .jet import MAX_ORDER, Jet, VecJet, combine, sin_cos, sinh_cosh
from .kinds import FormulaMode, SmarandacheKind, parse_kind, parse_mode
from .metric import PerpVariant, Vec4, inner

__all__ = [
    "AngleSet",
    "SmarandacheSpec",
    "derived_curve",
    "smarandache_curve",
    "derived_tangent",
    "fd_tangent",
    "closed_form_radicand",
    "closed_form_curvatures",
    "oracle_curvatures",
    "comparison_report",
    "self_test_point",
]

MATCH_TOL = 1e-6
SELF_TEST_TOL = 1e-9
KIND_DOMAIN_TOL = 1e-12
INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class AngleSet:
    kind: SmarandacheKind
    exprs: tuple[Expr, ...]

    def __post_init__(self):
        kind = parse_kind(self.kind)
        exprs = tuple(as_expr(e) for e in self.exprs)
        if len(exprs) != kind.arity:
            raise ConfigError(
                f"{kind.value} takes {kind.arity} angle function(s) "
                f"({', '.join(kind.angle_names)}), got {len(exprs)}"
            )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "exprs", exprs)

    def jets(self, t: float, order: int) -> tuple[Jet, ...]:
        out = []
        for name, e in zip(self.kind.angle_names, self.exprs):
            try:
                out.append(jet_eval(e, t, order))
            except DomainError as exc:
                raise DomainError(f"{name}: {exc.message}", exc.offset, t) from None
        return tuple(out)

    def describe(self) -> dict[str, str]:
        return {name: to_text(e) for name, e in zip(self.kind.angle_names, self.exprs)}


@dataclass(frozen=True)
class SmarandacheSpec:
    base: ConeCurve
    kind: SmarandacheKind
    angles: AngleSet

    def __post_init__(self):
        kind = parse_kind(self.kind)
        if self.base.kind != "canonical":
            raise InvalidInputError("Smarandache curves need a canonical base curve")
        angles = self.angles
        if not isinstance(angles, AngleSet):
            angles = AngleSet(kind, tuple(angles))
        elif angles.kind is not kind:
            raise ConfigError(f"angle set is for {angles.kind.value}, spec is {kind.value}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "angles", angles)

    @property
    def m(self) -> float:
        return self.base.generator.m

    def describe(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "base": self.base.generator.describe(), "angles": self.angles.describe()}


# --- positions -------------------------------------------------------------------


def _position_jet(spec: SmarandacheSpec, t: float, order: int) -> VecJet:
    fj = frame_from_position(spec.base.jet(t, order + 1), t)
    g, xi, n, w = fj.gamma, fj.xi, fj.N, fj.W
    a = spec.angles.jets(t, order)
    kind = spec.kind
    if kind is SmarandacheKind.GAMMA_W:
        s, c = sinh_cosh(a[0])
        return combine([(s, g), (c, w)])
    if kind is SmarandacheKind.XI_N:
        s, c = sinh_cosh(a[0])
        return combine([(s, xi), (c, n)])
    if kind is SmarandacheKind.W_N:
        s, c = sin_cos(a[0])
        return combine([(s, n), (c, w)])
    if kind is SmarandacheKind.GAMMA_ZETA_N:
        s1, c1 = sin_cos(a[0])
        s2, c2 = sinh_cosh(a[1])
        if abs(s2.value) <= KIND_DOMAIN_TOL:
            raise KindDomainError("sinh(phi2) vanishes", t)
        return combine([(s1 / s2, g), (c1 / s2, xi), (c2 / s2, n)])
    if kind is SmarandacheKind.XI_N_W:
        s, c = sinh_cosh(a[0])
        return combine([(s, xi), (Jet.const(1.0, order), n), (c, w)]) * INV_SQRT2
    if kind is SmarandacheKind.GAMMA_XI_W:
        s1, c1 = sinh_cosh(a[0])
        s2, c2 = sin_cos(a[1])
        return combine([(s1 * s2, g), (s1 * c2, xi), (c1, w)])
    if kind is SmarandacheKind.GAMMA_XI_N_W:
        s1, c1 = sinh_cosh(a[0])
        s2, c2 = sinh_cosh(a[1])
        return combine([(s1, g), (s2, xi), (c2, n), (c1, w)]) * INV_SQRT2
    raise ConfigError(f"unsupported kind {kind!r}")


def derived_curve(spec: SmarandacheSpec) -> ConeCurve:
    """The derived curve as a :class:`ConeCurve`; jets up to order ``MAX_ORDER - 2``."""

    def position(t: float, order: int) -> VecJet:
        if order > MAX_ORDER - 2:
            raise InvalidInputError(f"derived curves support jets up to order {MAX_ORDER - 2}")
        return _position_jet(spec, t, order)

    return ConeCurve(position, ("derived", spec))


def smarandache_curve(spec: SmarandacheSpec, t: float) -> Vec4:
    return _position_jet(spec, t, 0).value()


def derived_tangent(spec: SmarandacheSpec, t: float) -> tuple[Vec4, float]:
    """Tangent of the derived curve and its signature norm squared."""
    v = _position_jet(spec, t, 1).derivative_value(1)
    return v, inner(v, v)


def fd_tangent(spec: SmarandacheSpec, t: float, h: float | None = None) -> Vec4:
    """Tangent from central differences of point evaluations of the derived curve."""
    return fd_vector(lambda s: smarandache_curve(spec, s), t, 1, h)


# --- closed-form tables ----------------------------------------------------------


def base_curvature_jets(base: ConeCurve, t: float) -> tuple[Jet, Jet, Jet]:
    """``(h, k1, k2)`` of the base curve as order-2 jets."""
    pos = base.jet(t, MAX_ORDER)
    fj = frame_from_position(pos, t)
    acc = pos.deriv().deriv()
    return inner(acc, fj.N), inner(acc, fj.W), inner(fj.N.deriv(), fj.W)


def formula_inputs(spec: SmarandacheSpec, t: float, mode=FormulaMode.LITERAL) -> formulas.FormulaInputs:
    h, k1, k2 = base_curvature_jets(spec.base, t)
    return formulas.FormulaInputs(t, h, k1, k2, spec.m, spec.angles.jets(t, MAX_ORDER), parse_mode(mode))


def closed_form_radicand(spec: SmarandacheSpec, t: float, mode=FormulaMode.LITERAL) -> float:
    """Signed radicand of the closed-form normalizer."""
    return formulas.normalizer_radicand(spec.kind, formula_inputs(spec, t, mode))


def closed_form_curvatures(spec: SmarandacheSpec, t: float, mode=FormulaMode.LITERAL) -> CurvatureTriple:
    """Curvature triple from the closed-form tables."""
    return CurvatureTriple(*formulas.curvature_table(spec.kind, formula_inputs(spec, t, mode)))


# --- definitional oracle ---------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    t: float
    curvatures: CurvatureTriple
    residuals: dict[str, float]
    pairing: float

    @property
    def axioms_hold(self) -> bool:
        return max(self.residuals.values()) <= 1e-9


def _curve_of(target) -> ConeCurve:
    if isinstance(target, SmarandacheSpec):
        return derived_curve(target)
    if isinstance(target, ConeCurve):
        return target
    raise InvalidInputError(f"expected a SmarandacheSpec or ConeCurve, got {type(target).__name__}")


def oracle_curvatures(
    target,
    t: float,
    perp_variant: PerpVariant = PerpVariant.P14,
    pairing_tol: float = DEFAULT_PAIRING_TOL,
) -> OracleResult:
    """Curvatures of the perp frame built on the curve itself, plus its ten pairing residuals.

    ``target`` is a spec (the derived curve is used) or any curve. The
    residuals are reported whatever their size; derived curves are not null
    in general. ``perp_variant`` replaces the perp in the numerators of N and
    W and exists for negative controls.
    """
    pos = _curve_of(target).jet(t, 2)
    fj = frame_from_position(pos, t, pairing_tol, numerator=perp_variant)
    return OracleResult(t, curvatures_from_jets(fj, pos), gram_residuals(fj.frame()), fj.pairing.value)


# --- comparison report -----------------------------------------------------------

VERDICTS = ("match", "mismatch", "singular", "domain-error")


@dataclass(frozen=True)
class ComparisonRecord:
    t: float
    verdict: str
    closed_form: CurvatureTriple | None = None
    oracle: CurvatureTriple | None = None
    radicand: float | None = None
    tangent_norm_sq: float | None = None
    residuals: dict[str, float] | None = None
    detail: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "verdict": self.verdict,
            "closed_form": None if self.closed_form is None else list(self.closed_form.as_tuple()),
            "oracle": None if self.oracle is None else list(self.oracle.as_tuple()),
            "radicand": {"closed_form": self.radicand, "definitional": self.tangent_norm_sq},
            "axiom_residuals": self.residuals,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ComparisonReport:
    spec: SmarandacheSpec
    mode: FormulaMode
    tol: float
    records: tuple[ComparisonRecord, ...]
    self_test: tuple[ComparisonRecord, ...] = field(default=())

    def summary(self) -> dict[str, int]:
        counts = {v: 0 for v in VERDICTS}
        for r in self.records:
            counts[r.verdict] += 1
        return counts

    def self_test_summary(self) -> dict[str, int]:
        counts = {v: 0 for v in VERDICTS}
        for r in self.self_test:
            counts[r.verdict] += 1
        return counts

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec.describe(),
            "formula_mode": self.mode.value,
            "corrections": list(formulas.CORRECTIONS[self.spec.kind]) if self.mode is FormulaMode.CORRECTED else [],
            "readings": list(formulas.READINGS[self.spec.kind]),
            "tolerance": self.tol,
            "records": [r.to_dict() for r in self.records],
            "self_test": [r.to_dict() for r in self.self_test],
            "summary": self.summary(),
            "self_test_summary": self.self_test_summary(),
        }


def _close(a: CurvatureTriple, b: CurvatureTriple, tol: float) -> bool:
    return all(abs(x - y) <= tol * max(1.0, abs(y)) for x, y in zip(a.as_tuple(), b.as_tuple()))


def _compare_point(spec: SmarandacheSpec, t: float, mode: FormulaMode, tol: float) -> ComparisonRecord:
    radicand = norm_sq = None
    try:
        radicand = closed_form_radicand(spec, t, mode)
        norm_sq = derived_tangent(spec, t)[1]
        closed = closed_form_curvatures(spec, t, mode)
        oracle = oracle_curvatures(spec, t)
    except SingularError as exc:
        return ComparisonRecord(t, "singular", radicand=radicand, tangent_norm_sq=norm_sq, detail=str(exc))
    except (DomainError, InvalidInputError) as exc:
        return ComparisonRecord(t, "domain-error", radicand=radicand, tangent_norm_sq=norm_sq, detail=str(exc))
    if not closed.is_finite() or not oracle.curvatures.is_finite():
        return ComparisonRecord(
            t, "domain-error", None, None, radicand, norm_sq, oracle.residuals, "non-finite curvature"
        )
    verdict = "match" if _close(closed, oracle.curvatures, tol) else "mismatch"
    return ComparisonRecord(t, verdict, closed, oracle.curvatures, radicand, norm_sq, oracle.residuals)


def self_test_point(
    base: ConeCurve, t: float, perp_variant: PerpVariant = PerpVariant.P14, tol: float = SELF_TEST_TOL
) -> ComparisonRecord:
    """Run the oracle on the base curve and compare with the frame module's curvatures.

    A match additionally requires the oracle's frame to satisfy the pairing
    conditions, so a broken perp cannot pass by accident.
    """
    try:
        expected = curvatures(base, t)
        got = oracle_curvatures(base, t, perp_variant)
    except SingularError as exc:
        return ComparisonRecord(t, "singular", detail=str(exc))
    except (DomainError, InvalidInputError) as exc:
        return ComparisonRecord(t, "domain-error", detail=str(exc))
    ok = _close(got.curvatures, expected, tol) and max(got.residuals.values()) <= tol
    return ComparisonRecord(
        t, "match" if ok else "mismatch", expected, got.curvatures, residuals=got.residuals
    )


def comparison_report(
    spec: SmarandacheSpec,
    grid: Sequence[float],
    mode=FormulaMode.LITERAL,
    tol: float = MATCH_TOL,
    self_test: bool = True,
) -> ComparisonReport:
    """Closed-form against definitional curvatures at every grid point, in grid order."""
    if len(grid) == 0:
        raise ConfigError("grid must be nonempty")
    if not tol > 0:
        raise ConfigError(f"tolerance must be > 0, got {tol!r}")
    mode = parse_mode(mode)
    records = tuple(_compare_point(spec, float(t), mode, tol) for t in grid)
    st = tuple(self_test_point(spec.base, float(t)) for t in grid) if self_test else ()
    return ComparisonReport(spec, mode, tol, records, st)
