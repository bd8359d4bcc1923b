import json
import math

import pytest

from nullcone.curve import GeneratorPair, canonical_curve, explicit_curve, fixture, grid
from nullcone.errors import (
    ConfigError,
    ExprSyntaxError,
    InvalidInputError,
    KindDomainError,
    TableDenominatorError,
)
from nullcone.frame import build_frame, curvatures
from nullcone.kinds import FormulaMode, SmarandacheKind, parse_kind
from nullcone.metric import PerpVariant, inner
from nullcone.smarandache import (
    AngleSet,
    SmarandacheSpec,
    comparison_report,
    derived_curve,
    derived_tangent,
    fd_tangent,
    oracle_curvatures,
    closed_form_curvatures,
    closed_form_radicand,
    self_test_point,
    smarandache_curve,
)

K = SmarandacheKind
SAMPLE_ANGLES = {
    K.GAMMA_W: ("0.5*t",),
    K.XI_N: ("0.3 + t/2",),
    K.W_N: ("t/3",),
    K.GAMMA_ZETA_N: ("t", "1 + t/4"),
    K.XI_N_W: ("0.4*t",),
    K.GAMMA_XI_W: ("t/2", "0.2 - t"),
    K.GAMMA_XI_N_W: ("t", "0.5*t"),
}


def spec(kind, angles, base=None):
    base = base or canonical_curve(fixture("hyperbolic", 1.0, 2.0))
    return SmarandacheSpec(base, kind, AngleSet(kind, angles))


def close(u, v, tol):
    return (u - v).max_abs() <= tol


@pytest.mark.parametrize("t", grid(-1.5, 1.5, 13))
def test_collapse_identities(t):
    base = canonical_curve(fixture("hyperbolic", 1.0, 2.0))
    fr = build_frame(base, t)
    s = math.sqrt(0.5)
    assert close(smarandache_curve(spec(K.GAMMA_W, ("0",), base), t), fr.W, 1e-12)
    assert close(smarandache_curve(spec(K.XI_N, ("0",), base), t), fr.N, 1e-12)
    assert close(smarandache_curve(spec(K.W_N, ("0",), base), t), fr.W, 1e-12)
    assert close(smarandache_curve(spec(K.XI_N_W, ("0",), base), t), (fr.N + fr.W) * s, 1e-12)
    assert close(smarandache_curve(spec(K.GAMMA_XI_N_W, ("0", "0"), base), t), (fr.N + fr.W) * s, 1e-12)


def test_gamma_w_at_zero_is_w():
    assert smarandache_curve(spec(K.GAMMA_W, ("t",)), 0.0).as_tuple() == pytest.approx((-0.4, -0.2, -0.4, 0.2))


def test_xi_n_at_zero_is_n():
    s = spec(K.XI_N, ("t",))
    assert close(smarandache_curve(s, 0.0), build_frame(s.base, 0.0).N, 1e-12)


@pytest.mark.parametrize("t", grid(-1.0, 1.0, 9))
def test_gamma_w_tangent_norms(t):
    base = canonical_curve(fixture("hyperbolic", 1.0, 0.0))
    _, n1 = derived_tangent(spec(K.GAMMA_W, ("t",), base), t)
    assert abs(n1) <= 1e-9
    s2 = spec(K.GAMMA_W, ("2*t",), base)
    v = fd_tangent(s2, t)
    expected = 3.0 * math.sinh(4.0 * t)
    assert abs(inner(v, v) - expected) <= 1e-6 * max(1.0, abs(expected))


def test_gamma_w_position_norm():
    s = spec(K.GAMMA_W, ("t",))
    for t in (-0.6, 0.0, 0.9):
        p = smarandache_curve(s, t)
        assert inner(p, p) == pytest.approx(math.sinh(2 * t), abs=1e-12)


@pytest.mark.parametrize("kind", list(K))
def test_tangent_jet_matches_fd(kind):
    s = spec(kind, SAMPLE_ANGLES[kind])
    for t in (-0.7, 0.35, 1.1):
        v, n = derived_tangent(s, t)
        fd = fd_tangent(s, t)
        assert (v - fd).max_abs() <= 1e-5 * max(1.0, v.max_abs())
        assert n == pytest.approx(inner(v, v))


def test_gamma_w_radicands():
    base = canonical_curve(fixture("hyperbolic", 1.0, 0.0))
    assert closed_form_radicand(spec(K.GAMMA_W, ("t",), base), 0.4) == pytest.approx(0.0, abs=1e-12)
    assert closed_form_radicand(spec(K.GAMMA_W, ("2*t",), base), 0.4) == pytest.approx(-3.0)


def test_zero_radicand_is_a_vanishing_denominator():
    base = canonical_curve(fixture("hyperbolic", 1.0, 0.0))
    with pytest.raises(TableDenominatorError) as info:
        closed_form_curvatures(spec(K.GAMMA_W, ("t",), base), 0.4)
    assert info.value.symbol.startswith("M1")


def test_gamma_w_closed_form_is_finite():
    base = canonical_curve(fixture("hyperbolic", 1.0, 0.0))
    tri = closed_form_curvatures(spec(K.GAMMA_W, ("2*t",), base), 0.25)
    assert tri.is_finite()


def test_omega7_vanishes_for_equal_angles():
    with pytest.raises(TableDenominatorError) as info:
        closed_form_curvatures(spec(K.GAMMA_XI_N_W, ("t", "t")), 0.5)
    assert info.value.symbol == "Omega7"


def test_gamma_zeta_n_domain():
    s = spec(K.GAMMA_ZETA_N, ("t", "t"))
    with pytest.raises(KindDomainError):
        smarandache_curve(s, 0.0)
    smarandache_curve(s, 0.5)


def test_oracle_reports_residuals_for_non_null_curves():
    res = oracle_curvatures(spec(K.GAMMA_W, ("t",)), 0.5)
    assert res.curvatures.is_finite()
    assert len(res.residuals) == 10
    assert res.residuals["<gamma,gamma>"] == pytest.approx(abs(math.sinh(1.0)), rel=1e-9)
    assert not res.axioms_hold


@pytest.mark.parametrize("t", [-0.8, 0.0, 0.6])
def test_oracle_on_base_reproduces_frame_curvatures(hyperbolic_m2, t):
    got = oracle_curvatures(hyperbolic_m2, t)
    want = curvatures(hyperbolic_m2, t)
    for a, b in zip(got.curvatures.as_tuple(), want.as_tuple()):
        assert abs(a - b) <= 1e-9
    assert got.axioms_hold
    assert self_test_point(hyperbolic_m2, t).verdict == "match"


def test_tampered_perp_self_test_fails(hyperbolic_m2):
    for t in grid(-1, 1, 5):
        rec = self_test_point(hyperbolic_m2, t, PerpVariant.P13)
        assert rec.verdict == "mismatch"
        assert rec.residuals["<xi,N>-1"] > 1e-9


def test_report_schema_and_determinism():
    s = spec(K.GAMMA_W, ("t",), canonical_curve(fixture("hyperbolic", 1.0, 0.0)))
    g = grid(-1, 1, 11)
    a = comparison_report(s, g)
    b = comparison_report(s, g)
    assert len(a.records) == 11
    assert [r.t for r in a.records] == g
    assert sum(a.summary().values()) == 11
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)
    assert a.self_test_summary()["match"] == 11


def test_report_on_trigonometric_base():
    s = spec(K.XI_N, ("t",), canonical_curve(fixture("trigonometric", 1.0, 0.0)))
    rep = comparison_report(s, grid(-1, 1, 11), FormulaMode.CORRECTED)
    assert len(rep.records) == 11
    assert rep.to_dict()["formula_mode"] == "corrected"


def test_report_arguments():
    s = spec(K.GAMMA_W, ("t",))
    with pytest.raises(ConfigError):
        comparison_report(s, [])
    with pytest.raises(ConfigError):
        comparison_report(s, [0.0], tol=-1.0)


def test_angle_set_validation():
    with pytest.raises(ExprSyntaxError):
        AngleSet(K.GAMMA_W, ("",))
    with pytest.raises(ConfigError):
        AngleSet(K.GAMMA_ZETA_N, ("t",))
    with pytest.raises(ConfigError):
        parse_kind("gamma-n")
    assert AngleSet("xi-n-w", ("t",)).describe() == {"phi3": "t"}


def test_spec_needs_canonical_base():
    with pytest.raises(InvalidInputError):
        SmarandacheSpec(explicit_curve(["t", "0", "t", "0"]), K.GAMMA_W, ("t",))


def test_derived_curve_order_limit():
    c = derived_curve(spec(K.GAMMA_W, ("t",)))
    assert c.jet(0.2, 2).order == 2
    with pytest.raises(InvalidInputError):
        c.jet(0.2, 3)


def test_general_base():
    base = canonical_curve(GeneratorPair("t + t^3/3", "1 + sin(t)/4", 0.7))
    s = spec(K.GAMMA_XI_W, ("t/2", "0.2 - t"), base)
    v, _ = derived_tangent(s, 0.3)
    assert (v - fd_tangent(s, 0.3)).max_abs() <= 1e-5 * max(1.0, v.max_abs())
