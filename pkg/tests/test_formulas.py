import math

import pytest

from nullcone import formulas
from nullcone.curve import GeneratorPair, canonical_curve, fixture
from nullcone.errors import TableDenominatorError
from nullcone.expr import jet_eval, parse
from nullcone.jet import Jet
from nullcone.kinds import FormulaMode, SmarandacheKind, parse_mode
from nullcone.smarandache import AngleSet, SmarandacheSpec, formula_inputs

K = SmarandacheKind
ANGLES = {
    K.GAMMA_W: ("0.5*t + 0.1",),
    K.XI_N: ("0.3 + t/2",),
    K.W_N: ("t/3 + 0.2",),
    K.GAMMA_ZETA_N: ("t", "1 + t/4"),
    K.XI_N_W: ("0.4*t + 0.3",),
    K.GAMMA_XI_W: ("t/2", "0.2 - t"),
    K.GAMMA_XI_N_W: ("t", "0.5*t"),
}
GENERAL = canonical_curve(GeneratorPair("t + t^3/3", "1 + sin(t)/4", 0.7))


def inputs(kind, mode=FormulaMode.LITERAL, base=GENERAL, t=0.3):
    return formula_inputs(SmarandacheSpec(base, kind, AngleSet(kind, ANGLES[kind])), t, mode)


@pytest.mark.parametrize("kind", list(K))
def test_tables_are_finite(kind):
    x = inputs(kind)
    assert all(math.isfinite(v) for v in formulas.curvature_table(kind, x))
    assert math.isfinite(formulas.normalizer_radicand(kind, x))


@pytest.mark.parametrize("kind", list(K))
@pytest.mark.parametrize("mode", list(FormulaMode))
def test_zero_linear_tier_gives_zero_h_and_k1(kind, mode):
    x = inputs(kind, mode)
    zeroed = formulas.zero_linear_tier(kind, formulas.coefficients(kind, x))
    h, k1, _ = formulas.combine(kind, x, zeroed)
    assert h == 0.0 and k1 == 0.0


def synthetic(kind, mode, t=0.3):
    # curvature jets with k2 != 0, which canonical bases never produce
    angles = tuple(jet_eval(parse(a), t, 4) for a in ANGLES[kind])
    h, k1, k2 = Jet((0.4, -0.2, 0.1)), Jet((1.3, 0.5, -0.3)), Jet((0.7, 0.25, 0.05))
    return formulas.FormulaInputs(t, h, k1, k2, 0.7, angles, mode)


def test_canonical_bases_have_vanishing_k2():
    x = inputs(K.GAMMA_W)
    assert abs(x.k2.value) <= 1e-12 and abs(x.k2.derivative(1)) <= 1e-12


@pytest.mark.parametrize("kind", list(K))
def test_modes_differ_only_where_corrections_exist(kind):
    lit = formulas.curvature_table(kind, synthetic(kind, FormulaMode.LITERAL))
    cor = formulas.curvature_table(kind, synthetic(kind, FormulaMode.CORRECTED))
    if formulas.CORRECTIONS[kind]:
        assert lit != cor
    else:
        assert lit == cor


def test_every_kind_documents_its_readings():
    for kind in K:
        assert kind in formulas.CORRECTIONS and kind in formulas.READINGS
        assert formulas.LINEAR_TIER[kind] in "abcn"


def test_gamma_w_radicand_by_hand():
    base = canonical_curve(fixture("hyperbolic", 1.0, 0.0))
    spec = SmarandacheSpec(base, K.GAMMA_W, AngleSet(K.GAMMA_W, ("2*t",)))
    for mode in FormulaMode:
        # with (h, k1, k2) = (0, 1, 0) the radicand reduces to 1 - psi'^2
        assert formulas.normalizer_radicand(K.GAMMA_W, formula_inputs(spec, 0.7, mode)) == pytest.approx(-3.0)


def test_table_denominator_error_carries_symbol():
    base = canonical_curve(fixture("hyperbolic", 1.0, 0.0))
    spec = SmarandacheSpec(base, K.GAMMA_XI_N_W, AngleSet(K.GAMMA_XI_N_W, ("t", "t")))
    with pytest.raises(TableDenominatorError) as info:
        formulas.curvature_table(K.GAMMA_XI_N_W, formula_inputs(spec, 0.1))
    assert info.value.symbol == "Omega7"
    assert info.value.value == pytest.approx(0.0, abs=1e-12)


def test_parse_mode():
    assert parse_mode("corrected") is FormulaMode.CORRECTED
    assert parse_mode(FormulaMode.LITERAL) is FormulaMode.LITERAL
