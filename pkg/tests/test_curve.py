import math

import pytest

from nullcone.curve import (
    GeneratorPair,
    canonical_curve,
    explicit_curve,
    fixture,
    grid,
    null_residuals,
    omega,
    omega_fd,
    omega_jet,
    scaled,
    validate_null,
)
from nullcone.errors import ConfigError, InvalidInputError, NullConeError

FIXTURES = [("hyperbolic", a, m) for a in (0.5, 1.0, 2.0) for m in (0.0, 1.0, 2.0)] + [
    ("trigonometric", 1.0, 0.0),
    ("trigonometric", 1.0, 2.0),
]


def test_linear_generators_position():
    c = canonical_curve(GeneratorPair("t", "1", 0.5))
    assert c.at(0.0).as_tuple() == (0.5, 1.0, -0.5, 1.0)
    assert c.at(2.0).as_tuple() == (2.5, 0.0, 1.5, 2.0)


def test_fixture_position_at_zero():
    c = canonical_curve(fixture("hyperbolic", 1.0, 2.0))
    assert c.at(0.0).as_tuple() == (1.0, 0.5, -1.0, 0.5)


@pytest.mark.parametrize(
    "gp, expected",
    [
        (fixture("hyperbolic"), -0.25),
        (GeneratorPair("cosh(t)/2", "sinh(t)/2", 0.0), 0.25),
        (fixture("trigonometric"), -0.25),
    ],
)
@pytest.mark.parametrize("t", [-1.3, 0.0, 0.7])
def test_fixture_omega(gp, expected, t):
    assert omega(gp, t) == pytest.approx(expected, abs=1e-15)
    assert omega_fd(gp, t) == pytest.approx(expected, rel=1e-7)
    assert omega_jet(gp, t).derivatives[1:] == pytest.approx((0.0, 0.0, 0.0), abs=1e-14)


@pytest.mark.parametrize("kind, a, m", FIXTURES)
def test_fixtures_are_null(kind, a, m):
    c = canonical_curve(fixture(kind, a, m))
    result = validate_null(c, grid(-2.0, 2.0, 201), tol=1e-12)
    assert result.passed
    assert result.max_residual <= 1e-12


def test_float_path_is_close_too():
    c = canonical_curve(fixture("hyperbolic", 2.0, 2.0))
    worst = max(max(null_residuals(c, t, exact=False)) for t in grid(-2.0, 2.0, 201))
    assert worst <= 1e-10


def test_broken_construction_is_detected():
    # f + 2 m g in the first slot takes the curve off the cone
    c = explicit_curve(["sinh(t)/2 + 2*2*cosh(t)/2", "cosh(t)/2 - 2*sinh(t)/2",
                        "sinh(t)/2 - 2*cosh(t)/2", "cosh(t)/2 + 2*sinh(t)/2"])
    result = validate_null(c, grid(-1.0, 1.0, 11))
    assert not result.passed
    assert result.max_residual > 1.0


def test_domain_errors_are_recorded_per_point():
    c = canonical_curve(GeneratorPair("1/t", "1", 0.0))
    result = validate_null(c, [-1.0, 0.0, 1.0])
    assert [p.error is None for p in result.points] == [True, False, True]
    assert not result.passed


def test_validate_null_arguments():
    c = canonical_curve(fixture("hyperbolic"))
    with pytest.raises(ConfigError):
        validate_null(c, [])
    with pytest.raises(ConfigError):
        validate_null(c, [0.0], tol=0.0)


def test_fixture_errors():
    with pytest.raises(ConfigError):
        fixture("hyperbolic", 0.0)
    with pytest.raises(ConfigError):
        fixture("elliptic")


def test_generator_pair_validation():
    with pytest.raises(InvalidInputError):
        GeneratorPair("t", "t", math.nan)
    with pytest.raises(InvalidInputError):
        GeneratorPair("0", "0*t", 0.0).check_window(grid(-1, 1, 5))
    GeneratorPair("t", "0", 0.0).check_window(grid(-1, 1, 5))


def test_scaling_scales_omega_quadratically():
    gp = fixture("hyperbolic", 1.0, 1.0)
    s = scaled(gp, 3.0)
    assert omega(s, 0.4) == pytest.approx(9.0 * omega(gp, 0.4))
    assert validate_null(canonical_curve(s), grid(-2, 2, 41)).passed


def test_explicit_curve_has_no_generator():
    c = explicit_curve(["t", "0", "t", "0"])
    with pytest.raises(NullConeError):
        c.generator
    with pytest.raises(InvalidInputError):
        explicit_curve(["t", "t"])


def test_grid():
    assert grid(-1, 1, 3) == [-1.0, 0.0, 1.0]
    g = grid(-2, 2, 201)
    assert len(g) == 201 and g[100] == 0.0 and g[-1] == 2.0
    with pytest.raises(ConfigError):
        grid(0, 1, 0)
