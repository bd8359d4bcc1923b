import pytest

from nullcone.curve import canonical_curve, fixture


@pytest.fixture
def hyperbolic_m2():
    return canonical_curve(fixture("hyperbolic", 1.0, 2.0))


@pytest.fixture
def trig_m0():
    return canonical_curve(fixture("trigonometric", 1.0, 0.0))
