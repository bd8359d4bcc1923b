import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nullcone.errors import DomainError, ExprSyntaxError, InvalidInputError, UnknownIdentifierError
from nullcone.expr import (
    Call,
    Const,
    Div,
    Minus,
    Neg,
    Param,
    Plus,
    Pow,
    Times,
    central_difference,
    evaluate,
    fd_derivative,
    jet_eval,
    parse,
    to_text,
)

T = Param()


@pytest.mark.parametrize(
    "src, tree",
    [
        ("2*t+1", Plus(Times(Const(2.0), T), Const(1.0))),
        ("sinh(t)/2", Div(Call("sinh", T), Const(2.0))),
        ("-t^2", Neg(Pow(T, 2))),
        ("t**-3", Pow(T, -3)),
        ("1 - t - t", Minus(Minus(Const(1.0), T), T)),
        ("2*pi", Times(Const(2.0), Const(math.pi))),
    ],
)
def test_parse(src, tree):
    assert parse(src) == tree


@pytest.mark.parametrize(
    "src, offset",
    [
        ("sin(t", 6),
        ("", 1),
        ("2 +", 4),
        ("t ^ 1.5", 5),
        ("(t))", 4),
        ("2t", 2),
    ],
)
def test_syntax_errors(src, offset):
    with pytest.raises(ExprSyntaxError) as info:
        parse(src)
    assert info.value.offset == offset


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError) as info:
        parse("t + x")
    assert info.value.offset == 5
    with pytest.raises(UnknownIdentifierError):
        parse("tan(t)")


def test_offsets_are_bytes():
    with pytest.raises(ExprSyntaxError) as info:
        parse("t + é")
    assert info.value.offset == 5


def test_jet_eval_examples():
    assert jet_eval(parse("sinh(t)"), 0.0, 3).derivatives == pytest.approx((0, 1, 0, 1))
    assert jet_eval(parse("7"), 3.0, 2).derivatives == (7.0, 0.0, 0.0)


def test_jet_eval_matches_fd():
    e = parse("t*t*cos(t)")
    jets = jet_eval(e, 0.3, 2).derivatives
    for j in (1, 2):
        fd = fd_derivative(e, 0.3, j)
        assert abs(jets[j] - fd) <= 1e-6 * max(1.0, abs(jets[j]))


def test_jet_eval_order_bounds():
    with pytest.raises(InvalidInputError):
        jet_eval(T, 0.0, 5)
    with pytest.raises(InvalidInputError):
        jet_eval(T, 0.0, -1)


def test_domain_error_location():
    with pytest.raises(DomainError) as info:
        jet_eval(parse("1 + 1/t"), 0.0, 1)
    assert info.value.offset == 6
    assert info.value.t == 0.0
    with pytest.raises(DomainError):
        evaluate(parse("sqrt(t - 2)"), 0.0)


@pytest.mark.parametrize(
    "src, t, j, expected, tol",
    [
        ("t", 0.7, 1, 1.0, 1e-10),
        ("cosh(t)", 0.0, 2, 1.0, 1e-6),
        ("sin(2*t)", 0.5, 1, 2 * math.cos(1.0), 1e-7),
    ],
)
def test_fd_examples(src, t, j, expected, tol):
    assert abs(fd_derivative(parse(src), t, j) - expected) <= tol


def test_fd_higher_orders():
    e = parse("exp(0.5*t)")
    for j in (3, 4):
        assert fd_derivative(e, 0.2, j) == pytest.approx(0.5**j * math.exp(0.1), rel=1e-4)


def test_fd_rejects_bad_arguments():
    with pytest.raises(InvalidInputError):
        central_difference(math.sin, 0.0, 5)
    with pytest.raises(InvalidInputError):
        central_difference(math.sin, 0.0, 1, h=0.0)


def test_fd_propagates_domain_errors():
    with pytest.raises(DomainError):
        # the second-order stencil samples the centre point
        fd_derivative(parse("1/t"), 0.0, 2)


# -- randomized expression trees ------------------------------------------------

SAFE_FUNCS = ("sin", "cos", "sinh", "cosh", "exp")


def trees(max_leaves=8):
    leaves = st.one_of(
        st.just(T),
        st.floats(min_value=0.1, max_value=3.0).map(lambda x: Const(round(x, 3))),
    )

    def extend(children):
        return st.one_of(
            st.builds(Plus, children, children),
            st.builds(Minus, children, children),
            st.builds(Times, children, children),
            st.builds(Neg, children),
            st.builds(Pow, children, st.integers(min_value=0, max_value=3)),
            st.builds(lambda f, a: Call(f, Times(Const(0.3), a)), st.sampled_from(SAFE_FUNCS), children),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@given(trees())
def test_print_parse_round_trip(tree):
    assert parse(to_text(tree)) == tree
    assert parse(to_text(parse(to_text(tree)))) == parse(to_text(tree))


@given(st.sampled_from(["2*t+1", "-t^2*sinh(t)/(1+t*t)", "exp(-t)-cos(2*t)^3", "sqrt(1+t^2)"]))
def test_text_round_trip(src):
    assert parse(to_text(parse(src))) == parse(src)


@settings(max_examples=200, deadline=None)
@given(trees(), st.floats(min_value=-1.0, max_value=1.0))
def test_jets_agree_with_fd(tree, t):
    try:
        jets = jet_eval(tree, t, 2).derivatives
    except DomainError:
        return
    if max(abs(x) for x in jets) > 1e6:
        return
    for j in (1, 2):
        fd = fd_derivative(tree, t, j)
        assert abs(jets[j] - fd) <= 1e-5 * max(1.0, abs(jets[j]))
