"""Expression grammar: precedence, round-trips, typed errors."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ultrafrac import (
    ExprEvalError,
    ExprNameError,
    ExprSyntaxError,
    make_callable,
    parse_expression,
)
from ultrafrac.expr import BinOp, Call, Neg, Num, Var

MALFORMED = [
    "",
    "(",
    ")",
    "sin(x",
    "1++2",
    "2^",
    "x y",
    "1.2.3",
    "foo(x)",
    "min(1)",
    "max(1,2,3)",
    "pow(x 2)",
    "log()",
    "*x",
    "x+",
    "sin",
    "0..5",
    "r $ x",
    "1e",
    "q(2)",
]


def ev(text, r=1.0, x=0.0, q=2):
    return make_callable(parse_expression(text), q)(r, x)


def test_catalog_expression_parses_and_evaluates():
    f = make_callable(parse_expression("0.5*sin(x)*min(1, r^-2)"), 2)
    assert f(1.0, 0.0) == 0.0
    assert f(0.5, math.pi / 2) == pytest.approx(0.5, rel=1e-15)
    assert f(4.0, math.pi / 2) == pytest.approx(0.5 / 16.0, rel=1e-15)


def test_power_binds_tighter_than_unary_minus():
    assert ev("2^-2*x", x=8.0) == pytest.approx(2.0)       # (2^(-2)) * x
    assert ev("-2^2") == -4.0
    assert ev("2^3^2") == 512.0                            # right associative
    assert ev("-x^2", x=3.0) == -9.0


def test_arithmetic_precedence():
    assert ev("1-2-3") == -4.0
    assert ev("2+3*4") == 14.0
    assert ev("8/4/2") == 1.0
    assert ev("(2+3)*4") == 20.0


def test_constant_q_and_variables():
    assert ev("q^2", q=3) == pytest.approx(9.0, rel=1e-15)
    assert ev("r*x", r=2.5, x=4.0) == 10.0
    fl = make_callable(parse_expression("min(0.5, q^(-0.5*l)/2)", ("l",)), 2, ("l",))
    assert fl(4.0) == pytest.approx(min(0.5, 2.0 ** -2 / 2), rel=1e-14)


def test_functions():
    assert ev("abs(-3)+max(1,2)+min(1,2)+pow(2,3)") == 3 + 2 + 1 + 8
    assert ev("exp(0)+cos(0)+tanh(0)+sin(0)") == 2.0
    assert ev("log(exp(1))") == pytest.approx(1.0, rel=1e-15)


def test_number_forms():
    assert ev("1e-3") == 1e-3
    assert ev("2.5E+2") == 250.0
    assert ev(".5") == 0.5
    assert ev("2.") == 2.0


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_inputs_raise_typed_errors(text):
    with pytest.raises((ExprSyntaxError, ExprNameError)):
        parse_expression(text)


def test_syntax_error_carries_offset_and_expected():
    with pytest.raises(ExprSyntaxError) as err:
        parse_expression("sin(x")
    assert err.value.offset == 5
    assert ")" in err.value.expected
    with pytest.raises(ExprSyntaxError) as err2:
        parse_expression("1 + + 2")
    assert err2.value.offset == 4


def test_unknown_identifier_error():
    with pytest.raises(ExprNameError) as err:
        parse_expression("y + 1")
    assert err.value.name == "y"
    assert err.value.offset == 0
    parse_expression("l + 1", ("l",))          # declared variables are accepted
    with pytest.raises(ExprNameError):
        parse_expression("x + 1", ("l",))


def test_evaluation_errors_are_typed():
    with pytest.raises(ExprEvalError):
        ev("log(0-1)")
    with pytest.raises(ExprEvalError):
        ev("1/x", x=0.0)
    with pytest.raises(ExprEvalError):
        ev("(0-2)^0.5")
    with pytest.raises(ExprEvalError):
        ev("exp(1e9)")


def test_round_trip_on_samples():
    for text in ("0.5*sin(x)*min(1, r^-2)", "2^-2*x", "-(x+r)/q",
                 "pow(x, 2)^-1.5 - abs(r)", "max(min(x,r),0-1)"):
        tree = parse_expression(text)
        assert parse_expression(str(tree)) == tree


_leaf = st.one_of(
    st.floats(0.0, 100.0, allow_nan=False).map(Num),
    st.sampled_from(["r", "x", "q"]).map(Var),
)


def _trees(depth):
    if depth == 0:
        return _leaf
    sub = _trees(depth - 1)
    return st.one_of(
        _leaf,
        sub.map(Neg),
        st.tuples(st.sampled_from("+-*/^"), sub, sub).map(lambda t: BinOp(*t)),
        st.tuples(st.sampled_from(["sin", "cos", "tanh", "abs"]), sub).map(
            lambda t: Call(t[0], (t[1],))),
        st.tuples(st.sampled_from(["min", "max", "pow"]), sub, sub).map(
            lambda t: Call(t[0], (t[1], t[2]))),
    )


@settings(max_examples=120, deadline=None)
@given(tree=_trees(3))
def test_print_parse_round_trip(tree):
    assert parse_expression(str(tree)) == tree
