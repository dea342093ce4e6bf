"""Expression core: parsing, printing, evaluation, sorts."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caviar.expr import (
    Binary, BoolConst, IntConst, ParseError, SortError, Unary, UnboundVariable,
    Var, apply_op, ast_size, check_sorts, evaluate, free_vars, parse_infix,
    parse_sexpr, print_infix, print_sexpr, sort_of,
)
from caviar.matching import PatVar

from .helpers import random_expr


def test_parse_infix_precedence():
    e = parse_infix("a + b * c")
    assert e == Binary("+", Var("a"), Binary("*", Var("b"), Var("c")))
    e = parse_infix("a * b + c")
    assert e == Binary("+", Binary("*", Var("a"), Var("b")), Var("c"))
    e = parse_infix("a < b && c < d || e < f")
    assert e.op == "||"
    assert e.left.op == "&&"


def test_parse_infix_unary_and_functions():
    assert parse_infix("-a") == Unary("neg", Var("a"))
    assert parse_infix("--a") == Unary("neg", Unary("neg", Var("a")))
    assert parse_infix("!(a < b)") == Unary("!", Binary("<", Var("a"), Var("b")))
    assert parse_infix("min(a, b)") == Binary("min", Var("a"), Var("b"))
    assert parse_infix("max(a + 1, 2)") == Binary(
        "max", Binary("+", Var("a"), IntConst(1)), IntConst(2))


def test_parse_infix_literals():
    assert parse_infix("true") == BoolConst(True)
    assert parse_infix("false") == BoolConst(False)
    # a leading minus on a literal folds into the constant
    assert parse_infix("-3") == IntConst(-3)
    assert parse_infix("v0 + -1") == Binary("+", Var("v0"), IntConst(-1))
    assert parse_infix("-(3)") == Unary("neg", IntConst(3))


def test_parse_infix_subtraction_is_left_assoc():
    e = parse_infix("a - b - c")
    assert e == Binary("-", Binary("-", Var("a"), Var("b")), Var("c"))


def test_comparison_non_associative():
    with pytest.raises(ParseError):
        parse_infix("a < b < c")


def test_parse_errors_report_offsets():
    with pytest.raises(ParseError, match="offset"):
        parse_infix("a + ")
    with pytest.raises(ParseError):
        parse_infix("(a + b")
    with pytest.raises(ParseError):
        parse_infix("")
    with pytest.raises(ParseError):
        parse_infix("a @ b")


def test_sort_errors():
    with pytest.raises(SortError):
        parse_infix("a + (b < c)")
    with pytest.raises(SortError):
        parse_infix("a && b")
    with pytest.raises(SortError):
        parse_infix("!a")
    with pytest.raises(SortError):
        parse_infix("true < false")


def test_sort_of():
    assert sort_of(parse_infix("a + b")) == "int"
    assert sort_of(parse_infix("a <= b")) == "bool"
    assert check_sorts(parse_infix("min(a, b) < 3 && true")) == "bool"


def test_apply_op_floor_division():
    assert apply_op("/", 7, 2) == 3
    assert apply_op("/", -7, 2) == -4
    assert apply_op("/", 7, -2) == -4
    assert apply_op("%", -7, 2) == 1
    assert apply_op("%", 7, -2) == -1
    assert apply_op("/", 5, 0) == 0
    assert apply_op("%", 5, 0) == 0
    assert apply_op("min", 3, -2) == -2
    assert apply_op("max", 3, -2) == 3


def test_evaluate_and_free_vars():
    e = parse_infix("(x + y) / 2 <= max(x, y)")
    assert free_vars(e) == {"x", "y"}
    assert evaluate(e, {"x": 3, "y": 5}) is True
    with pytest.raises(UnboundVariable):
        evaluate(e, {"x": 3})


def test_evaluate_big_integers():
    e = parse_infix("x * x")
    v = 10 ** 30
    assert evaluate(e, {"x": v}) == v * v


def test_ast_size():
    assert ast_size(parse_infix("a")) == 1
    assert ast_size(parse_infix("a + 1")) == 3
    assert ast_size(parse_infix("-(a + 1)")) == 4


def test_print_infix_minimal_parens():
    for src in ["a + b * c", "(a + b) * c", "a - (b - c)", "a - b - c",
                "-(a + b)", "min(a, b) + 1", "!(a < b) && c < d"]:
        e = parse_infix(src)
        assert parse_infix(print_infix(e)) == e


def test_sexpr_round_trip():
    e = parse_infix("min(a, -1) < b && !(c == 3)")
    assert parse_sexpr(print_sexpr(e)) == e


def test_sexpr_patvars():
    p = parse_sexpr("(+ ?a 1)", allow_patvars=True)
    assert p == Binary("+", PatVar("a"), IntConst(1))
    assert print_sexpr(p) == "(+ ?a 1)"
    with pytest.raises(ParseError):
        parse_sexpr("(+ ?a 1)", allow_patvars=False)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_infix_round_trip_random(seed):
    rng = random.Random(seed)
    e = random_expr(rng, depth=4)
    assert parse_infix(print_infix(e)) == e


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_sexpr_round_trip_random(seed):
    rng = random.Random(seed)
    e = random_expr(rng, depth=4)
    assert parse_sexpr(print_sexpr(e)) == e
