from fractions import Fraction

import pytest

from symplie.dsl import DSLError, EvalError, ParseError, evaluate, format_value, parse, value_kind, values_equal


@pytest.mark.parametrize(
    "src,g,out",
    [
        ("q0(Ht[a1,b1,a1,b1])", 3, "12"),
        ("wedge(a1,a1)", 4, "0"),
        ("q12(Ht[a1,b1,a1,b1])", 2, "12 a1∧b1"),
        ("q0(phi2(omega0))", 5, "220"),
        ("1/2 + 1/3", 2, "5/6"),
        ("[a1,b1] + [a2,b2]", 2, "[a1,b1] + [a2,b2]"),
        ("omega0", 2, "[a1,b1] + [a2,b2]"),
        ("C[1,2](a1⊗b1⊗a2)", 2, "a2"),
        ("p[(1,2)(3)](a2⊗a1⊗a1)", 2, "-(a1∧a2)⊗a1"),
        ("sum(i,1,g,a[i])", 3, "a1 + a2 + a3"),
        ("X[1,2](a2⊗a2)", 2, "a1⊗a2 + a2⊗a1"),
        ("act[U2 X12](b1)", 2, "-a2"),
    ],
)
def test_values(src, g, out):
    assert format_value(evaluate(src, g)) == out


def test_sample_session_composite():
    xsi1 = evaluate("4brac[Ht[a1,a2,a1,a2],Ht[a3,b3,a3,b3]]", 4)
    out = evaluate("p[(1,2)(3,4)](C[1,2](C[1,2](X)))", 4, {"X": xsi1})
    assert format_value(out) == "-576 (a1∧a2)⊗(a1∧a2)"


def test_genus_parametric_coefficients():
    assert evaluate("8g*g+4g", 5) == 220
    assert evaluate("-144/(g+1)", 4) == Fraction(-144, 5)


def test_value_kinds():
    assert value_kind(evaluate("3", 2)) == "rational"
    assert value_kind(evaluate("a1⊗b1", 2)) == "tensor"
    assert value_kind(evaluate("[a1,b1]", 2)) == "lie"
    assert value_kind(evaluate("Ht[a1,a2,a1,a2]", 2)) == "tree"
    assert value_kind(evaluate("eta(Ht[a1,a2,a1,a2])", 2)) == "h-element"
    assert value_kind(evaluate("a1∧a2", 2)) == "wedge"
    # wedges of degree-2 elements live in the tensor algebra as commutators
    assert value_kind(evaluate("Ht[a1,a2,a1,a2]∧Ht[a1,b1,a1,b1]", 2)) == "tensor"


def test_index_beyond_genus_reports_position():
    with pytest.raises(ParseError) as e:
        parse("Ht[a1,a9]", 4)
    assert e.value.pos == 6
    assert "exceeds genus 4" in str(e.value)


@pytest.mark.parametrize("src", ["Ht[a1,a2", "foo(a1)", "a1 +", "Ht[a1,a2,a1]", "p[(1,2](a1)"])
def test_syntax_errors(src):
    with pytest.raises(DSLError):
        evaluate(src, 3)


def test_type_errors_are_eval_errors():
    with pytest.raises(DSLError):
        evaluate("q0(a1)", 2)


def test_trees_compare_through_eta():
    assert values_equal(evaluate("Ht[a1,a2,a1,a2]", 2), evaluate("Ht[a2,a1,a2,a1]", 2))
    assert not values_equal(evaluate("Ht[a1,a2,a1,a2]", 2), evaluate("Ht[a1,a2,a2,a1]", 2))


def test_env_bindings():
    v = evaluate("2 X - X", 2, {"X": evaluate("a1⊗b1", 2)})
    assert format_value(v) == "a1⊗b1"


def test_eval_error_is_dsl_error():
    assert issubclass(EvalError, DSLError)
