import pytest

from qsymp.diffops import (
    Lambda,
    bracket,
    build_root_vector,
    chevalley,
    compose,
    identity,
    mu,
    op_equal_up_to,
    partial,
    scale,
    xl,
)
from qsymp.grammar import ParseError, parse_element, parse_operator, parse_ratq, tokenize
from qsymp.qfield import LAMBDA, Q, RatQ, qint, qpow
from qsymp.sympspace import Element, product
from qsymp.uqsp.lemmas import lemma_battery


def x(n, i):
    return Element.gen(n, i)


@pytest.mark.parametrize(
    "text,value",
    [
        ("q", Q),
        ("q^-2", qpow(-2)),
        ("q^(-2)", qpow(-2)),
        ("(q^2-1)/(q-1)", Q + 1),
        ("lam", LAMBDA),
        ("-3/4", RatQ.coerce(-3) / 4),
        ("2 q", 2 * Q),
        ("(q^3-q^-3)/(q-q^-1)", qint(3)),
    ],
)
def test_parse_ratq(text, value):
    assert parse_ratq(text) == value


def test_ratq_roundtrip():
    for r in (qint(5), qint(4) / qint(7), -LAMBDA / (Q ** 3 + 2), RatQ.coerce(0)):
        assert parse_ratq(str(r)) == r


def test_parse_element():
    n = 2
    assert parse_element("x(-1)x(1)", n) == product(x(n, -1), x(n, 1))
    assert parse_element("2 x(1) - q*x(2)", n) == x(n, 1).scale(2) - x(n, 2).scale(Q)
    assert parse_element("1", n) == Element.one(n)
    assert parse_element("x(1)^3", n) == product(x(n, 1), product(x(n, 1), x(n, 1)))
    assert parse_element("(q^3-q)*x(-2)x(2)", n) == product(x(n, -2), x(n, 2)).scale(Q ** 3 - Q)


def test_element_roundtrip():
    n = 3
    e = product(x(n, 2), x(n, -3)) + product(x(n, 1), x(n, 1)).scale(qint(2) / Q) - Element.one(n)
    assert parse_element(str(e), n) == e


def test_parse_operator_atoms():
    n = 2
    assert op_equal_up_to(parse_operator("d(1)", n), partial(1, n), n, 3) is None
    assert op_equal_up_to(parse_operator("mu_inv(1)", n), mu(1, n, -1), n, 3) is None
    assert op_equal_up_to(parse_operator("mu(1)^-2", n), mu(1, n, -2), n, 3) is None
    assert op_equal_up_to(parse_operator("Lambda(2)^2", n), Lambda(2, n, 2), n, 3) is None
    assert op_equal_up_to(parse_operator("k_inv(1) k(1)", n), identity(n), n, 3) is None
    assert op_equal_up_to(parse_operator("E(+,1,2)", n), build_root_vector((1, 2), "closed", n), n, 3) is None
    assert op_equal_up_to(parse_operator("E(-,1,2)", n), chevalley("e", 2, n), n, 3) is None


def test_parse_operator_combinators():
    n = 2
    op = parse_operator("br_(q^-1)(d(-1), xl(-1)) + lam*id", n)
    want = bracket(partial(-1, n), xl(-1, n), qpow(-1)) + scale(LAMBDA, identity(n))
    assert op_equal_up_to(op, want, n, 3) is None
    assert op_equal_up_to(parse_operator("br_q^2(d(-1), xl(-1))", n),
                          bracket(partial(-1, n), xl(-1, n), qpow(2)), n, 3) is None
    assert op_equal_up_to(parse_operator("d(1) xl(1)", n), compose(partial(1, n), xl(1, n)), n, 3) is None
    assert op_equal_up_to(parse_operator("2", n), scale(2, identity(n)), n, 3) is None


def test_operator_render_parses_back():
    n = 2
    for text in ("br_(q)(D(1), Psi(1))", "e(1)*f(2) - q*k(1)", "XR(-1)", "tau(-1)^-2 Phi(2)"):
        op = parse_operator(text, n)
        assert op_equal_up_to(parse_operator(str(op), n), op, n, 3) is None


@pytest.mark.parametrize(
    "text,column",
    [
        ("x(3)", 2),
        ("x(1) +", 6),
        ("x(1) $ x(2)", 5),
        ("y(1)", 0),
        ("", 0),
        ("(x(1)", 5),
    ],
)
def test_element_errors(text, column):
    with pytest.raises(ParseError) as info:
        parse_element(text, 2)
    assert info.value.position == column
    assert f"column {column}" in str(info.value)


@pytest.mark.parametrize(
    "text,column",
    [
        ("d(0)", 2),
        ("e(3)", 2),
        ("nope(1)", 0),
        ("E(1,2)", 2),
        ("d(1)^-1", 4),
        ("d(1)/d(1)", 4),
        ("mu_foo(1)", 0),
    ],
)
def test_operator_errors(text, column):
    with pytest.raises(ParseError) as info:
        parse_operator(text, 2)
    assert info.value.position == column


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_ratq("1/0")
    with pytest.raises(ValueError):
        parse_element("x(1)", 1)


def test_tokenize_positions():
    toks = tokenize(" x(-12)")
    assert [(t.kind, t.pos) for t in toks] == [("name", 1), ("(", 2), ("-", 3), ("int", 4), (")", 6), ("end", 7)]


@pytest.mark.parametrize("n", [2, 3])
def test_battery_ids_are_expressions(n):
    # every lemma identity id spells its operators in the CLI grammar
    for ident in lemma_battery(n):
        lhs_text, rhs_text = ident.text.split(" = ")
        lhs, rhs = parse_operator(lhs_text, n), parse_operator(rhs_text, n)
        assert op_equal_up_to(lhs, ident.lhs, n, 2) is None, ident.id
        assert op_equal_up_to(rhs, ident.rhs, n, 2) is None, ident.id
