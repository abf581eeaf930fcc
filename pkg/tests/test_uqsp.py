import json
from math import comb

import pytest

from qsymp.diffops import RootLabel, bracket, chevalley, op_equal_up_to
from qsymp.qfield import qint, qpow
from qsymp.sympspace import Element, basis_up_to, product
from qsymp.uqsp import (
    CartanData,
    CheckResult,
    CoproductRule,
    SuiteReport,
    e12_action,
    e_action,
    enumerate_positive_roots,
    f_closure_dimension,
    highest_weight_suite,
    module_algebra_suite,
    root_vector_suite,
    run_suite,
    serre_suite,
)
from qsymp.uqsp.data import pairing, root_weight, simple_root


def x(n, i):
    return Element.gen(n, i)


def test_cartan_matrix():
    c = CartanData.for_rank(3)
    assert c.a == ((2, -1, 0), (-2, 2, -1), (0, -1, 2))
    assert c.qi(1) == qpow(2) and c.qi(2) == qpow(1) and c.qi(3) == qpow(1)
    # symmetrizable: d_i a_ij = d_j a_ji
    for n in (2, 3, 5):
        c = CartanData.for_rank(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert c.d[i - 1] * c.entry(i, j) == c.d[j - 1] * c.entry(j, i)
                assert c.entry(i, j) * c.d[i - 1] == pairing(simple_root(i), simple_root(j))


def test_coproduct_rules():
    assert CoproductRule.of("e", 1).pairs == (("e", "k"), ("1", "e"))
    assert CoproductRule.of("f", 2).pairs == (("f", "1"), ("kinv", "f"))
    assert CoproductRule.of("k", 1).counit == 1
    assert CoproductRule.of("e", 1).counit == 0
    with pytest.raises(ValueError):
        CoproductRule.of("h", 1)


def test_positive_roots():
    labels = lambda n: [(r.first, r.second) for r in enumerate_positive_roots(n)]
    assert labels(2) == [(1, 1), (1, 2), (2, 2), (-1, 2)]
    assert len(labels(3)) == 9 and labels(3)[-2:] == [(-1, 3), (-2, 3)]
    assert labels(3)[:4] == labels(2)
    assert len(enumerate_positive_roots(4)) == 16
    assert len(set(labels(4))) == 16


def test_root_weights():
    assert root_weight(RootLabel(2, 2)) == {2: 2}
    assert root_weight(RootLabel(1, 2)) == {2: 1, 1: 1}
    assert root_weight(RootLabel(-1, 2)) == {2: 1, 1: -1}
    assert root_weight(RootLabel(1, 1)) == simple_root(1)


def test_serre3_example():
    n = 2
    e1, f1 = chevalley("e", 1, n), chevalley("f", 1, n)
    assert bracket(e1, f1).apply(x(n, 1)) == -x(n, 1)


def test_module_algebra_example():
    n = 2
    e1, k1 = chevalley("e", 1, n), chevalley("k", 1, n)
    x1 = x(n, 1)
    rhs = product(e1.apply(x1), k1.apply(x1)) + product(x1, e1.apply(x1))
    assert rhs == product(x(n, -1), x1).scale(qpow(-2)) + product(x1, x(n, -1))
    assert e1.apply(product(x1, x1)) == rhs


def test_unit_law():
    n = 3
    one = Element.one(n)
    for i in range(1, n + 1):
        assert chevalley("e", i, n).apply(one) == Element.zero(n)
        assert chevalley("f", i, n).apply(one) == Element.zero(n)
        assert chevalley("k", i, n).apply(one) == one


@pytest.mark.parametrize("n,m,dim", [(2, 0, 1), (2, 1, 4), (2, 2, 10), (3, 2, 21), (2, 4, 35)])
def test_f_closure_dimension(n, m, dim):
    assert f_closure_dimension(n, m) == dim == comb(2 * n + m - 1, m)


def test_highest_weight_report():
    r = highest_weight_suite(2, 1)
    assert r.passed
    assert any(c.detail == "dimension 4 of 4" for c in r.results)


def test_action_oracles_agree_with_chevalley():
    n = 2
    e1 = chevalley("e", 1, n)
    for m in basis_up_to(n, 3):
        assert e1.on_basis(m) == e_action(1, m)


def test_e12_action_matches_closed_form():
    n = 2
    from qsymp.diffops import build_root_vector

    op = build_root_vector((1, 2), "closed", n)
    for m in basis_up_to(n, 3):
        assert op.on_basis(m) == e12_action(m)


def test_suites_pass_small():
    for report in (serre_suite(2, 2), module_algebra_suite(2, 1), root_vector_suite(2, 2)):
        assert report.passed, [r.id for r in report.failures]
        assert report.results


def test_serre_requires_degree_two():
    with pytest.raises(ValueError):
        serre_suite(2, 1)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 2, 2)


def test_suites_are_deterministic():
    a = run_suite("root-vectors", 2, 2)
    b = run_suite("root-vectors", 2, 2, jobs=2)
    assert a.to_structured() == b.to_structured()
    assert [r.id for r in a.results] == [r.id for r in b.results]


def test_check_result_invariants():
    with pytest.raises(ValueError):
        CheckResult("x", "pass", monomials=((0, 0, 0, 0),))
    with pytest.raises(ValueError):
        CheckResult("x", "maybe")


def test_report_serialization():
    ok = CheckResult("a: id", "pass")
    bad = CheckResult("b: id", "fail", ((0, 1, 0, 0),), "q * x(-1)", "x(-1)")
    report = SuiteReport("demo", 2, 3, [ok, bad], wall_time=0.5)
    assert not report.passed and report.failures == [bad]
    lines = report.to_structured().splitlines()
    recs = [json.loads(line) for line in lines]
    assert list(recs[0]) == ["suite", "n", "bound", "id", "status", "monomial", "lhs", "rhs", "detail"]
    assert recs[1]["monomial"] == "x(-1)" and recs[1]["status"] == "fail"
    assert recs[0]["monomial"] is None
    assert not any(isinstance(v, float) for rec in recs for v in rec.values())
    text = report.to_text()
    assert "1/2 passed" in text and "at  x(-1)" in text and "lhs q * x(-1)" in text
