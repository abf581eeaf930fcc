import random
import threading

import pytest

from qsymp.diffops import (
    XL,
    XR,
    D,
    GeneratorOp,
    NamedOp,
    Phi,
    Psi,
    RootLabel,
    apply_generator,
    bracket,
    build_aux,
    build_chevalley,
    build_root_vector,
    chevalley,
    compose,
    identity,
    mu,
    op_equal_up_to,
    partial,
    scale,
    xl,
    xr,
    zero,
)
from qsymp.qfield import LAMBDA, ONE, Q, qint, qpow
from qsymp.sympspace import Element, basis_up_to, omega, pos, product


def x(n, i):
    return Element.gen(n, i)


def test_partial_examples():
    n = 2
    x1sq = product(x(n, 1), x(n, 1))
    assert apply_generator(GeneratorOp("d", 1), x1sq) == x(n, 1).scale(qint(2))
    assert apply_generator(GeneratorOp("d", 2), x(n, 1)) == Element.zero(n)


def test_mu_example():
    n = 2
    m = product(x(n, -1), x(n, 1))
    assert apply_generator(GeneratorOp("mu", -1, 1), m) == m.scale(Q)


def test_generator_validation():
    with pytest.raises(ValueError):
        GeneratorOp("d", 0)
    with pytest.raises(ValueError):
        GeneratorOp("zz", 1)
    with pytest.raises(ValueError):
        partial(3, 2)


def test_compose_acts_right_to_left():
    n = 2
    one = Element.one(n)
    assert compose(partial(1, n), xl(1, n)).apply(one) == one
    assert compose(xl(1, n), partial(1, n)).apply(one) == Element.zero(n)


def test_scale_example():
    n = 2
    assert scale(LAMBDA, mu(1, n)).apply(x(n, 1)) == x(n, 1).scale(LAMBDA * Q)


def test_bracket_example():
    n = 2
    op = bracket(partial(-1, n), xl(-1, n), qpow(2))
    assert op.apply(Element.one(n)) == Element.one(n)


def test_chevalley_examples():
    n = 2
    assert build_chevalley(1, "e", n).apply(x(n, 1)) == x(n, -1)
    assert build_chevalley(1, "k", n).apply(x(n, -1)) == x(n, -1).scale(qpow(2))
    assert build_chevalley(2, "e", n).apply(x(n, 2)) == -x(n, 1)
    with pytest.raises(ValueError):
        build_chevalley(3, "e", n)


def test_k_inverse_spelling():
    n = 3
    for w in ("k^-1", "k_inv", "kinv"):
        assert build_chevalley(2, w, n) is chevalley("kinv", 2, n)


def test_aux_examples():
    n = 2
    assert build_aux(NamedOp("Psi", (3,), n)) is zero(n)
    assert build_aux(NamedOp("Phi", (0,), n)) is zero(n)
    # XR(2) = Lambda(2)^2 xr(2) puts q^2 on x(2); the mu factors of XL(-2)
    # cancel on x(-2)x(2)
    x2 = product(x(n, -2), x(n, 2))
    assert build_aux(NamedOp("Psi", (2,), n)).apply(Element.one(n)) == x2.scale(qpow(2))
    assert XR(2, n).apply(Element.one(n)) == x(n, 2).scale(qpow(2))
    assert build_aux(NamedOp("Lambda", (0,), n)) is identity(n)
    assert build_aux(NamedOp("tau", (3,), n)) is identity(n)
    with pytest.raises(ValueError):
        build_aux(NamedOp("Nope", (1,), n))


def test_named_operators_are_shared():
    assert Psi(1, 3) is Psi(1, 3)
    assert D(-2, 3) is D(-2, 3)


def test_root_vector_examples():
    n = 2
    e12 = build_root_vector((1, 2), "recursive", n)
    assert e12.apply(x(n, 1)) == x(n, -2).scale(-qpow(2))
    assert op_equal_up_to(build_root_vector((2, 2), "closed", n), build_root_vector((2, 2), "recursive", n), n, 3) is None
    for i in range(2, 4):
        assert op_equal_up_to(build_root_vector((1 - i, i), "closed", 3), chevalley("e", i, 3), 3, 3) is None


@pytest.mark.parametrize("label", [(0, 1), (2, 1), (-2, 2), (1, 3), (-3, 2)])
def test_invalid_root_labels(label):
    with pytest.raises(ValueError):
        build_root_vector(label, "closed", 2)


def test_root_label_validation():
    assert RootLabel(-1, 2).validate(2)
    assert RootLabel(2, 2).is_diagonal
    with pytest.raises(ValueError):
        build_root_vector((1, 1), "braided", 2)


def test_op_equal_examples():
    n = 2
    assert op_equal_up_to(partial(1, n), partial(1, n), n, 3) is None
    assert op_equal_up_to(compose(mu(1, n), mu(2, n)), compose(mu(2, n), mu(1, n)), n, 4) is None
    e1, e12 = chevalley("e", 1, n), build_root_vector((1, 2), "recursive", n)
    assert op_equal_up_to(bracket(e1, e12, qpow(-2)), zero(n), n, 4) is None
    with pytest.raises(ValueError):
        op_equal_up_to(e1, e1, n, -1)


def test_op_equal_reports_first_mismatch():
    n = 2
    c = op_equal_up_to(partial(1, n), partial(2, n), n, 3)
    assert c is not None
    (m,) = c.monomials
    assert sum(m) == 1 and (m[pos(1, n)] or m[pos(2, n)])
    assert c.lhs != c.rhs
    assert {c.lhs, c.rhs} == {Element.one(n), Element.zero(n)}


@pytest.mark.parametrize("n", [2, 3])
def test_omega_under_chevalley(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e_om = chevalley("e", i, n).apply(omega(j, n))
            f_om = chevalley("f", i, n).apply(omega(j, n))
            if i != j:
                assert e_om == Element.zero(n) and f_om == Element.zero(n)
            elif i == 1:
                assert e_om == product(x(n, -1), x(n, -1))
                assert f_om == product(x(n, 1), x(n, 1))
            else:
                assert e_om == -product(x(n, -j), x(n, j - 1))
                assert f_om == product(x(n, 1 - j), x(n, j))


def _random_generators(n, rng, count):
    idx = [i for i in range(-n, n + 1) if i]
    makers = [partial, xl, xr, lambda i, n: mu(i, n), lambda i, n: mu(i, n, -1)]
    return [rng.choice(makers)(rng.choice(idx), n) for _ in range(count)]


def test_bracket_calculus_identities():
    # [AB,C]_{q^2} = A[B,C]_q + q[A,C]_q B and
    # [[A,B]_q,C]_q = [A,[B,C]]_{q^2} + [[A,C]_q,B]_q hold for any operators
    n = 2
    rng = random.Random(3)
    q, q2 = qpow(1), qpow(2)
    for _ in range(25):
        a, b, c = _random_generators(n, rng, 3)
        lhs = bracket(compose(a, b), c, q2)
        rhs = compose(a, bracket(b, c, q)) + scale(q, compose(bracket(a, c, q), b))
        assert op_equal_up_to(lhs, rhs, n, 2) is None
        lhs = bracket(bracket(a, b, q), c, q)
        rhs = bracket(a, bracket(b, c), q2) + bracket(bracket(a, c, q), b, q)
        assert op_equal_up_to(lhs, rhs, n, 2) is None
        assert op_equal_up_to(bracket(a, b, q), scale(-q, bracket(b, a, q.inv())), n, 2) is None


def test_q_commuting_pair_identities():
    # if AB = uBA then [A,BC]_v = uB[A,C]_{v/u} and [A,CB]_v = [A,C]_{v/u} B
    n = 2
    u = qpow(1)
    a, b = D(1, n), mu(1, n)
    assert op_equal_up_to(compose(a, b), scale(u, compose(b, a)), n, 3) is None
    for c in (XR(1, n), XL(-2, n), D(-1, n), Psi(1, n)):
        for v in (ONE, qpow(2), qpow(-1)):
            lhs = bracket(a, compose(b, c), v)
            assert op_equal_up_to(lhs, scale(u, compose(b, bracket(a, c, v / u))), n, 3) is None
            lhs = bracket(a, compose(c, b), v)
            assert op_equal_up_to(lhs, compose(bracket(a, c, v / u), b), n, 3) is None


def test_threaded_evaluation_is_consistent():
    n = 3
    op = build_root_vector((2, 3), "closed", n)
    basis = basis_up_to(n, 3)
    expected = [dict(build_root_vector((2, 3), "recursive", n).on_basis(m)) for m in basis]
    results = []

    def work(order):
        got = {m: op.on_basis(m) for m in order}
        results.append(all(got[m] == e for m, e in zip(basis, expected)))

    threads = []
    for seed in range(4):
        order = list(basis)
        random.Random(seed).shuffle(order)
        threads.append(threading.Thread(target=work, args=(order,)))
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [True] * 4


def test_rank_mismatch():
    with pytest.raises(ValueError):
        compose(partial(1, 2), partial(1, 3))
    with pytest.raises(ValueError):
        partial(1, 2).apply(Element.one(3))


def test_operator_rendering():
    n = 2
    assert str(chevalley("e", 1, n)) == "e(1)"
    assert str(mu(1, n, -1)) == "mu_inv(1)"
    assert str(bracket(D(1, n), Psi(1, n), Q)) == "br_(q)(D(1), Psi(1))"
    assert str(zero(n)) == "0" and str(identity(n)) == "id"


def test_xl_xr_on_unit():
    n = 2
    one = Element.one(n)
    for i in (-2, -1, 1, 2):
        assert xl(i, n).apply(one) == x(n, i) == xr(i, n).apply(one)
    assert XL(-1, n).apply(one) == x(n, -1).scale(Q)
