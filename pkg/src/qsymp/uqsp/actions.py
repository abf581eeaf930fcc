"""Closed-form actions of the Chevalley operators on normal monomials.

These formulas are computed directly from exponent vectors and serve as an
independent check on the operator expressions built in ``diffops``.
"""

from __future__ import annotations

from ..qfield import LAMBDA, qbinom, qint, qpow
from ..sympspace import Monomial, Terms, _add_into, _axpy, _bump, omega_times, pos


def _neg_block(a: Monomial, n: int) -> int:
    # a_{-n} + ... + a_{-2}
    return sum(a[: pos(-2, n) + 1])


def e_action(i: int, a: Monomial) -> Terms:
    n = len(a) // 2
    out: Terms = {}
    if i == 1:
        a1 = a[pos(1, n)]
        if a1:
            out[_bump(a, (pos(-1, n), 1), (pos(1, n), -1))] = qint(a1, 2)
        if a1 >= 2:
            c = (LAMBDA * qbinom(a1, 2)).mul_qpow(2 - 2 * _neg_block(a, n))
            _axpy(out, c, omega_times(2, _bump(a, (pos(1, n), -2))))
        return out
    p_lo, p_hi = pos(1 - i, n), pos(i, n)
    if a[p_lo]:
        m = _bump(a, (pos(-i, n), 1), (p_lo, -1))
        _add_into(out, m, qint(a[p_lo]).mul_qpow(a[pos(i - 1, n)] - a[p_hi]))
    if a[p_hi]:
        m = _bump(a, (pos(i - 1, n), 1), (p_hi, -1))
        _add_into(out, m, -qint(a[p_hi]))
    return out


def f_action(i: int, a: Monomial) -> Terms:
    n = len(a) // 2
    out: Terms = {}
    if i == 1:
        am1 = a[pos(-1, n)]
        if am1:
            out[_bump(a, (pos(-1, n), -1), (pos(1, n), 1))] = qint(am1, 2)
        if am1 >= 2:
            c = (LAMBDA * qbinom(am1, 2)).mul_qpow(2 - 2 * _neg_block(a, n))
            _axpy(out, c, omega_times(2, _bump(a, (pos(-1, n), -2))))
        return out
    p_neg, p_lo = pos(-i, n), pos(1 - i, n)
    if a[p_neg]:
        m = _bump(a, (p_neg, -1), (p_lo, 1))
        _add_into(out, m, qint(a[p_neg]))
    p_mid, p_hi = pos(i - 1, n), pos(i, n)
    if a[p_mid]:
        m = _bump(a, (p_mid, -1), (p_hi, 1))
        _add_into(out, m, -qint(a[p_mid]).mul_qpow(a[p_lo] - a[p_neg]))
    return out


def k_exponent(i: int, a: Monomial) -> int:
    n = len(a) // 2
    if i == 1:
        return 2 * (a[pos(-1, n)] - a[pos(1, n)])
    return a[pos(-i, n)] - a[pos(1 - i, n)] + a[pos(i - 1, n)] - a[pos(i, n)]


def k_action(i: int, a: Monomial, s: int = 1) -> Terms:
    return {a: qpow(s * k_exponent(i, a))}


def e12_action(a: Monomial) -> Terms:
    """Action of e_{1,2} = [e_1, e_2]_{q^2}, in closed form."""
    n = len(a) // 2
    am1, a1, a2 = a[pos(-1, n)], a[pos(1, n)], a[pos(2, n)]
    out: Terms = {}
    if a1:
        m = _bump(a, (pos(-2, n), 1), (pos(1, n), -1))
        _add_into(out, m, -qint(a1).mul_qpow(2 + am1 - a2))
    if a2:
        m = _bump(a, (pos(-1, n), 1), (pos(2, n), -1))
        _add_into(out, m, -qint(a2).mul_qpow(-2 * a1))
    if a1 and a2:
        c = -(LAMBDA * qint(a1) * qint(a2)).mul_qpow(3 - 2 * _neg_block(a, n) - a1)
        _axpy(out, c, omega_times(2, _bump(a, (pos(1, n), -1), (pos(2, n), -1))))
    return out


ACTIONS = {"e": e_action, "f": f_action, "k": lambda i, a: k_action(i, a, 1), "kinv": lambda i, a: k_action(i, a, -1)}

__all__ = ["e_action", "f_action", "k_action", "k_exponent", "e12_action", "ACTIONS"]
