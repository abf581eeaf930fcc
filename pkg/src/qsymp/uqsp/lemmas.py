"""Commutation identities among the auxiliary operators D, XL, XR, Phi, Psi.

Each identity is an operator equation ``lhs = rhs`` and is labelled by its
own text in the CLI operator grammar, e.g. ``br_q(D(1),Psi(1)) = q*XL(-1)``.
Groups collect identities of one shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from ..diffops import (
    XL,
    XR,
    D,
    Lambda,
    Operator,
    Phi,
    Phi_recursive,
    Psi,
    Psi_recursive,
    bracket,
    compose,
    identity,
    mu,
    op_sum,
    scale,
    tau,
    zero,
)
from ..qfield import LAMBDA, ONE, qpow
from ..sympspace import check_rank


@dataclass(frozen=True)
class Identity:
    group: str
    text: str
    lhs: Operator
    rhs: Operator

    @property
    def id(self) -> str:
        return f"{self.group}: {self.text}"


def _br(a, b, k):
    return bracket(a, b, ONE if k is None else qpow(k))


def lemma_battery(n: int, literal_weights: bool = True) -> List[Identity]:
    """All identities, in a fixed order.

    ``literal_weights`` keeps the three Phi/Psi-versus-mu statements that
    hold only summand by summand (see ``weight_identities``); they are
    reported in group ``Phi-Psi-mu`` and fail for some indices.
    """
    check_rank(n)
    out: List[Identity] = []
    add = lambda g, t, l, r: out.append(Identity(g, t, l, r))  # noqa: E731
    Z = zero(n)
    pos_idx = range(1, n + 1)
    all_idx = [k for k in range(-n, n + 1) if k]

    # D, XL, XR against mu
    for k in all_idx:
        for l in all_idx:
            s = 1 if k == l else 0
            add("D-mu", f"D({k})*mu({l}) = q^{s}*mu({l})*D({k})",
                compose(D(k, n), mu(l, n)), scale(qpow(s), compose(mu(l, n), D(k, n))))
    for i in pos_idx:
        for k in all_idx:
            s = -1 if k == i else 0
            add("XR-mu", f"XR({i})*mu({k}) = q^{s}*mu({k})*XR({i})",
                compose(XR(i, n), mu(k, n)), scale(qpow(s), compose(mu(k, n), XR(i, n))))
            s = -1 if k == -i else 0
            add("XL-mu", f"XL({-i})*mu({k}) = q^{s}*mu({k})*XL({-i})",
                compose(XL(-i, n), mu(k, n)), scale(qpow(s), compose(mu(k, n), XL(-i, n))))

    # q-commutation for i < j
    for i in pos_idx:
        for j in range(i + 1, n + 1):
            for text, a, b in (
                (f"br_q(D({j}),D({i}))", D(j, n), D(i, n)),
                (f"br_q(D({-i}),D({-j}))", D(-i, n), D(-j, n)),
                (f"br_q(XR({j}),XR({i}))", XR(j, n), XR(i, n)),
                (f"br_q(XL({-i}),XL({-j}))", XL(-i, n), XL(-j, n)),
                (f"br_q(XR({i}),D({j}))", XR(i, n), D(j, n)),
                (f"br_q(XL({-j}),D({-i}))", XL(-j, n), D(-i, n)),
                (f"br_q(D({i}),XR({j}))", D(i, n), XR(j, n)),
                (f"br_q(D({-j}),XL({-i}))", D(-j, n), XL(-i, n)),
            ):
                add("ordered", f"{text} = 0", _br(a, b, 1), Z)

    # commutation for i != j, and the q-commutation at i = j
    for i in pos_idx:
        for j in pos_idx:
            if i == j:
                continue
            for text, a, b in (
                (f"br(D({i}),D({-j}))", D(i, n), D(-j, n)),
                (f"br(XL({-i}),XR({j}))", XL(-i, n), XR(j, n)),
                (f"br(D({i}),XL({-j}))", D(i, n), XL(-j, n)),
                (f"br(D({-i}),XR({j}))", D(-i, n), XR(j, n)),
            ):
                add("distinct", f"{text} = 0", _br(a, b, 0), Z)
        for text, a, b in (
            (f"br_q(D({i}),D({-i}))", D(i, n), D(-i, n)),
            (f"br_q(XR({i}),XL({-i}))", XR(i, n), XL(-i, n)),
            (f"br_q(XL({-i}),D({i}))", XL(-i, n), D(i, n)),
            (f"br_q(D({-i}),XR({i}))", D(-i, n), XR(i, n)),
        ):
            add("same-index", f"{text} = 0", _br(a, b, 1), Z)

    # D against X at the same index
    lam_inv = LAMBDA.inv()
    for i in pos_idx:
        mu2, mum2 = mu(i, n, 2), mu(-i, n, 2)
        Id = identity(n)
        add("DX", f"D({i})*XR({i}) = q*lam^-1*(q^2*mu({i})^2 - 1)", compose(D(i, n), XR(i, n)),
            scale(qpow(1) * lam_inv, op_sum(scale(qpow(2), mu2), scale(-ONE, Id))))
        add("DX", f"XR({i})*D({i}) = q*lam^-1*(mu({i})^2 - 1)", compose(XR(i, n), D(i, n)),
            scale(qpow(1) * lam_inv, op_sum(mu2, scale(-ONE, Id))))
        add("DX", f"D({-i})*XL({-i}) = lam^-1*(q^2*mu({-i})^2 - 1)", compose(D(-i, n), XL(-i, n)),
            scale(lam_inv, op_sum(scale(qpow(2), mum2), scale(-ONE, Id))))
        add("DX", f"XL({-i})*D({-i}) = lam^-1*(mu({-i})^2 - 1)", compose(XL(-i, n), D(-i, n)),
            scale(lam_inv, op_sum(mum2, scale(-ONE, Id))))
        add("DX", f"br(D({i}),XR({i})) = q^2*mu({i})^2",
            _br(D(i, n), XR(i, n), None), scale(qpow(2), mu2))
        add("DX", f"br_(q^2)(D({i}),XR({i})) = q^2",
            _br(D(i, n), XR(i, n), 2), scale(qpow(2), Id))
        add("DX", f"br_(q^-2)(XR({i}),D({i})) = -1",
            _br(XR(i, n), D(i, n), -2), scale(-ONE, Id))
        add("DX", f"br(D({-i}),XL({-i})) = q*mu({-i})^2",
            _br(D(-i, n), XL(-i, n), None), scale(qpow(1), mum2))
        add("DX", f"br_(q^2)(D({-i}),XL({-i})) = q",
            _br(D(-i, n), XL(-i, n), 2), scale(qpow(1), Id))
        add("DX", f"br_(q^-2)(XL({-i}),D({-i})) = -q^-1",
            _br(XL(-i, n), D(-i, n), -2), scale(-qpow(-1), Id))

    # Phi and Psi: recursions
    for i in range(1, n + 1):
        add("recursion", f"Psi({i}) = XL({-i})*XR({i}) + q*mu({-i})^2*Psi({i + 1})",
            Psi(i, n), Psi_recursive(i, n))
        add("recursion", f"Phi({i}) = Lambda({i - 1})^2*D({-i})*D({i}) + q^-1*Phi({i - 1})",
            Phi(i, n), Phi_recursive(i, n))

    # Phi and Psi against mu
    for i in pos_idx:
        for t in all_idx:
            if abs(t) < i:
                add("Phi-Psi-mu", f"br(Psi({i}),mu({t})) = 0", _br(Psi(i, n), mu(t, n), 0), Z)
        for k in all_idx:
            if abs(k) > i:
                add("Phi-Psi-mu", f"br(Phi({i}),mu({k})) = 0", _br(Phi(i, n), mu(k, n), 0), Z)
        if literal_weights:
            for k in all_idx:
                if abs(k) > i:
                    add("Phi-Psi-mu", f"br_(q^-1)(Psi({i}),mu({k})) = 0",
                        _br(Psi(i, n), mu(k, n), -1), Z)
            for t in all_idx:
                if abs(t) < i:
                    add("Phi-Psi-mu", f"br_q(Phi({i}),mu({t})) = 0",
                        _br(Phi(i, n), mu(t, n), 1), Z)
            for s in (i, -i):
                add("Phi-Psi-mu", f"br_(q^-1)(Psi({i}),mu({s})) = 0",
                    _br(Psi(i, n), mu(s, n), -1), Z)
                add("Phi-Psi-mu", f"br_q(Phi({i}),mu({s})) = 0",
                    _br(Phi(i, n), mu(s, n), 1), Z)
    out.extend(weight_identities(n))

    # Phi and Psi against D and X, i < j
    for i in pos_idx:
        for j in range(i + 1, n + 1):
            for text, a, b, k in (
                (f"br_q(D({i}),Psi({j}))", D(i, n), Psi(j, n), 1),
                (f"br_(q^-1)(D({-i}),Psi({j}))", D(-i, n), Psi(j, n), -1),
                (f"br_(q^-1)(Psi({j}),XL({-i}))", Psi(j, n), XL(-i, n), -1),
                (f"br_q(Psi({j}),XR({i}))", Psi(j, n), XR(i, n), 1),
                (f"br_(q^-1)(Phi({i}),XL({-j}))", Phi(i, n), XL(-j, n), -1),
                (f"br_q(Phi({i}),XR({j}))", Phi(i, n), XR(j, n), 1),
            ):
                add("Phi-Psi-ordered", f"{text} = 0", _br(a, b, k), Z)

    # i <= j
    for i in pos_idx:
        for j in range(i, n + 1):
            add("Phi-Psi-ordered", f"br_(q^-1)(Phi({i}),D({j})) = 0", _br(Phi(i, n), D(j, n), -1), Z)
            add("Phi-Psi-ordered", f"br_q(Phi({i}),D({-j})) = 0", _br(Phi(i, n), D(-j, n), 1), Z)
            if j == n:
                continue
            xx = compose(tau(-i, n, 2), tau(-j - 1, n, -2), XL(-j - 1, n), XR(j, n))
            xd_plus = compose(XR(j, n), D(j + 1, n))
            xd_minus = compose(XL(-j - 1, n), D(-j, n))
            tail = f"tau({-i})^2*tau({-j - 1})^-2*XL({-j - 1})*XR({j})"
            add("Psi-shift", f"br(Psi({i}),XR({j})*D({j + 1})) = -q^{j + 2 - i}*{tail}",
                _br(Psi(i, n), xd_plus, 0), scale(-qpow(j + 2 - i), xx))
            add("Psi-shift", f"br(Psi({i}),XL({-j - 1})*D({-j})) = -q^{j + 1 - i}*{tail}",
                _br(Psi(i, n), xd_minus, 0), scale(-qpow(j + 1 - i), xx))
            add("Psi-shift", f"br(Psi({i}),XR({j})*D({j + 1})) = q*br(Psi({i}),XL({-j - 1})*D({-j}))",
                _br(Psi(i, n), xd_plus, 0), scale(qpow(1), _br(Psi(i, n), xd_minus, 0)))

    # same index
    for i in pos_idx:
        add("Phi-Psi-diagonal", f"br_q(D({i}),Psi({i})) = q*XL({-i})",
            _br(D(i, n), Psi(i, n), 1), scale(qpow(1), XL(-i, n)))
        add("Phi-Psi-diagonal", f"br_q(Psi({i}),XL({-i})) = 0", _br(Psi(i, n), XL(-i, n), 1), Z)
        add("Phi-Psi-diagonal", f"br_q(Phi({i}),XR({i})) = q^2*Lambda({i})^2*D({-i})",
            _br(Phi(i, n), XR(i, n), 1), scale(qpow(2), compose(Lambda(i, n, 2), D(-i, n))))
        add("Phi-Psi-diagonal", f"br_(q^-1)(Phi({i}),XL({-i})) = Lambda({i - 1})^2*mu({-i})^2*D({i})",
            _br(Phi(i, n), XL(-i, n), -1), compose(Lambda(i - 1, n, 2), mu(-i, n, 2), D(i, n)))
        add("Phi-Psi-diagonal",
            f"br_q(Phi({i}),XL({-i})) = Lambda({i - 1})^2*D({i}) - lam*q^-1*XL({-i})*Phi({i - 1})",
            _br(Phi(i, n), XL(-i, n), 1),
            op_sum(compose(Lambda(i - 1, n, 2), D(i, n)),
                   scale(-(LAMBDA * qpow(-1)), compose(XL(-i, n), Phi(i - 1, n)))))

    for i in pos_idx:
        for k in pos_idx:
            inner = _br(D(k, n), Psi(i, n), 1)
            add("Phi-Psi-double", f"br_(q^-1)(D({k}),br_q(D({k}),Psi({i}))) = 0",
                _br(D(k, n), inner, -1), Z)

    # the composite right multiplier XR(-i)
    for i in pos_idx:
        xr = XR(-i, n)
        for k in all_idx:
            if abs(k) < i:
                add("XRneg-mu", f"br(XR({-i}),mu({k})) = 0", _br(xr, mu(k, n), 0), Z)
        for l in all_idx:
            if abs(l) != i:
                add("XRneg-mu", f"br(XR({-i}),mu({l})*mu_inv({-l})) = 0",
                    _br(xr, compose(mu(l, n), mu(-l, n, -1)), 0), Z)
        add("XRneg-mu", f"br_q(XR({-i}),mu({i})*mu_inv({-i})) = 0",
            _br(xr, compose(mu(i, n), mu(-i, n, -1)), 1), Z)
        add("XRneg", f"br_q(D({i}),XR({-i})) = 0", _br(D(i, n), xr, 1), Z)
        add("XRneg", f"br(XR({-i}),XL({-i})) = 0", _br(xr, XL(-i, n), 0), Z)
        if i < n:
            lam2 = compose(Lambda(-i, n, 2), mu(i, n, 2), XL(-i - 1, n))
            add("XRneg",
                f"br_q(XR({-i}),XR({i})*D({i + 1})) = q^2*XR({-i - 1}) - q^{i + 3}*Lambda({-i})^2*mu({i})^2*XL({-i - 1})",
                _br(xr, compose(XR(i, n), D(i + 1, n)), 1),
                op_sum(scale(qpow(2), XR(-i - 1, n)), scale(-qpow(i + 3), lam2)))
            add("XRneg",
                f"br_q(XR({-i}),XL({-i - 1})*D({-i})) = -q^{i + 2}*Lambda({-i})^2*mu({i})^2*XL({-i - 1})",
                _br(xr, compose(XL(-i - 1, n), D(-i, n)), 1), scale(-qpow(i + 2), lam2))
    for i in pos_idx:
        for j in range(i + 1, n + 1):
            xr = XR(-j, n)
            add("XRneg", f"br(XR({i}),XR({-j})) = 0", _br(XR(i, n), xr, 0), Z)
            add("XRneg", f"br_q(XR({-j}),XL({-i})) = 0", _br(xr, XL(-i, n), 1), Z)
            add("XRneg", f"br(D({i}),XR({-j})) = 0", _br(D(i, n), xr, 0), Z)
            add("XRneg", f"br_q(D({-i}),XR({-j})) = 0", _br(D(-i, n), xr, 1), Z)
    for i in pos_idx:
        for j in range(i, n + 1):
            add("XRneg-Psi", f"br(XR({-j}),br_q(D({j}),Psi({i}))) = 0",
                _br(XR(-j, n), _br(D(j, n), Psi(i, n), 1), 0), Z)
    return out


def weight_identities(n: int) -> List[Identity]:
    """Scaling of Phi_i and Psi_i under the products Lambda_i and tau_{+-i}.

    Every summand of Psi_i raises exactly one a_j and one a_{-j} with j >= i,
    and every summand of Phi_i lowers one a_j and one a_{-j} with j <= i.
    These are the uniform statements behind the summandwise mu relations.
    """
    out = []
    Z = zero(n)
    for i in range(1, n + 1):
        for s in (i, -i):
            out.append(Identity("Phi-Psi-weight", f"br_(q^-1)(Psi({i}),tau({s})) = 0",
                                _br(Psi(i, n), tau(s, n), -1), Z))
            out.append(Identity("Phi-Psi-weight", f"br_q(Phi({i}),Lambda({s})) = 0",
                                _br(Phi(i, n), Lambda(s, n), 1), Z))
    return out
