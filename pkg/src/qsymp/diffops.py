"""Quantum differential operators on X.

Operators are immutable expression trees evaluated on demand.  Each node
memoizes its action on basis monomials, so shared subtrees (e_1 inside
every Serre word, Psi_i inside every root vector) are evaluated once per
monomial.

Composition follows juxtaposition: in ``compose(A, B)`` (or ``A * B``) the
right factor acts first.
"""

from __future__ import annotations

import copy

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .qfield import LAMBDA, ONE, ZERO, RatQ, qint, qpow
from .sympspace import (
    Element,
    Monomial,
    Terms,
    _axpy,
    _bump,
    _left_gen_mono,
    _right_gen_mono,
    basis_up_to,
    check_index,
    check_rank,
    pos,
)

__all__ = [
    "GeneratorOp",
    "Operator",
    "Gen",
    "Scale",
    "Sum",
    "Compose",
    "Bracket",
    "RootLabel",
    "NamedOp",
    "Counterexample",
    "gen",
    "partial",
    "xl",
    "xr",
    "mu",
    "identity",
    "zero",
    "compose",
    "op_sum",
    "scale",
    "bracket",
    "apply_generator",
    "apply",
    "op_equal_up_to",
    "tau",
    "Lambda",
    "D",
    "XL",
    "XR",
    "XRneg",
    "Phi",
    "Psi",
    "Phi_recursive",
    "Psi_recursive",
    "chevalley",
    "build_chevalley",
    "build_aux",
    "build_root_vector",
]


# -- generators ----------------------------------------------------------------

PARTIAL, LEFT, RIGHT, MU = "d", "xl", "xr", "mu"


@dataclass(frozen=True)
class GeneratorOp:
    """One of d_i, x_{i_L}, x_{i_R}, mu_i^s."""

    kind: str
    i: int
    s: int = 1

    def __post_init__(self):
        if self.kind not in (PARTIAL, LEFT, RIGHT, MU):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.i == 0:
            raise ValueError("generator index must be nonzero")

    def __str__(self) -> str:
        if self.kind != MU:
            return f"{self.kind}({self.i})"
        if self.s == 1:
            return f"mu({self.i})"
        if self.s == -1:
            return f"mu_inv({self.i})"
        return f"mu({self.i})^{self.s}" if self.s > 0 else f"mu_inv({self.i})^{-self.s}"


def _gen_on_basis(g: GeneratorOp, a: Monomial) -> Terms:
    n = len(a) // 2
    if g.kind == MU:
        return {a: qpow(g.s * a[pos(g.i, n)])}
    if g.kind == PARTIAL:
        p = pos(g.i, n)
        e = a[p]
        return {_bump(a, (p, -1)): qint(e)} if e else {}
    if g.kind == LEFT:
        return _left_gen_mono(g.i, a)
    return _right_gen_mono(g.i, a)


# -- expression trees ------------------------------------------------------------


class Operator:
    """Base class of operator expression nodes.

    ``n`` is the rank the operator acts on; ``label`` is an optional display
    name used for named operators such as ``e(1)``.
    """

    __slots__ = ("n", "label", "_memo")

    def __init__(self, n: int, label: Optional[str] = None):
        self.n = check_rank(n)
        self.label = label
        self._memo: Dict[Monomial, Terms] = {}

    def on_basis(self, a: Monomial) -> Terms:
        # write-once per key; a racing duplicate computes the same value
        r = self._memo.get(a)
        if r is None:
            r = self._eval(a)
            self._memo[a] = r
        return r

    def _eval(self, a: Monomial) -> Terms:
        raise NotImplementedError

    def apply_terms(self, terms: Terms) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            _axpy(out, c, self.on_basis(m))
        return out

    def apply(self, e: Element) -> Element:
        if e.n != self.n:
            raise ValueError(f"rank mismatch: operator {self.n}, element {e.n}")
        return Element._raw(self.n, self.apply_terms(e.terms))

    __call__ = apply

    def named(self, label: str) -> "Operator":
        if self.label == label:
            return self
        # nodes may be shared (cached mu, Lambda, ...), so relabel a shallow
        # copy; it keeps the same memo dict
        other = copy.copy(self)
        other.label = label
        return other

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "Operator") -> "Operator":
        return op_sum(self, other)

    def __sub__(self, other: "Operator") -> "Operator":
        return op_sum(self, scale(-ONE, other))

    def __neg__(self) -> "Operator":
        return scale(-ONE, self)

    def __mul__(self, other) -> "Operator":
        if isinstance(other, Operator):
            return compose(self, other)
        return scale(other, self)

    def __rmul__(self, other) -> "Operator":
        return scale(other, self)

    def __pow__(self, k: int) -> "Operator":
        if k < 0:
            raise ValueError("negative operator powers are not supported")
        return compose(*([self] * k)) if k else identity(self.n)

    def __str__(self) -> str:
        return self.label or self._render()

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self}>"

    def _render(self) -> str:
        raise NotImplementedError


class Gen(Operator):
    __slots__ = ("g",)

    def __init__(self, g: GeneratorOp, n: int):
        super().__init__(n)
        check_index(g.i, n)
        self.g = g

    def _eval(self, a: Monomial) -> Terms:
        return _gen_on_basis(self.g, a)

    def _render(self) -> str:
        return str(self.g)


class Scale(Operator):
    __slots__ = ("c", "op")

    def __init__(self, c: RatQ, op: Operator):
        super().__init__(op.n)
        self.c = RatQ.coerce(c)
        self.op = op

    def _eval(self, a: Monomial) -> Terms:
        c = self.c
        if not c:
            return {}
        return {m: c * v for m, v in self.op.on_basis(a).items()}

    def _render(self) -> str:
        return f"({self.c})*{_wrap(self.op)}"


class Sum(Operator):
    __slots__ = ("ops",)

    def __init__(self, ops: Sequence[Operator], n: int):
        super().__init__(n)
        for op in ops:
            _same_rank(n, op)
        self.ops = tuple(ops)

    def _eval(self, a: Monomial) -> Terms:
        out: Terms = {}
        for op in self.ops:
            _axpy(out, ONE, op.on_basis(a))
        return out

    def _render(self) -> str:
        return " + ".join(str(op) for op in self.ops) if self.ops else "0"


class Compose(Operator):
    """Product of operators; the last factor acts first."""

    __slots__ = ("ops",)

    def __init__(self, ops: Sequence[Operator], n: int):
        super().__init__(n)
        for op in ops:
            _same_rank(n, op)
        self.ops = tuple(ops)

    def _eval(self, a: Monomial) -> Terms:
        ops = self.ops
        if not ops:
            return {a: ONE}
        terms = ops[-1].on_basis(a)
        for op in reversed(ops[:-1]):
            terms = op.apply_terms(terms)
        return terms

    def _render(self) -> str:
        return "*".join(_wrap(op) for op in self.ops) if self.ops else "id"


class Bracket(Operator):
    """[A, B]_v = AB - v BA."""

    __slots__ = ("a", "b", "v")

    def __init__(self, a: Operator, b: Operator, v: RatQ = ONE):
        _same_rank(a.n, b)
        super().__init__(a.n)
        self.a, self.b, self.v = a, b, RatQ.coerce(v)

    def _eval(self, m: Monomial) -> Terms:
        out = dict(self.a.apply_terms(self.b.on_basis(m)))
        if self.v:
            _axpy(out, -self.v, self.b.apply_terms(self.a.on_basis(m)))
        return out

    def _render(self) -> str:
        if self.v.is_one():
            return f"br({self.a}, {self.b})"
        return f"br_({self.v})({self.a}, {self.b})"


def _wrap(op: Operator) -> str:
    s = str(op)
    if op.label is None and isinstance(op, (Sum, Scale)):
        return f"({s})"
    return s


def _same_rank(n: int, op: Operator) -> None:
    if op.n != n:
        raise ValueError(f"rank mismatch: {n} vs {op.n}")


# -- constructors --------------------------------------------------------------


@lru_cache(maxsize=None)
def gen(kind: str, i: int, n: int, s: int = 1) -> Operator:
    return Gen(GeneratorOp(kind, i, s), n)


def partial(i: int, n: int) -> Operator:
    return gen(PARTIAL, i, n)


def xl(i: int, n: int) -> Operator:
    return gen(LEFT, i, n)


def xr(i: int, n: int) -> Operator:
    return gen(RIGHT, i, n)


def mu(i: int, n: int, s: int = 1) -> Operator:
    return gen(MU, i, n, s)


@lru_cache(maxsize=None)
def identity(n: int) -> Operator:
    return Compose((), n)


@lru_cache(maxsize=None)
def zero(n: int) -> Operator:
    return Sum((), n)


def compose(*ops: Operator) -> Operator:
    if not ops:
        raise ValueError("compose() needs at least one operator")
    if len(ops) == 1:
        return ops[0]
    return Compose(ops, ops[0].n)


def op_sum(*ops: Operator) -> Operator:
    if not ops:
        raise ValueError("op_sum() needs at least one operator")
    return Sum(ops, ops[0].n)


def scale(c, op: Operator) -> Operator:
    return Scale(RatQ.coerce(c), op)


def bracket(a: Operator, b: Operator, v=ONE) -> Operator:
    return Bracket(a, b, RatQ.coerce(v))


def apply_generator(g: GeneratorOp, e: Element) -> Element:
    check_index(g.i, e.n)
    out: Terms = {}
    for m, c in e.terms.items():
        _axpy(out, c, _gen_on_basis(g, m))
    return Element._raw(e.n, out)


def apply(op: Operator, e: Element) -> Element:
    return op.apply(e)


@dataclass(frozen=True)
class Counterexample:
    """First basis point where two sides disagree."""

    monomials: Tuple[Monomial, ...]
    lhs: Element
    rhs: Element

    def where(self) -> str:
        from .sympspace import render_monomial

        return " | ".join(render_monomial(m) or "1" for m in self.monomials)


def op_equal_up_to(a: Operator, b: Operator, n: int, d: int) -> Optional[Counterexample]:
    """Compare A and B on every monomial of degree <= d.

    Returns None when they agree everywhere, else the first disagreement in
    basis order.  Agreement is evidence up to degree d, not a proof.
    """
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    _same_rank(n, a)
    _same_rank(n, b)
    for m in basis_up_to(n, d):
        lhs, rhs = a.on_basis(m), b.on_basis(m)
        if lhs != rhs:
            return Counterexample((m,), Element._raw(n, lhs), Element._raw(n, rhs))
    return None


# -- auxiliary operators ---------------------------------------------------------


def _prod_mu(indices, n: int, s: int) -> Operator:
    idx = list(indices)
    if not idx:
        return identity(n)
    return compose(*(mu(j, n, s) for j in idx))


@lru_cache(maxsize=None)
def tau(i: int, n: int, s: int = 1) -> Operator:
    """tau_i^s: product of mu_j^s for j >= i (i > 0) or j <= i (i < 0)."""
    if abs(i) == n + 1:
        return identity(n)
    check_index(i, n)
    if i > 0:
        return _prod_mu(range(i, n + 1), n, s).named(_pw("tau", i, s))
    return _prod_mu(range(-n, i + 1), n, s).named(_pw("tau", i, s))


@lru_cache(maxsize=None)
def Lambda(i: int, n: int, s: int = 1) -> Operator:
    """Lambda_i^s; Lambda_0 is the identity."""
    if i == 0:
        return identity(n)
    check_index(i, n)
    if i > 0:
        return _prod_mu(range(1, i + 1), n, s).named(_pw("Lambda", i, s))
    return _prod_mu(range(i, 0), n, s).named(_pw("Lambda", i, s))


def _pw(name: str, i: int, s: int) -> str:
    return f"{name}({i})" if s == 1 else f"{name}({i})^{s}"


@lru_cache(maxsize=None)
def D(i: int, n: int) -> Operator:
    check_index(i, n)
    if i < 0:
        t = -i
        op = compose(mu(t, n), tau(-t - 1, n, -1), partial(i, n))
    else:
        op = compose(tau(1, n, -1), Lambda(i - 1, n, -1), partial(i, n))
    return op.named(f"D({i})")


@lru_cache(maxsize=None)
def XL(i: int, n: int) -> Operator:
    """The left multiplier for a negative index: mu_t^{-1} mu_{-t} x_{-t,L}."""
    if i >= 0:
        raise ValueError("XL is defined for negative indices only")
    check_index(i, n)
    t = -i
    return compose(mu(t, n, -1), mu(-t, n), xl(i, n)).named(f"XL({i})")


@lru_cache(maxsize=None)
def XR(i: int, n: int) -> Operator:
    """Right multipliers: Lambda_i^2 x_{i,R} for i > 0; the composite
    q^t Lambda_{1-t}^2 (mu_t^2 XL(-t) + lam mu_{-t}^2 Psi_{t+1} D_t) for i = -t."""
    check_index(i, n)
    if i > 0:
        return compose(Lambda(i, n, 2), xr(i, n)).named(f"XR({i})")
    return XRneg(-i, n)


@lru_cache(maxsize=None)
def XRneg(t: int, n: int) -> Operator:
    check_index(t, n)
    if t < 0:
        raise ValueError("XRneg takes a positive index")
    inner = op_sum(
        compose(mu(t, n, 2), XL(-t, n)),
        scale(LAMBDA, compose(mu(-t, n, 2), Psi(t + 1, n), D(t, n))),
    )
    return scale(qpow(t), compose(Lambda(1 - t, n, 2), inner)).named(f"XR({-t})")


@lru_cache(maxsize=None)
def Psi(i: int, n: int) -> Operator:
    """Psi_i = tau_{-i}^2 sum_{j>=i} q^{j-i} tau_{-j}^{-2} XL(-j) XR(j); Psi_{n+1} = 0."""
    if i == n + 1:
        return zero(n)
    check_index(i, n)
    if i < 0:
        raise ValueError("Psi takes a positive index")
    terms = [
        scale(qpow(j - i), compose(tau(-j, n, -2), XL(-j, n), XR(j, n)))
        for j in range(i, n + 1)
    ]
    return compose(tau(-i, n, 2), op_sum(*terms)).named(f"Psi({i})")


@lru_cache(maxsize=None)
def Psi_recursive(i: int, n: int) -> Operator:
    """Psi_i = XL(-i) XR(i) + q mu_{-i}^2 Psi_{i+1}."""
    if i == n + 1:
        return zero(n)
    check_index(i, n)
    return op_sum(
        compose(XL(-i, n), XR(i, n)),
        scale(qpow(1), compose(mu(-i, n, 2), Psi_recursive(i + 1, n))),
    )


@lru_cache(maxsize=None)
def Phi(i: int, n: int) -> Operator:
    """Phi_i = sum_{j=1}^{i} q^{j-i} Lambda_{j-1}^2 D(-j) D(j); Phi_0 = 0."""
    if i == 0:
        return zero(n)
    check_index(i, n)
    if i < 0:
        raise ValueError("Phi takes a nonnegative index")
    terms = [
        scale(qpow(j - i), compose(Lambda(j - 1, n, 2), D(-j, n), D(j, n)))
        for j in range(1, i + 1)
    ]
    return op_sum(*terms).named(f"Phi({i})")


@lru_cache(maxsize=None)
def Phi_recursive(i: int, n: int) -> Operator:
    """Phi_i = Lambda_{i-1}^2 D(-i) D(i) + q^{-1} Phi_{i-1}."""
    if i == 0:
        return zero(n)
    check_index(i, n)
    return op_sum(
        compose(Lambda(i - 1, n, 2), D(-i, n), D(i, n)),
        scale(qpow(-1), Phi_recursive(i - 1, n)),
    )


# -- Chevalley generators ----------------------------------------------------------


@lru_cache(maxsize=None)
def chevalley(which: str, i: int, n: int) -> Operator:
    """e_i, f_i, k_i or k_i^{-1} ("e", "f", "k", "kinv") as differential operators."""
    check_rank(n)
    if not 1 <= i <= n:
        raise ValueError(f"Chevalley index {i} out of range 1..{n}")
    inv2 = qint(2).inv()
    if which in ("k", "kinv"):
        s = 1 if which == "k" else -1
        if i == 1:
            op = compose(mu(-1, n, 2 * s), mu(1, n, -2 * s))
        else:
            op = compose(mu(-i, n, s), mu(1 - i, n, -s), mu(i - 1, n, s), mu(i, n, -s))
        return op.named(f"k({i})" if s == 1 else f"k_inv({i})")
    if which == "e":
        if i == 1:
            inner = op_sum(
                compose(tau(-2, n, -1), xl(-1, n)),
                scale(qpow(2), compose(tau(2, n, -1), xr(-1, n))),
            )
            op = scale(inv2 * qpow(-1), compose(mu(1, n, -1), inner, partial(1, n)))
        else:
            op = op_sum(
                compose(mu(i - 1, n), mu(i, n, -1), tau(-i - 1, n, -1), xl(-i, n), partial(1 - i, n)),
                scale(-ONE, compose(tau(i, n, -1), xr(i - 1, n), partial(i, n))),
            )
        return op.named(f"e({i})")
    if which == "f":
        if i == 1:
            inner = op_sum(
                compose(tau(2, n, -1), xr(1, n)),
                scale(qpow(2), compose(tau(-2, n, -1), xl(1, n))),
            )
            op = scale(inv2 * qpow(-1), compose(mu(-1, n, -1), inner, partial(-1, n)))
        else:
            op = op_sum(
                scale(-ONE, compose(mu(1 - i, n), mu(-i, n, -1), tau(i + 1, n, -1), xr(i, n), partial(i - 1, n))),
                compose(tau(-i, n, -1), xl(1 - i, n), partial(-i, n)),
            )
        return op.named(f"f({i})")
    raise ValueError(f"unknown Chevalley generator {which!r}")


def build_chevalley(i: int, which: str, n: int) -> Operator:
    return chevalley({"k^-1": "kinv", "k_inv": "kinv"}.get(which, which), i, n)


# -- named operators -------------------------------------------------------------------


@dataclass(frozen=True)
class NamedOp:
    """A named operator such as NamedOp("Psi", (2,), n=3)."""

    name: str
    args: Tuple
    n: int


_AUX = {
    "tau": lambda n, i, s=1: tau(i, n, s),
    "Lambda": lambda n, i, s=1: Lambda(i, n, s),
    "D": lambda n, i: D(i, n),
    "XL": lambda n, i: XL(i, n),
    "XR": lambda n, i: XR(i, n),
    "XRneg": lambda n, i: XRneg(-i if i < 0 else i, n),
    "Phi": lambda n, i: Phi(i, n),
    "Psi": lambda n, i: Psi(i, n),
    "e": lambda n, i: chevalley("e", i, n),
    "f": lambda n, i: chevalley("f", i, n),
    "k": lambda n, i, s=1: chevalley("k" if s == 1 else "kinv", i, n),
    "eRoot": lambda n, label, method="closed": build_root_vector(label, method, n),
}


def build_aux(op: NamedOp) -> Operator:
    try:
        builder = _AUX[op.name]
    except KeyError:
        raise ValueError(f"unknown named operator {op.name!r}") from None
    return builder(op.n, *op.args)


# -- root vectors ----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class RootLabel:
    """Positive root label (first, second).

    (i, i) is 2eps_i; (l, k) with l < k is eps_l + eps_k; (-l, k) with
    l < k is -eps_l + eps_k.
    """

    first: int
    second: int

    def validate(self, n: int) -> "RootLabel":
        i, j = self.first, self.second
        ok = 1 <= j <= n and i != 0 and abs(i) <= j and not (i < 0 and -i == j)
        if not ok:
            raise ValueError(f"invalid root label {self} for rank {n}")
        return self

    @property
    def is_diagonal(self) -> bool:
        return self.first == self.second

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


def _label(label) -> RootLabel:
    return label if isinstance(label, RootLabel) else RootLabel(*label)


@lru_cache(maxsize=None)
def _root_closed(label: RootLabel, n: int) -> Operator:
    i, j = label.first, label.second
    t1 = compose(tau(1, n), tau(-1, n, -1))
    if i < 0:
        i = -i
        sign = -ONE if (i + j) % 2 else ONE
        body = op_sum(
            compose(XR(i, n), D(j, n)),
            scale(-ONE, compose(bracket(D(j, n), Psi(i + 1, n), qpow(1)), D(-i, n))),
        )
        op = scale(sign * qpow(-2), body)
    elif i == j:
        body = op_sum(
            compose(XRneg(i, n), D(i, n)),
            scale(qpow(-2), compose(bracket(D(i, n), Psi(1, n), qpow(1)), D(i, n))),
        )
        op = scale(qint(2).inv(), compose(t1, body))
    else:
        sign = ONE if (j + 1) % 2 == 0 else -ONE
        body = op_sum(
            compose(XL(-i, n), D(j, n)),
            scale(qpow(i - 1), compose(XRneg(j, n), bracket(Phi(i, n), XL(-i, n), qpow(1)))),
        )
        op = scale(sign, compose(t1, body))
    return op.named(f"E{label}")


@lru_cache(maxsize=None)
def _root_recursive(label: RootLabel, n: int) -> Operator:
    i, j = label.first, label.second
    q1 = qpow(1)
    e = lambda t: chevalley("e", t, n)  # noqa: E731
    rec = lambda a, b: _root_recursive(RootLabel(a, b), n)  # noqa: E731
    if (i, j) == (1, 1):
        op = e(1)
    elif (i, j) == (1, 2):
        op = bracket(e(1), e(2), qpow(2))
    elif i < 0:
        op = e(j) if -i == j - 1 else bracket(rec(i, j - 1), e(j), q1)
    elif i == j:
        op = scale(qint(2).inv(), bracket(rec(1, j), rec(-1, j)))
    elif i == j - 1:
        op = bracket(e(j - 1), rec(j - 2, j), q1)
    else:
        op = bracket(rec(i, j - 1), e(j), q1)
    return op


def build_root_vector(label, method: str, n: int) -> Operator:
    """Root vector e_label, built from its closed form or by bracket recursion."""
    check_rank(n)
    label = _label(label).validate(n)
    if method == "closed":
        return _root_closed(label, n)
    if method == "recursive":
        return _root_recursive(label, n)
    raise ValueError(f"unknown construction method {method!r}")
