"""Verification suites for the operator realization of U_q(sp_2n).

A suite is a list of named checks.  Checks run in order, or across worker
processes when ``jobs > 1``; results are always reported in suite order.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List

from ..diffops import (
    Operator,
    RootLabel,
    bracket,
    build_root_vector,
    chevalley,
    compose,
    identity,
    op_equal_up_to,
    op_sum,
    scale,
    zero,
)
from ..qfield import ONE, RatQ, qbinom, qpow
from ..sympspace import (
    Element,
    Monomial,
    Terms,
    _axpy,
    _mono_product,
    basis_up_to,
    check_rank,
    homogeneous_basis,
    pos,
    product,
)
from .actions import e12_action
from .data import CartanData, CoproductRule, enumerate_positive_roots, pairing, root_weight, simple_root
from .lemmas import lemma_battery
from .report import FAIL, PASS, CheckResult, SuiteReport


@dataclass(frozen=True)
class Check:
    id: str
    run: Callable[[], CheckResult]


def op_check(cid: str, lhs: Operator, rhs: Operator, n: int, d: int) -> Check:
    def run() -> CheckResult:
        c = op_equal_up_to(lhs, rhs, n, d)
        if c is None:
            return CheckResult(cid, PASS)
        return CheckResult(cid, FAIL, c.monomials, str(c.lhs), str(c.rhs))

    return Check(cid, run)


# -- running ---------------------------------------------------------------------

_PENDING: List[Check] = []


def _run_index(k: int) -> CheckResult:
    return _PENDING[k].run()


def run_checks(checks: List[Check], jobs: int = 1) -> List[CheckResult]:
    """Run checks and return results in the order given.

    With jobs > 1 the checks are farmed out to forked workers, which inherit
    the already-built operators; each worker keeps its own memo tables.
    """
    if jobs <= 1 or len(checks) < 2:
        return [c.run() for c in checks]
    global _PENDING
    _PENDING = checks
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(jobs, len(checks))) as pool:
            return pool.map(_run_index, range(len(checks)), chunksize=1)
    finally:
        _PENDING = []


def _report(name: str, n: int, bound: int, checks: List[Check], jobs: int) -> SuiteReport:
    t0 = time.perf_counter()
    results = run_checks(checks, jobs)
    return SuiteReport(name, n, bound, results, time.perf_counter() - t0)


def _check_bound(d: int, least: int = 0) -> int:
    if not isinstance(d, int) or d < least:
        raise ValueError(f"degree bound must be an integer >= {least}, got {d!r}")
    return d


# -- Serre relations ---------------------------------------------------------------


def serre_checks(n: int, d: int) -> List[Check]:
    check_rank(n)
    cartan = CartanData.for_rank(n)
    e = lambda i: chevalley("e", i, n)  # noqa: E731
    f = lambda i: chevalley("f", i, n)  # noqa: E731
    k = lambda i: chevalley("k", i, n)  # noqa: E731
    kinv = lambda i: chevalley("kinv", i, n)  # noqa: E731
    Id, Z = identity(n), zero(n)
    rng = range(1, n + 1)
    out: List[Check] = []
    add = lambda cid, l, r: out.append(op_check(cid, l, r, n, d))  # noqa: E731

    for i in rng:
        for j in rng:
            if i < j:
                add(f"serre1: k({i})*k({j}) = k({j})*k({i})", compose(k(i), k(j)), compose(k(j), k(i)))
        add(f"serre1: k({i})*k_inv({i}) = 1", compose(k(i), kinv(i)), Id)
        add(f"serre1: k_inv({i})*k({i}) = 1", compose(kinv(i), k(i)), Id)

    for i in rng:
        for j in rng:
            s = cartan.d[i - 1] * cartan.entry(i, j)
            add(f"serre2: k({i})*e({j})*k_inv({i}) = q^{s}*e({j})",
                compose(k(i), e(j), kinv(i)), scale(qpow(s), e(j)))
            add(f"serre2: k({i})*f({j})*k_inv({i}) = q^{-s}*f({j})",
                compose(k(i), f(j), kinv(i)), scale(qpow(-s), f(j)))

    for i in rng:
        for j in rng:
            if i == j:
                qi = cartan.qi(i)
                c = (qi - qi.inv()).inv()
                add(f"serre3: br(e({i}),f({i})) = (k({i}) - k_inv({i}))/(q_{i} - q_{i}^-1)",
                    bracket(e(i), f(j)), scale(c, op_sum(k(i), scale(-ONE, kinv(i)))))
            else:
                add(f"serre3: br(e({i}),f({j})) = 0", bracket(e(i), f(j)), Z)

    for name, g in (("serre4", e), ("serre5", f)):
        for i in rng:
            for j in rng:
                if i == j:
                    continue
                m = 1 - cartan.entry(i, j)
                terms = []
                for t in range(m + 1):
                    c = qbinom(m, t, cartan.d[i - 1])
                    if t % 2:
                        c = -c
                    terms.append(scale(c, compose(*([g(i)] * t + [g(j)] + [g(i)] * (m - t)))))
                x = "e" if name == "serre4" else "f"
                add(f"{name}: sum_t (-1)^t [{m} t]_(q_{i}) {x}({i})^t*{x}({j})*{x}({i})^({m}-t) = 0",
                    op_sum(*terms), Z)

    e12 = bracket(e(1), e(2), qpow(2))
    add("bracket: br_(q^-2)(e(1),br_(q^2)(e(1),e(2))) = 0", bracket(e(1), e12, qpow(-2)), Z)
    add("bracket: br_(q^2)(e(2),br(br_(q^2)(e(1),e(2)),e(2))) = 0",
        bracket(e(2), bracket(e12, e(2)), qpow(2)), Z)
    for i in range(2, n + 1):
        for j in (i - 1, i + 1):
            if 2 <= j <= n:
                add(f"bracket: br_(q^-1)(e({i}),br_q(e({i}),e({j}))) = 0",
                    bracket(e(i), bracket(e(i), e(j), qpow(1)), qpow(-1)), Z)
    return out


def serre_suite(n: int, d: int, jobs: int = 1) -> SuiteReport:
    """Relations among e_i, f_i, k_i^{+-1} as operator identities up to degree d."""
    _check_bound(d, 2)
    return _report("serre", n, d, serre_checks(n, d), jobs)


# -- module algebra ------------------------------------------------------------------


def _module_check(rule: CoproductRule, n: int, d: int) -> Check:
    g, i = rule.generator, rule.i
    name = {"kinv": "k_inv"}.get(g, g)
    cid = f"module: {name}({i}) on products"

    def run() -> CheckResult:
        h = chevalley(g, i, n)
        pairs = rule.operators(n)
        one = (0,) * (2 * n)
        unit = h.on_basis(one)
        want = {one: RatQ.coerce(rule.counit)} if rule.counit else {}
        if unit != want:
            return CheckResult(cid, FAIL, (one,), str(Element._raw(n, unit)), str(Element._raw(n, want)))
        basis = basis_up_to(n, d)
        for a in basis:
            for b in basis:
                lhs = h.apply_terms(_mono_product(a, b))
                rhs: Terms = {}
                for left, right in pairs:
                    la = Element._raw(n, left.on_basis(a))
                    rb = Element._raw(n, right.on_basis(b))
                    _axpy(rhs, ONE, product(la, rb).terms)
                if lhs != rhs:
                    return CheckResult(cid, FAIL, (a, b), str(Element._raw(n, lhs)), str(Element._raw(n, rhs)))
        return CheckResult(cid, PASS)

    return Check(cid, run)


def module_algebra_checks(n: int, d: int) -> List[Check]:
    check_rank(n)
    return [
        _module_check(CoproductRule.of(g, i), n, d)
        for i in range(1, n + 1)
        for g in ("e", "f", "k", "kinv")
    ]


def module_algebra_suite(n: int, d: int, jobs: int = 1) -> SuiteReport:
    """h.(uv) = sum h_(1).u h_(2).v on all monomial pairs of degree <= d, and h.1 = eps(h)1."""
    _check_bound(d)
    return _report("module-algebra", n, d, module_algebra_checks(n, d), jobs)


# -- highest weight ----------------------------------------------------------------------


class _Echelon:
    """Row-reduced span of sparse vectors over Q(q), keyed by monomial."""

    def __init__(self, order: List[Monomial]):
        self.rank_of = {m: k for k, m in enumerate(order)}
        self.rows: Dict[Monomial, Terms] = {}

    def _pivot(self, v: Terms) -> Monomial:
        return min(v, key=self.rank_of.__getitem__)

    def reduce(self, v: Terms) -> Terms:
        v = {m: c for m, c in v.items() if c}
        while v:
            p = self._pivot(v)
            row = self.rows.get(p)
            if row is None:
                return v
            _axpy(v, -v[p], row)
        return v

    def insert(self, v: Terms) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        p = self._pivot(v)
        inv = v[p].inv()
        self.rows[p] = {m: c * inv for m, c in v.items()}
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def f_closure_dimension(n: int, m: int) -> int:
    """Dimension of the span of all f-words applied to x_{-n}^m."""
    top = [0] * (2 * n)
    top[pos(-n, n)] = m
    start = {tuple(top): ONE}
    span = _Echelon(homogeneous_basis(n, m))
    span.insert(start)
    queue = [start]
    fs = [chevalley("f", i, n) for i in range(1, n + 1)]
    while queue:
        v = queue.pop(0)
        for f in fs:
            w = f.apply_terms(v)
            if w and span.insert(w):
                queue.append(w)
    return span.dim


def highest_weight_checks(n: int, m: int) -> List[Check]:
    check_rank(n)
    top = [0] * (2 * n)
    top[pos(-n, n)] = m
    top = tuple(top)
    out = []
    for i in range(1, n + 1):
        cid = f"highest-weight: e({i})*x({-n})^{m} = 0"

        def run(i=i, cid=cid) -> CheckResult:
            v = chevalley("e", i, n).on_basis(top)
            if v:
                return CheckResult(cid, FAIL, (top,), str(Element._raw(n, v)), "0")
            return CheckResult(cid, PASS)

        out.append(Check(cid, run))

    cid = f"highest-weight: f-closure of x({-n})^{m} spans degree {m}"

    def run_dim() -> CheckResult:
        want = comb(2 * n + m - 1, m)
        got = f_closure_dimension(n, m)
        detail = f"dimension {got} of {want}"
        if got != want:
            return CheckResult(cid, FAIL, (top,), str(got), str(want), detail)
        return CheckResult(cid, PASS, detail=detail)

    out.append(Check(cid, run_dim))
    return out


def highest_weight_suite(n: int, m: int, jobs: int = 1) -> SuiteReport:
    """x_{-n}^m is killed by every e_i and generates the degree-m part under the f_i.

    This certifies cyclicity and dimension only, not irreducibility.
    """
    _check_bound(m)
    return _report("highest-weight", n, m, highest_weight_checks(n, m), jobs)


# -- root vectors ------------------------------------------------------------------------------


def label_text(label: RootLabel) -> str:
    sign = "-" if label.first < 0 else "+"
    return f"E({sign},{abs(label.first)},{label.second})"


def root_vector_checks(n: int, d: int) -> List[Check]:
    check_rank(n)
    out: List[Check] = []
    add = lambda cid, l, r: out.append(op_check(cid, l, r, n, d))  # noqa: E731
    roots = enumerate_positive_roots(n)
    for label in roots:
        add(f"roots: {label_text(label)} closed = recursive",
            build_root_vector(label, "closed", n), build_root_vector(label, "recursive", n))
    add("roots: E(+,1,1) closed = e(1)", build_root_vector((1, 1), "closed", n), chevalley("e", 1, n))
    for i in range(2, n + 1):
        label = RootLabel(1 - i, i)
        add(f"roots: {label_text(label)} closed = e({i})",
            build_root_vector(label, "closed", n), chevalley("e", i, n))
    for label in roots:
        out.append(_weight_check(label, n, d))
    out.append(_e12_formula_check(n, d))
    return out


def _weight_check(label: RootLabel, n: int, d: int) -> Check:
    cid = f"roots: {label_text(label)} has weight {weight_text(root_weight(label))}"

    def run() -> CheckResult:
        r = build_root_vector(label, "closed", n)
        beta = root_weight(label)
        for i in range(1, n + 1):
            lhs = compose(chevalley("k", i, n), r, chevalley("kinv", i, n))
            c = op_equal_up_to(lhs, scale(qpow(pairing(simple_root(i), beta)), r), n, d)
            if c is not None:
                return CheckResult(cid, FAIL, c.monomials, str(c.lhs), str(c.rhs), f"k({i})")
        return CheckResult(cid, PASS)

    return Check(cid, run)


def weight_text(w: Dict[int, int]) -> str:
    parts = []
    for k in sorted(w):
        c = w[k]
        if c:
            coef = "" if c == 1 else "-" if c == -1 else str(c)
            parts.append(f"{coef}eps{k}")
    return "+".join(parts).replace("+-", "-")


def _e12_formula_check(n: int, d: int) -> Check:
    cid = "roots: br_(q^2)(e(1),e(2)) matches its closed-form action"

    def run() -> CheckResult:
        op = build_root_vector((1, 2), "recursive", n)
        for m in basis_up_to(n, d):
            got, want = op.on_basis(m), e12_action(m)
            if got != want:
                return CheckResult(cid, FAIL, (m,), str(Element._raw(n, got)), str(Element._raw(n, want)))
        return CheckResult(cid, PASS)

    return Check(cid, run)


def root_vector_suite(n: int, d: int, jobs: int = 1) -> SuiteReport:
    """Closed and recursive root vectors agree, base cases match e_i, weights are right."""
    _check_bound(d)
    return _report("root-vectors", n, d, root_vector_checks(n, d), jobs)


# -- lemma battery -------------------------------------------------------------------------------


def lemma_checks(n: int, d: int) -> List[Check]:
    return [op_check(ident.id, ident.lhs, ident.rhs, n, d) for ident in lemma_battery(n)]


def lemma_suite(n: int, d: int, jobs: int = 1) -> SuiteReport:
    """Commutation identities among D, XL, XR, Phi, Psi up to degree d."""
    _check_bound(d)
    return _report("lemmas", n, d, lemma_checks(n, d), jobs)


SUITES = {
    "serre": serre_suite,
    "module-algebra": module_algebra_suite,
    "highest-weight": highest_weight_suite,
    "root-vectors": root_vector_suite,
    "lemmas": lemma_suite,
}


def run_suite(name: str, n: int, d: int, jobs: int = 1) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(n, d, jobs)
