"""The quantum symplectic space X of rank n.

X is generated by x_i, i in I = {-n, ..., -1, 1, ..., n}, subject to

    x_j x_i = q x_i x_j                        (i < j, i != -j)
    x_i x_{-i} = q^2 x_{-i} x_i + q^2 lam Om_{i+1}   (i > 0)

with lam = q - 1/q and Om_i = sum_{i <= j <= n} q^(j-i) x_{-j} x_j.  Normal
monomials x_{-n}^{a_{-n}} ... x_n^{a_n} form a basis; a monomial is stored
as its exponent tuple in position order (a_{-n}, ..., a_{-1}, a_1, ..., a_n).

Products are computed one generator at a time with closed-form
commutation formulas.  :func:`naive_normalize` rewrites words with the two
defining relations only and is kept as an independent check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Sequence, Tuple

from .qfield import LAMBDA, ONE, ZERO, RatQ, qint, qpow

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, RatQ]

__all__ = [
    "Element",
    "Monomial",
    "check_rank",
    "check_index",
    "pos",
    "index_at",
    "monomial_word",
    "left_mul_gen",
    "right_mul_gen",
    "product",
    "omega",
    "omega_times",
    "naive_normalize",
    "word_product",
    "homogeneous_basis",
    "basis_up_to",
]


def check_rank(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    return n


def check_index(i: int, n: int) -> int:
    if not isinstance(i, int) or i == 0 or not -n <= i <= n:
        raise ValueError(f"index {i!r} out of range for rank {n}")
    return i


def pos(i: int, n: int) -> int:
    """Position of index i in an exponent tuple."""
    return i + n if i < 0 else i + n - 1


def index_at(p: int, n: int) -> int:
    return p - n if p < n else p - n + 1


def monomial_word(a: Monomial) -> Tuple[int, ...]:
    """The normal word of a monomial: indices in increasing order, with repeats."""
    n = len(a) // 2
    word: List[int] = []
    for p, e in enumerate(a):
        word.extend([index_at(p, n)] * e)
    return tuple(word)


def _bump(a: Monomial, *changes: Tuple[int, int]) -> Monomial:
    b = list(a)
    for p, d in changes:
        b[p] += d
    return tuple(b)


def _add_into(acc: Terms, m: Monomial, c: RatQ) -> None:
    old = acc.get(m)
    if old is None:
        acc[m] = c
        return
    s = old + c
    if s:
        acc[m] = s
    else:
        del acc[m]


def _axpy(acc: Terms, c: RatQ, terms: Terms) -> None:
    one = c.is_one()
    for m, v in terms.items():
        _add_into(acc, m, v if one else c * v)


# -- closed-form commutation ----------------------------------------------------


@lru_cache(maxsize=None)
def omega_times(i: int, a: Monomial) -> Terms:
    """Normal form of Om_i * x^a.  Om_{n+1} is zero.

    Each summand x_{-j} x_j (j >= i) is carried to its place: passing the
    block x_{-n}..x_{-i} costs q^2 per factor, and the inner factors strictly
    between x_{-j} and x_j cost q each.
    """
    n = len(a) // 2
    if i > n:
        return {}
    outer = 2 * sum(a[: pos(-i, n) + 1])
    out: Terms = {}
    for j in range(i, n + 1):
        pm, pp = pos(-j, n), pos(j, n)
        inner = sum(a[pm + 1 : pp])
        out[_bump(a, (pm, 1), (pp, 1))] = qpow(outer + j - i + inner)
    return out


@lru_cache(maxsize=None)
def _left_gen_mono(k: int, a: Monomial) -> Terms:
    n = len(a) // 2
    if k < 0:
        p = pos(k, n)
        return {_bump(a, (p, 1)): qpow(sum(a[:p]))}
    i = k
    pm, pp = pos(-i, n), pos(i, n)
    am = a[pm]
    out: Terms = {_bump(a, (pp, 1)): qpow(sum(a[:pp]) + am)}
    if am and i < n:
        c = (LAMBDA * qint(am)).mul_qpow(am + 1 - sum(a[:pm]))
        _axpy(out, c, omega_times(i + 1, _bump(a, (pm, -1))))
    return out


@lru_cache(maxsize=None)
def _right_gen_mono(k: int, a: Monomial) -> Terms:
    n = len(a) // 2
    if k > 0:
        p = pos(k, n)
        return {_bump(a, (p, 1)): qpow(sum(a[p + 1 :]))}
    i = -k
    pm, pp = pos(-i, n), pos(i, n)
    ai = a[pp]
    out: Terms = {_bump(a, (pm, 1)): qpow(sum(a[pm + 1 :]) + ai)}
    if ai and i < n:
        c = (LAMBDA * qint(ai)).mul_qpow(sum(a[pp:]) - 2 * sum(a[:pm]) + 1)
        _axpy(out, c, omega_times(i + 1, _bump(a, (pp, -1))))
    return out


def _left_terms(k: int, terms: Terms) -> Terms:
    out: Terms = {}
    for m, c in terms.items():
        _axpy(out, c, _left_gen_mono(k, m))
    return out


def _right_terms(k: int, terms: Terms) -> Terms:
    out: Terms = {}
    for m, c in terms.items():
        _axpy(out, c, _right_gen_mono(k, m))
    return out


@lru_cache(maxsize=None)
def _mono_product(a: Monomial, b: Monomial) -> Terms:
    terms: Terms = {b: ONE}
    for k in reversed(monomial_word(a)):
        terms = _left_terms(k, terms)
    return terms


# -- elements ------------------------------------------------------------------


class Element:
    """A finite linear combination of normal monomials of X with Q(q) coefficients.

    Immutable; ``terms`` must not be modified after construction.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Monomial, object] | None = None):
        check_rank(n)
        clean: Terms = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != 2 * n or any((not isinstance(e, int)) or e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for rank {n}")
            c = RatQ.coerce(c)
            if c:
                _add_into(clean, m, c)
        self.n = n
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: Terms) -> "Element":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls._raw(check_rank(n), {})

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls._raw(check_rank(n), {(0,) * (2 * n): ONE})

    @classmethod
    def scalar(cls, n: int, c) -> "Element":
        c = RatQ.coerce(c)
        return cls._raw(check_rank(n), {(0,) * (2 * n): c} if c else {})

    @classmethod
    def gen(cls, n: int, i: int) -> "Element":
        check_index(i, check_rank(n))
        a = [0] * (2 * n)
        a[pos(i, n)] = 1
        return cls._raw(n, {tuple(a): ONE})

    @classmethod
    def monomial(cls, n: int, a: Sequence[int], coeff=ONE) -> "Element":
        return cls(n, {tuple(a): coeff})

    @classmethod
    def parse(cls, text: str, n: int) -> "Element":
        from .grammar import parse_element

        return parse_element(text, n)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, a: Sequence[int]) -> RatQ:
        return self.terms.get(tuple(a), ZERO)

    def degrees(self) -> set:
        return {sum(m) for m in self.terms}

    def scalar_part(self) -> RatQ:
        return self.terms.get((0,) * (2 * self.n), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Element") -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        _axpy(out, ONE, other.terms)
        return Element._raw(self.n, out)

    def __neg__(self) -> "Element":
        return Element._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Element":
        c = RatQ.coerce(c)
        if not c:
            return Element._raw(self.n, {})
        return Element._raw(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "Element":
        return self.scale(other)

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative powers are not defined in X")
        out = Element.one(self.n)
        for _ in range(k):
            out = product(out, self)
        return out

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Monomial, RatQ]]:
        """Terms ordered by normal word, lexicographically descending."""
        return sorted(self.terms.items(), key=lambda t: monomial_word(t[0]), reverse=True)

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"Element(n={self.n}, {str(self)!r})"


def render_monomial(a: Monomial) -> str:
    n = len(a) // 2
    parts = []
    for p, e in enumerate(a):
        if e:
            parts.append(f"x({index_at(p, n)})" + (f"^{e}" if e > 1 else ""))
    return "".join(parts)


def _render_term(a: Monomial, c: RatQ, alone: bool) -> str:
    w = render_monomial(a)
    cs = str(c)
    if not w:
        if alone or (c.is_laurent() and len(c.num.c) == 1):
            return cs
        return f"({cs})"
    if c.is_one():
        return w
    if c == -ONE:
        return "-" + w
    if c.is_laurent() and len(c.num.c) == 1:
        return f"{cs} * {w}"
    if not c.is_laurent():
        return f"{cs} * {w}"
    return f"({cs}) * {w}"


def render_element(e: Element) -> str:
    if not e.terms:
        return "0"
    items = e.sorted_terms()
    out = ""
    for a, c in items:
        t = _render_term(a, c, len(items) == 1)
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


# -- public operations ----------------------------------------------------------


def left_mul_gen(k: int, e: Element) -> Element:
    """Normal form of x_k * e."""
    check_index(k, e.n)
    return Element._raw(e.n, _left_terms(k, e.terms))


def right_mul_gen(k: int, e: Element) -> Element:
    """Normal form of e * x_k."""
    check_index(k, e.n)
    return Element._raw(e.n, _right_terms(k, e.terms))


def product(a: Element, b: Element) -> Element:
    """Normal form of a * b."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    out: Terms = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            _axpy(out, ca * cb, _mono_product(ma, mb))
    return Element._raw(a.n, out)


def omega(i: int, n: int) -> Element:
    """Om_i = sum_{j=i}^{n} q^(j-i) x_{-j} x_j, with Om_{n+1} = 0."""
    check_rank(n)
    if not 1 <= i <= n + 1:
        raise ValueError(f"omega index {i} out of range 1..{n + 1}")
    terms: Terms = {}
    for j in range(i, n + 1):
        a = [0] * (2 * n)
        a[pos(-j, n)] = 1
        a[pos(j, n)] = 1
        terms[tuple(a)] = qpow(j - i)
    return Element._raw(n, terms)


def naive_normalize(word: Iterable[int], n: int, fuel: int = 1_000_000) -> Element:
    """Normal form of x_{w1} x_{w2} ... by rewriting with the defining relations.

    Repeatedly rewrites the leftmost out-of-order adjacent pair, expanding
    Om_{i+1} by its definition, until every word is nondecreasing.
    Raises RuntimeError when ``fuel`` rewrite steps are exhausted.
    """
    check_rank(n)
    word = tuple(word)
    for k in word:
        check_index(k, n)
    pending: Dict[Tuple[int, ...], RatQ] = {word: ONE}
    done: Terms = {}
    steps = 0
    q, q2 = qpow(1), qpow(2)
    while pending:
        nxt: Dict[Tuple[int, ...], RatQ] = {}
        for w, c in pending.items():
            for t in range(len(w) - 1):
                if w[t] > w[t + 1]:
                    break
            else:
                a = [0] * (2 * n)
                for k in w:
                    a[pos(k, n)] += 1
                _add_into(done, tuple(a), c)
                continue
            steps += 1
            if steps > fuel:
                raise RuntimeError("naive_normalize ran out of fuel")
            hi, lo = w[t], w[t + 1]
            head, tail = w[:t], w[t + 2 :]
            if hi == -lo:
                i = hi
                _add_into(nxt, head + (-i, i) + tail, c * q2)
                for j in range(i + 1, n + 1):
                    _add_into(nxt, head + (-j, j) + tail, c * (LAMBDA * qpow(j - i + 1)))
            else:
                _add_into(nxt, head + (lo, hi) + tail, c * q)
        pending = nxt
    return Element._raw(n, done)


def word_product(word: Iterable[int], n: int) -> Element:
    """x_{w1} x_{w2} ... computed by the closed-form product chain."""
    terms: Terms = {(0,) * (2 * n): ONE}
    for k in reversed(tuple(word)):
        terms = _left_terms(check_index(k, n), terms)
    return Element._raw(n, terms)


def homogeneous_basis(n: int, d: int) -> List[Monomial]:
    """All exponent vectors of degree d, in lexicographic order."""
    check_rank(n)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for combo in combinations_with_replacement(range(2 * n), d):
        a = [0] * (2 * n)
        for p in combo:
            a[p] += 1
        out.append(tuple(a))
    out.sort()
    return out


def basis_up_to(n: int, d: int) -> List[Monomial]:
    """Basis monomials of degree <= d, grouped by degree."""
    out: List[Monomial] = []
    for k in range(d + 1):
        out.extend(homogeneous_basis(n, k))
    return out
