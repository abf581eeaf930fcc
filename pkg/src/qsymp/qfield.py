"""Exact arithmetic in the rational function field Q(q).

Two value types live here:

* :class:`LaurentZ` -- a Laurent polynomial in ``q`` with rational
  coefficients, stored sparsely as ``{exponent: coefficient}``.
* :class:`RatQ` -- a quotient ``num/den`` of Laurent polynomials kept in a
  canonical form, so that equality is plain structural comparison.

Canonical form of a :class:`RatQ`: ``den`` is an ordinary polynomial with
nonzero constant term and leading coefficient 1, ``gcd(num, den) = 1``, and
any power of ``q`` sits in ``num``.  Zero is ``0/1``.

Coefficients are Python ``int`` whenever integral and ``Fraction``
otherwise; nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Tuple, Union

__all__ = [
    "LaurentZ",
    "RatQ",
    "ZERO",
    "ONE",
    "Q",
    "LAMBDA",
    "qpow",
    "qint",
    "qfact",
    "qbinom",
    "eval_at",
]

Coeff = Union[int, Fraction]

_EXP_MAX = 2**63 - 1


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _check_exp(k: int) -> int:
    if k > _EXP_MAX or k < -_EXP_MAX:
        raise OverflowError(f"exponent of q out of range: {k}")
    return k


class LaurentZ:
    """Sparse Laurent polynomial in q over the rationals."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: Dict[int, Coeff] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _norm(Fraction(v) if not isinstance(v, (int, Fraction)) else v)
                if v:
                    c[_check_exp(int(k))] = v
        self.c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Coeff]) -> "LaurentZ":
        obj = cls.__new__(cls)
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: Coeff, k: int) -> "LaurentZ":
        coeff = _norm(coeff)
        return cls._raw({_check_exp(k): coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def is_one(self) -> bool:
        c = self.c
        return len(c) == 1 and c.get(0) == 1

    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def terms(self) -> List[Tuple[int, Coeff]]:
        """Terms in descending exponent order."""
        return sorted(self.c.items(), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentZ):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.c.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "LaurentZ") -> "LaurentZ":
        if not other.c:
            return self
        if not self.c:
            return other
        c = dict(self.c)
        for k, v in other.c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = _norm(s)
            else:
                c.pop(k, None)
        return LaurentZ._raw(c)

    def __neg__(self) -> "LaurentZ":
        return LaurentZ._raw({k: -v for k, v in self.c.items()})

    def __sub__(self, other: "LaurentZ") -> "LaurentZ":
        return self + (-other)

    def __mul__(self, other: "LaurentZ") -> "LaurentZ":
        a, b = self.c, other.c
        if not a or not b:
            return LaurentZ._raw({})
        if len(a) == 1:
            (ka, va), = a.items()
            return other.scale(va).shift(ka)
        if len(b) == 1:
            (kb, vb), = b.items()
            return self.scale(vb).shift(kb)
        _check_exp(min(a) + min(b))
        _check_exp(max(a) + max(b))
        c: Dict[int, Coeff] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                c[k] = c.get(k, 0) + va * vb
        return LaurentZ._raw({k: _norm(v) for k, v in c.items() if v})

    def scale(self, s: Coeff) -> "LaurentZ":
        if s == 1:
            return self
        if not s:
            return LaurentZ._raw({})
        return LaurentZ._raw({k: _norm(v * s) for k, v in self.c.items()})

    def shift(self, k: int) -> "LaurentZ":
        """Multiply by q^k."""
        if not k or not self.c:
            return self
        _check_exp(min(self.c) + k)
        _check_exp(max(self.c) + k)
        return LaurentZ._raw({e + k: v for e, v in self.c.items()})

    def __call__(self, q0: Coeff) -> Fraction:
        q0 = Fraction(q0)
        return sum((v * q0**k for k, v in self.c.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"LaurentZ({self.c!r})"

    def __str__(self) -> str:
        return _render_laurent(self)


# -- dense polynomial helpers (ordinary polynomials, low degree first) --------


def _dense(p: LaurentZ) -> Tuple[int, List[Fraction]]:
    lo = min(p.c)
    hi = max(p.c)
    out = [Fraction(0)] * (hi - lo + 1)
    for k, v in p.c.items():
        out[k - lo] = Fraction(v)
    return lo, out


def _sparse(coeffs: List[Fraction], lo: int = 0) -> LaurentZ:
    return LaurentZ._raw({i + lo: _norm(v) for i, v in enumerate(coeffs) if v})


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    quo = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        quo[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return quo, _trim(a[:db])


def _gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    lead = a[-1]
    return [v / lead for v in a]


class RatQ:
    """An element of Q(q) in canonical form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[LaurentZ, Coeff] = 0, den: Union[LaurentZ, Coeff] = 1):
        if not isinstance(num, LaurentZ):
            num = LaurentZ({0: num})
        if not isinstance(den, LaurentZ):
            den = LaurentZ({0: den})
        if den.is_zero():
            raise ZeroDivisionError("division by zero in ℚ(q)")
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentZ, den: LaurentZ) -> "RatQ":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def laurent(cls, p: LaurentZ) -> "RatQ":
        return cls._raw(p, _ONE_L)

    @classmethod
    def coerce(cls, x) -> "RatQ":
        if isinstance(x, RatQ):
            return x
        if isinstance(x, LaurentZ):
            return cls._raw(x, _ONE_L)
        if isinstance(x, (int, Fraction, Rational)):
            return cls._raw(LaurentZ.monomial(Fraction(x), 0), _ONE_L)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatQ")

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.c

    def __bool__(self) -> bool:
        return bool(self.num.c)

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatQ):
            try:
                other = RatQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num.c == other.num.c and self.den.c == other.den.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- field operations --------------------------------------------------

    def __add__(self, other) -> "RatQ":
        if not isinstance(other, RatQ):
            other = RatQ.coerce(other)
        if not other.num.c:
            return self
        if not self.num.c:
            return other
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            return RatQ._raw(self.num + other.num, _ONE_L)
        if d1.c == d2.c:
            return _make(self.num + other.num, d1)
        if d2.is_one():
            return RatQ._raw(self.num + other.num * d1, d1)
        if d1.is_one():
            return RatQ._raw(self.num * d2 + other.num, d2)
        return _make(self.num * d2 + other.num * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "RatQ":
        return RatQ._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatQ":
        if not isinstance(other, RatQ):
            other = RatQ.coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "RatQ":
        return RatQ.coerce(other) - self

    def __mul__(self, other) -> "RatQ":
        if not isinstance(other, RatQ):
            other = RatQ.coerce(other)
        a, b = self.num.c, other.num.c
        if not a or not b:
            return ZERO
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            return RatQ._raw(self.num * other.num, _ONE_L)
        if len(a) == 1 and d1.is_one():
            # monomial times fraction stays canonical
            return RatQ._raw(other.num * self.num, d2)
        if len(b) == 1 and d2.is_one():
            return RatQ._raw(self.num * other.num, d1)
        return _make(self.num * other.num, d1 * d2)

    __rmul__ = __mul__

    def inv(self) -> "RatQ":
        if not self.num.c:
            raise ZeroDivisionError("division by zero in ℚ(q)")
        return _make(self.den, self.num)

    def __truediv__(self, other) -> "RatQ":
        return self * RatQ.coerce(other).inv()

    def __rtruediv__(self, other) -> "RatQ":
        return RatQ.coerce(other) * self.inv()

    def __pow__(self, k: int) -> "RatQ":
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_qpow(self, k: int) -> "RatQ":
        """Multiply by q^k; canonical form is preserved by a shift of num."""
        if not k:
            return self
        return RatQ._raw(self.num.shift(k), self.den)

    def __call__(self, q0) -> Fraction:
        return eval_at(self, q0)

    def __repr__(self) -> str:
        return f"RatQ({str(self)!r})"

    def __str__(self) -> str:
        if self.den.is_one():
            return _render_laurent(self.num)
        return f"({_render_laurent(self.num)})/({_render_laurent(self.den)})"

    @classmethod
    def parse(cls, text: str) -> "RatQ":
        from .grammar import parse_ratq

        return parse_ratq(text)


_ONE_L = LaurentZ._raw({0: 1})


def _canonical(num: LaurentZ, den: LaurentZ) -> Tuple[LaurentZ, LaurentZ]:
    if not num.c:
        return LaurentZ._raw({}), _ONE_L
    s = min(den.c)
    if s:
        den = den.shift(-s)
        num = num.shift(-s)
    if len(den.c) == 1:
        lead = den.c[0]
        if lead == 1:
            return num, _ONE_L
        return num.scale(Fraction(1) / lead), _ONE_L
    nlo, na = _dense(num)
    _, da = _dense(den)
    g = _gcd(na, da)
    if len(g) > 1:
        na = _divmod(na, g)[0]
        da = _divmod(da, g)[0]
    lead = da[-1]
    if lead != 1:
        na = [v / lead for v in na]
        da = [v / lead for v in da]
    if len(da) == 1:
        return _sparse(na, nlo), _ONE_L
    return _sparse(na, nlo), _sparse(da)


def _make(num: LaurentZ, den: LaurentZ) -> RatQ:
    n, d = _canonical(num, den)
    return RatQ._raw(n, d if not d.is_one() else _ONE_L)


def _render_coeff_term(v: Coeff, k: int) -> str:
    if k == 0:
        return str(v)
    qs = "q" if k == 1 else f"q^{k}"
    if v == 1:
        return qs
    if v == -1:
        return "-" + qs
    return f"{v}*{qs}"


def _render_laurent(p: LaurentZ) -> str:
    if not p.c:
        return "0"
    out = ""
    for k, v in p.terms():
        t = _render_coeff_term(v, k)
        if out and not t.startswith("-"):
            out += "+"
        out += t
    return out


ZERO = RatQ._raw(LaurentZ._raw({}), _ONE_L)
ONE = RatQ._raw(_ONE_L, _ONE_L)
Q = RatQ._raw(LaurentZ._raw({1: 1}), _ONE_L)
LAMBDA = RatQ._raw(LaurentZ._raw({1: 1, -1: -1}), _ONE_L)


def qpow(k: int) -> RatQ:
    """The monomial q^k."""
    return RatQ._raw(LaurentZ._raw({_check_exp(k): 1}), _ONE_L)


def qint(m: int, p: int = 1) -> RatQ:
    """The q-number [m]_{q^p} = (q^{pm} - q^{-pm}) / (q^p - q^{-p}).

    Always a Laurent polynomial: q^{p(m-1)} + q^{p(m-3)} + ... + q^{-p(m-1)}.
    """
    if p == 0:
        raise ValueError("q-number base q^0 is degenerate")
    sign = 1
    if m < 0:
        m, sign = -m, -1
    if p < 0:
        p = -p
    return RatQ._raw(
        LaurentZ._raw({p * (m - 1 - 2 * t): sign for t in range(m)}), _ONE_L
    )


def qfact(m: int, p: int = 1) -> RatQ:
    """[m]_{q^p}! = [1][2]...[m]; [0]! = 1."""
    if m < 0:
        raise ValueError(f"q-factorial of negative integer {m}")
    out = ONE
    for t in range(1, m + 1):
        out = out * qint(t, p)
    return out


def qbinom(m: int, k: int, p: int = 1) -> RatQ:
    """Gaussian binomial [m choose k]_{q^p} via the falling-product ratio.

    Defined for every integer m and k >= 0; zero when k > m >= 0.
    """
    if k < 0:
        raise ValueError(f"q-binomial needs k >= 0, got {k}")
    if k == 0:
        return ONE
    if 0 <= m < k:
        return ZERO
    top = ONE
    for t in range(k):
        top = top * qint(m - t, p)
    return top / qfact(k, p)


def eval_at(r: RatQ, q0) -> Fraction:
    """Exact value of r at the rational point q = q0."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ZeroDivisionError("cannot evaluate a Laurent expression at q = 0")
    d = r.den(q0)
    if d == 0:
        raise ZeroDivisionError(f"pole of {r} at q = {q0}")
    return r.num(q0) / d

