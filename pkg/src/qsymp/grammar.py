"""Parsers for coefficients, elements of X and operator expressions.

One recursive-descent parser serves all three languages; the mode decides
which atoms are legal.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/' | <juxtaposition>) unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 'q' | 'lam' | '(' expr ')' | call

Calls are ``x(i)`` in elements, and in operators ``d(i)``, ``xl(i)``,
``xr(i)``, ``mu(i)``, ``mu_inv(i)``, ``e(i)``, ``f(i)``, ``k(i)``,
``k_inv(i)``, ``E(s,i,j)``, ``Phi(i)``, ``Psi(i)``, ``D(i)``, ``XL(i)``,
``XR(i)``, ``tau(i)``, ``Lambda(i)``, ``id`` and the brackets ``br(A,B)``
and ``br_v(A,B)``.  Juxtaposition is allowed only before a call or an
opening parenthesis, so ``x(-1)x(1)`` and ``2 x(1)`` both parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, List, Optional

from .qfield import LAMBDA, ONE, Q, RatQ

__all__ = ["ParseError", "parse_ratq", "parse_element", "parse_operator"]


class ParseError(ValueError):
    """Syntax or index error, with the 0-based column where it was found."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at column {position}")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", or the punctuation character itself
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")
_PUNCT = set("+-*/^(),_")


def tokenize(text: str) -> List[Token]:
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None or m.end() == i:
            break
        if m.group(1) is not None:
            out.append(Token("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in _PUNCT:
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            out.append(Token(ch, ch, m.start(3)))
        i = m.end()
    out.append(Token("end", "", len(text)))
    return out


RATQ, ELEMENT, OPERATOR = "ratq", "element", "operator"


class _Parser:
    def __init__(self, text: str, mode: str, n: Optional[int] = None):
        self.text = text
        self.toks = tokenize(text)
        self.k = 0
        self.mode = mode
        self.n = n
        # operators with integer powers of either sign: id(op) -> op^s builder
        self.powerable = {}

    # -- token helpers -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def error(self, msg: str, tok: Optional[Token] = None) -> ParseError:
        return ParseError(msg, (tok or self.tok).pos, self.text)

    def take(self, kind: str, value: Optional[str] = None) -> Token:
        t = self.tok
        if t.kind != kind or (value is not None and t.value != value):
            want = value or kind
            got = t.value or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        self.k += 1
        return t

    def peek(self, kind: str, value: Optional[str] = None) -> bool:
        t = self.tok
        return t.kind == kind and (value is None or t.value == value)

    # -- value arithmetic ----------------------------------------------------

    def _lift(self, v):
        """Bring a scalar into the current mode's value space."""
        if isinstance(v, RatQ):
            if self.mode == ELEMENT:
                from .sympspace import Element

                return Element.scalar(self.n, v)
            if self.mode == OPERATOR:
                from .diffops import identity, scale

                return scale(v, identity(self.n))
        return v

    def add(self, a, b, tok: Token):
        if isinstance(a, RatQ) and isinstance(b, RatQ):
            return a + b
        a, b = self._lift(a), self._lift(b)
        if self.mode == OPERATOR:
            from .diffops import op_sum

            return op_sum(a, b)
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b, tok: Token):
        if isinstance(a, RatQ) and isinstance(b, RatQ):
            return a * b
        if isinstance(a, RatQ):
            return self._scale(a, b)
        if isinstance(b, RatQ):
            return self._scale(b, a)
        if self.mode == OPERATOR:
            from .diffops import compose

            return compose(a, b)
        return a * b

    def _scale(self, c: RatQ, v):
        if self.mode == OPERATOR:
            from .diffops import scale

            return scale(c, v)
        return v.scale(c)

    def div(self, a, b, tok: Token):
        if not isinstance(b, RatQ):
            raise self.error("division is only by scalars", tok)
        if not b:
            raise self.error("division by zero", tok)
        return self.mul(a, b.inv(), tok)

    def raise_power(self, a, k: int, tok: Token):
        if isinstance(a, RatQ):
            if not a and k < 0:
                raise self.error("division by zero", tok)
            return a ** k
        build = self.powerable.get(id(a))
        if build is not None:
            return self._wrap(lambda: build(k), tok)
        if k < 0:
            raise self.error("negative powers are only defined for scalars and mu", tok)
        return a ** k

    # -- grammar -------------------------------------------------------------

    def parse(self):
        if self.peek("end"):
            raise self.error("empty expression")
        v = self.expr()
        if not self.peek("end"):
            raise self.error(f"unexpected {self.tok.value!r}")
        return v

    def expr(self):
        if self.peek("+"):
            self.k += 1
        v = self.term()
        while self.peek("+") or self.peek("-"):
            t = self.tok
            self.k += 1
            w = self.term()
            v = self.add(v, w if t.kind == "+" else self.neg(w), t)
        return v

    def _starts_atom(self) -> bool:
        return self.peek("name") or self.peek("(")

    def term(self):
        v = self.unary()
        while True:
            t = self.tok
            if self.peek("*"):
                self.k += 1
                v = self.mul(v, self.unary(), t)
            elif self.peek("/"):
                self.k += 1
                v = self.div(v, self.unary(), t)
            elif self._starts_atom():
                v = self.mul(v, self.power(), t)
            else:
                return v

    def unary(self):
        if self.peek("-"):
            self.k += 1
            return self.neg(self.unary())
        return self.power()

    def exponent(self) -> int:
        sign = 1
        if self.peek("-"):
            self.k += 1
            sign = -1
        elif self.peek("+"):
            self.k += 1
        if self.peek("("):
            self.k += 1
            k = self.exponent()
            self.take(")")
            return sign * k
        return sign * int(self.take("int").value)

    def power(self):
        v = self.atom()
        if self.peek("^"):
            t = self.take("^")
            v = self.raise_power(v, self.exponent(), t)
        return v

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.k += 1
            return RatQ.coerce(int(t.value))
        if t.kind == "(":
            self.k += 1
            v = self.expr()
            self.take(")")
            return v
        if t.kind == "name":
            if t.value == "q":
                self.k += 1
                return Q
            if t.value == "lam":
                self.k += 1
                return LAMBDA
            return self.call()
        raise self.error(f"unexpected {t.value or 'end of input'!r}")

    def signed_int(self) -> int:
        sign = 1
        if self.peek("-"):
            self.k += 1
            sign = -1
        elif self.peek("+"):
            self.k += 1
        return sign * int(self.take("int").value)

    def call(self):
        t = self.take("name")
        name = t.value
        if self.mode == RATQ:
            raise self.error(f"unknown name {name!r} in a coefficient", t)
        if self.mode == ELEMENT:
            if name != "x":
                raise self.error(f"unknown name {name!r}; elements use x(i)", t)
            self.take("(")
            ti = self.tok
            i = self.signed_int()
            self.take(")")
            t = ti
            return self._wrap(lambda: _element_gen(self.n, i), t)
        return _operator_call(self, name, t)

    def _wrap(self, build: Callable, t: Token):
        try:
            return build()
        except ParseError:
            raise
        except ValueError as exc:
            raise self.error(str(exc), t) from None


def _element_gen(n: int, i: int):
    from .sympspace import Element

    return Element.gen(n, i)


def _operator_call(p: _Parser, name: str, t: Token):
    from . import diffops as d

    n = p.n
    if name == "id":
        return d.identity(n)
    if name == "br":
        v = ONE
        if p.peek("_"):
            p.take("_")
            v = p.power()
            if not isinstance(v, RatQ):
                raise p.error("bracket parameter must be a scalar", t)
        p.take("(")
        a = p.expr()
        p.take(",")
        b = p.expr()
        p.take(")")
        a, b = p._lift(a), p._lift(b)
        return d.bracket(a, b, v)
    inverse = False
    if p.peek("_"):
        p.take("_")
        suffix = p.take("name")
        if suffix.value != "inv" or name not in ("mu", "k"):
            raise p.error(f"unknown name {name}_{suffix.value!r}", t)
        inverse = True
    if name == "E":
        p.take("(")
        st = p.tok
        if p.peek("+") or p.peek("-"):
            p.k += 1
            sign = 1 if st.kind == "+" else -1
        else:
            raise p.error("E(s,i,j) needs a sign '+' or '-' first", st)
        p.take(",")
        ti = p.tok
        i = int(p.take("int").value)
        p.take(",")
        j = int(p.take("int").value)
        p.take(")")
        return p._wrap(lambda: d.build_root_vector((sign * i, j), "closed", n), ti)
    builders = {
        "d": lambda i: d.partial(i, n),
        "xl": lambda i: d.xl(i, n),
        "xr": lambda i: d.xr(i, n),
        "e": lambda i: d.chevalley("e", i, n),
        "f": lambda i: d.chevalley("f", i, n),
        "k": lambda i: d.chevalley("kinv" if inverse else "k", i, n),
        "Phi": lambda i: d.Phi(i, n),
        "Psi": lambda i: d.Psi(i, n),
        "D": lambda i: d.D(i, n),
        "XL": lambda i: d.XL(i, n),
        "XR": lambda i: d.XR(i, n),
    }
    diagonal = {
        "mu": lambda i, s: d.mu(i, n, s),
        "tau": lambda i, s: d.tau(i, n, s),
        "Lambda": lambda i, s: d.Lambda(i, n, s),
    }
    if name not in builders and name not in diagonal:
        raise p.error(f"unknown operator {name!r}", t)
    p.take("(")
    ti = p.tok
    i = p.signed_int()
    p.take(")")
    if name in diagonal:
        s = -1 if inverse else 1
        op = p._wrap(lambda: diagonal[name](i, s), ti)
        p.powerable[id(op)] = lambda k: diagonal[name](i, s * k)
        return op
    return p._wrap(lambda: builders[name](i), ti)


# -- entry points ------------------------------------------------------------------


def parse_ratq(text: str) -> RatQ:
    v = _Parser(text, RATQ).parse()
    assert isinstance(v, RatQ)
    return v


def parse_element(text: str, n: int):
    from .sympspace import Element, check_rank

    check_rank(n)
    p = _Parser(text, ELEMENT, n)
    v = p.parse()
    return Element.scalar(n, v) if isinstance(v, RatQ) else v


def parse_operator(text: str, n: int):
    from .sympspace import check_rank

    check_rank(n)
    p = _Parser(text, OPERATOR, n)
    return p._lift(p.parse())
