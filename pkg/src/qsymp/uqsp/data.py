"""Structural data for U_q(sp_2n): Cartan matrix, coproduct, positive roots."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..diffops import Operator, RootLabel, chevalley, identity
from ..qfield import RatQ, qpow
from ..sympspace import check_rank


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix in the indexing where alpha_1 = 2 eps_1 is the long root.

    ``d[i-1]`` is the symmetrizer, so q_i = q^{d_i}; entries of ``a`` are
    indexed from 0.
    """

    n: int
    a: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]

    @classmethod
    def for_rank(cls, n: int) -> "CartanData":
        check_rank(n)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
            if i + 1 < n:
                a[i][i + 1] = -1
                a[i + 1][i] = -1
        a[1][0] = -2
        d = tuple(2 if i == 0 else 1 for i in range(n))
        return cls(n, tuple(map(tuple, a)), d)

    def entry(self, i: int, j: int) -> int:
        """a_ij with 1-based indices."""
        return self.a[i - 1][j - 1]

    def qi(self, i: int) -> RatQ:
        return qpow(self.d[i - 1])

    def qi_pow(self, i: int, k: int) -> RatQ:
        """q_i^k."""
        return qpow(self.d[i - 1] * k)


# Coproduct and counit of the Chevalley generators.  Each tensor factor is a
# generator name understood by ``generator_op``; "1" is the identity.
_COPRODUCT: Dict[str, List[Tuple[str, str]]] = {
    "e": [("e", "k"), ("1", "e")],
    "f": [("f", "1"), ("kinv", "f")],
    "k": [("k", "k")],
    "kinv": [("kinv", "kinv")],
}
_COUNIT = {"e": 0, "f": 0, "k": 1, "kinv": 1}


@dataclass(frozen=True)
class CoproductRule:
    """Delta(g) as a list of tensor pairs, together with eps(g)."""

    generator: str
    i: int
    pairs: Tuple[Tuple[str, str], ...]
    counit: int

    @classmethod
    def of(cls, generator: str, i: int) -> "CoproductRule":
        if generator not in _COPRODUCT:
            raise ValueError(f"unknown generator {generator!r}")
        return cls(generator, i, tuple(_COPRODUCT[generator]), _COUNIT[generator])

    def operators(self, n: int) -> List[Tuple[Operator, Operator]]:
        return [(generator_op(l, self.i, n), generator_op(r, self.i, n)) for l, r in self.pairs]


def generator_op(name: str, i: int, n: int) -> Operator:
    if name == "1":
        return identity(n)
    return chevalley(name, i, n)


def enumerate_positive_roots(n: int) -> List[RootLabel]:
    """All n^2 positive roots, in the order of the reduced word used for w_0.

    Row j lists (j-1,j), ..., (1,j), (j,j), (-1,j), ..., (1-j,j).
    """
    check_rank(n)
    out = [RootLabel(1, 1)]
    for j in range(2, n + 1):
        out += [RootLabel(i, j) for i in range(j - 1, 0, -1)]
        out.append(RootLabel(j, j))
        out += [RootLabel(-i, j) for i in range(1, j)]
    return out


def root_weight(label: RootLabel) -> Dict[int, int]:
    """The root as a combination of eps_1..eps_n."""
    w = {label.second: 1}
    if label.is_diagonal:
        w[label.second] = 2
    else:
        w[abs(label.first)] = w.get(abs(label.first), 0) + (1 if label.first > 0 else -1)
    return w


def simple_root(i: int) -> Dict[int, int]:
    return {1: 2} if i == 1 else {i: 1, i - 1: -1}


def pairing(u: Dict[int, int], v: Dict[int, int]) -> int:
    """Standard form (eps_a, eps_b) = delta_ab."""
    return sum(c * v.get(k, 0) for k, c in u.items())
