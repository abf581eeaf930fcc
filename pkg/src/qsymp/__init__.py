"""Exact computations on the quantum symplectic space and its U_q(sp_2n) symmetry."""

from .diffops import Operator, RootLabel, build_aux, build_chevalley, build_root_vector, op_equal_up_to
from .grammar import ParseError, parse_element, parse_operator, parse_ratq
from .qfield import LAMBDA, ONE, Q, ZERO, LaurentZ, RatQ, qbinom, qfact, qint, qpow
from .sympspace import Element, left_mul_gen, naive_normalize, omega, product, right_mul_gen

__version__ = "0.1.0"

__all__ = [
    "RatQ",
    "LaurentZ",
    "ZERO",
    "ONE",
    "Q",
    "LAMBDA",
    "qpow",
    "qint",
    "qfact",
    "qbinom",
    "Element",
    "product",
    "left_mul_gen",
    "right_mul_gen",
    "omega",
    "naive_normalize",
    "Operator",
    "RootLabel",
    "build_chevalley",
    "build_aux",
    "build_root_vector",
    "op_equal_up_to",
    "ParseError",
    "parse_ratq",
    "parse_element",
    "parse_operator",
]
