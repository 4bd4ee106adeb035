"""
Bracket monomials in the generators x_ij of degree 1.

A monomial is either a Generator or a pair (a, b) meaning [a, b]. Canonical
monomials have normalised generators (i < j) and children ordered by their
text key, using graded antisymmetry [a,b] = -(-1)^{|a||b|}[b,a]; [a,a]
vanishes when |a| is even.

Text form: GEN := "x" INT "_" INT ; M := GEN | "[" M "," M "]".
"""
import logging
import re
from functools import lru_cache
from typing import NamedTuple, Tuple, Union

import pyparsing as pp

from app.errors import DiagramSyntaxError
from app.services.qlinalg import BasisKey, SparseVector

logger = logging.getLogger(__name__)


class Generator(NamedTuple):
    i: int
    j: int


Monomial = Union[Generator, Tuple["Monomial", "Monomial"]]


def degree(m: Monomial) -> int:
    if isinstance(m, Generator):
        return 1
    return degree(m[0]) + degree(m[1])


def generators_of(m: Monomial) -> Tuple[Generator, ...]:
    if isinstance(m, Generator):
        return (m,)
    return generators_of(m[0]) + generators_of(m[1])


def indices_of(m: Monomial) -> frozenset:
    return frozenset(index for g in generators_of(m) for index in g)


def text(m: Monomial) -> str:
    if isinstance(m, Generator):
        return f"x{m.i}_{m.j}"
    return f"[{text(m[0])},{text(m[1])}]"


def normalize_generator(g: Generator) -> Tuple[int, Generator]:
    if g.i == g.j:
        return 0, g
    if g.i > g.j:
        return -1, Generator(g.j, g.i)
    return 1, g


@lru_cache(maxsize=500_000)
def canonical_monomial(m: Monomial) -> Tuple[int, Monomial]:
    """Returns (sign, canonical monomial); sign 0 means the monomial vanishes."""
    if isinstance(m, Generator):
        return normalize_generator(m)
    left_sign, left = canonical_monomial(m[0])
    right_sign, right = canonical_monomial(m[1])
    sign = left_sign * right_sign
    if sign == 0:
        return 0, (left, right)
    left_key, right_key = text(left), text(right)
    if left_key == right_key:
        return (0 if degree(left) % 2 == 0 else sign), (left, right)
    if left_key > right_key:
        flip = -((-1) ** (degree(left) * degree(right)))
        return sign * flip, (right, left)
    return sign, (left, right)


def monomial_vector(m: Monomial, coefficient=1) -> SparseVector:
    sign, canonical = canonical_monomial(m)
    if sign == 0:
        return SparseVector()
    return SparseVector.basis(text(canonical), sign * coefficient)


@lru_cache(maxsize=None)
def _grammar():
    integer = pp.Word(pp.nums).set_parse_action(lambda t: [int(t[0])])
    generator = pp.Suppress("x") + integer + pp.Suppress("_") + integer
    generator.set_parse_action(lambda t: [Generator(t[0], t[1])])
    monomial = pp.Forward()
    bracket = pp.Suppress("[") + monomial + pp.Suppress(",") + monomial + pp.Suppress("]")
    bracket.set_parse_action(lambda t: [(t[0], t[1])])
    monomial <<= generator | bracket
    return monomial


@lru_cache(maxsize=500_000)
def parse_monomial(source: str) -> Monomial:
    found = re.search(r"\s", source)
    if found:
        raise DiagramSyntaxError(source, found.start(), "whitespace is not allowed")
    try:
        return _grammar().parse_string(source, parse_all=True)[0]
    except pp.ParseException as e:
        raise DiagramSyntaxError(source, e.loc, e.msg) from e


def monomial_from_key(key: BasisKey) -> Monomial:
    return parse_monomial(key)


def bracket(a: Monomial, b: Monomial) -> SparseVector:
    return monomial_vector((a, b))


def lie_bracket(u: SparseVector, v: SparseVector) -> SparseVector:
    """Bilinear bracket of two monomial vectors."""
    terms = {}
    for left_key, left_value in u.items():
        left = monomial_from_key(left_key)
        for right_key, right_value in v.items():
            sign, canonical = canonical_monomial((left, monomial_from_key(right_key)))
            if sign == 0:
                continue
            key = text(canonical)
            terms[key] = terms.get(key, 0) + sign * left_value * right_value
    return SparseVector(terms)
