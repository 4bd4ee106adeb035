"""
Cofaces, the differential between M_{d,n} and M_{d,n+1}, and the index
substitutions used to write the differential of a two-factor bracket.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional

from app.errors import DifferentialMismatchError, InvariantViolation
from app.services.liealg.component import DEFAULT_AMBIENT_CAP, build_component
from app.services.liealg.monomials import (
    Generator,
    Monomial,
    degree,
    generators_of,
    indices_of,
    monomial_from_key,
    monomial_vector,
)
from app.services.qlinalg import SparseVector, vector_sum

logger = logging.getLogger(__name__)


def sigma(l: int, index: int) -> int:
    return index if index < l else index + 1


def _rebuild(m: Monomial, replace: Callable[[Generator], Generator]) -> Monomial:
    if isinstance(m, Generator):
        return replace(m)
    return _rebuild(m[0], replace), _rebuild(m[1], replace)


def _coface_terms(l: int, m: Monomial) -> List[Monomial]:
    leaves = generators_of(m)
    options = []
    for g in leaves:
        choices = [[l, l + 1] if index == l else [sigma(l, index)] for index in g]
        options.append([Generator(i, j) for i, j in itertools.product(*choices)])
    terms = []
    for picked in itertools.product(*options):
        replacement = iter(picked)
        terms.append(_rebuild(m, lambda _: next(replacement)))
    return terms


def coface(l: int, c: SparseVector, n: int) -> SparseVector:
    """
    Each occurrence of index l becomes l or l + 1, every other index i goes to
    sigma^l(i); 2^m terms for m occurrences of l.
    """
    if not 0 <= l <= n + 1:
        raise InvariantViolation("coface index lies in 0..n+1", f"l={l}, n={n}")
    return vector_sum(
        monomial_vector(term, value)
        for key, value in c.items()
        for term in _coface_terms(l, monomial_from_key(key))
    )


def tilde_coface(l: int, c: SparseVector, n: int) -> SparseVector:
    """Terms of the coface in which every index 1..n+1 appears."""
    if not 1 <= l <= n:
        raise InvariantViolation("reduced coface index lies in 1..n", f"l={l}, n={n}")
    full = frozenset(range(1, n + 2))
    return vector_sum(
        monomial_vector(term, value)
        for key, value in c.items()
        for term in _coface_terms(l, monomial_from_key(key))
        if indices_of(term) == full
    )


def full_differential(c: SparseVector, n: int) -> SparseVector:
    return vector_sum(coface(l, c, n) * (-1) ** l for l in range(0, n + 2))


def differential(c: SparseVector, n: int, verify: bool = False, cap: int = DEFAULT_AMBIENT_CAP) -> SparseVector:
    """
    The reduced differential sum_{l=1..n} (-1)^l tilde_coface(l, c).

    Args:
        verify: also compute the full alternating coface sum and require it to
            agree with the reduced one, on the nose or modulo the target
            component's relators.

    Raises:
        DifferentialMismatchError: verify is set and the two sums differ.
    """
    reduced = vector_sum(tilde_coface(l, c, n) * (-1) ** l for l in range(1, n + 1))
    if verify:
        full = full_differential(c, n)
        difference = full - reduced
        if not difference.is_zero():
            d = degree(monomial_from_key(difference.leading_key()))
            if not build_component(n + 1, d, cap).is_zero(difference):
                logger.error(f"differential mismatch in degree {d}, n={n}")
                raise DifferentialMismatchError(full, reduced)
    return reduced


class SubstitutionKind(str, Enum):
    SHIFT1 = "shift1"
    SHIFT2 = "shift2"
    BRACE = "brace"
    ANGLE = "angle"


@dataclass(frozen=True)
class SubstitutionRule:
    """
    Relabelling of a bracket in the generators x_1j.

    SHIFT1 sends x_1j to x_1,j+1 and SHIFT2 sends it to x_2,j+1. BRACE and
    ANGLE keep j < k, send j > k to j + 1, and send j = k to k (BRACE) or
    k + 1 (ANGLE).
    """
    kind: SubstitutionKind
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind in (SubstitutionKind.BRACE, SubstitutionKind.ANGLE) and self.k is None:
            raise InvariantViolation(f"{self.kind.value} substitution needs k", "k=None")

    def target(self, j: int) -> Generator:
        if self.kind == SubstitutionKind.SHIFT1:
            return Generator(1, j + 1)
        if self.kind == SubstitutionKind.SHIFT2:
            return Generator(2, j + 1)
        if j < self.k:
            return Generator(1, j)
        if j > self.k:
            return Generator(1, j + 1)
        return Generator(1, self.k if self.kind == SubstitutionKind.BRACE else self.k + 1)


def _substitute_generator(g: Generator, rule: SubstitutionRule) -> Generator:
    if g.i != 1 or g.j < 2:
        raise InvariantViolation("substitution applies to generators x_1j", f"x{g.i}_{g.j}")
    return rule.target(g.j)


def substitute(c: Monomial, rule: SubstitutionRule) -> SparseVector:
    return monomial_vector(_rebuild(c, lambda g: _substitute_generator(g, rule)))
