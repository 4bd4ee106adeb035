"""
Degree components of the graded Lie algebra on generators x_ij, i, j in 1..n.

The relator span of degree d is the contextual closure of the defining
relations: graded Jacobi among monomials of total degree d, the commuting of
generators with disjoint indices, the cyclic relation among [x_ij, x_jl],
and every bracket [m, r] of a monomial m with a lower-degree relator r.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from app.errors import AmbientTooLargeError
from app.services.liealg.monomials import (
    Generator,
    Monomial,
    bracket,
    canonical_monomial,
    degree,
    lie_bracket,
    monomial_vector,
    text,
)
from app.services.qlinalg import BasisKey, SparseVector, Subspace, check_support, span
from setup.config import DEFAULT_AMBIENT_CAP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LieComponent:
    n: int
    d: int
    ambient: Tuple[BasisKey, ...]
    relators: Subspace

    @property
    def dim(self) -> int:
        return len(self.ambient) - self.relators.rank

    def normal_form(self, vector: SparseVector) -> SparseVector:
        check_support(self.ambient, [vector])
        return self.relators.reduce(vector)

    def is_zero(self, vector: SparseVector) -> bool:
        return self.normal_form(vector).is_zero()


def jacobi(a: Monomial, b: Monomial, c: Monomial) -> SparseVector:
    """[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|}[b,[a,c]]"""
    twist = (-1) ** (degree(a) * degree(b))
    return (
        monomial_vector((a, (b, c)))
        - monomial_vector(((a, b), c))
        - monomial_vector((b, (a, c)), twist)
    )


def _merge(found: Dict[BasisKey, Monomial], candidates: Iterable[Monomial], cap: int) -> None:
    for candidate in candidates:
        sign, canonical = canonical_monomial(candidate)
        if sign == 0:
            continue
        found.setdefault(text(canonical), canonical)
        if len(found) > cap:
            raise AmbientTooLargeError(len(found), cap)


@lru_cache(maxsize=None)
def monomials(n: int, d: int, cap: int = DEFAULT_AMBIENT_CAP) -> Tuple[Monomial, ...]:
    """Canonical nonzero bracket monomials of degree d in x_ij, 1 <= i < j <= n."""
    found: Dict[BasisKey, Monomial] = {}
    if d == 1:
        _merge(found, (Generator(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)), cap)
    else:
        for e in range(1, d // 2 + 1):
            _merge(found, itertools.product(monomials(n, e, cap), monomials(n, d - e, cap)), cap)
    return tuple(found[key] for key in sorted(found))


def _base_relators(n: int, d: int, cap: int) -> List[SparseVector]:
    relators = []
    for p, q in itertools.product(range(1, d - 1), repeat=2):
        r = d - p - q
        if r < 1:
            continue
        for a, b, c in itertools.product(monomials(n, p, cap), monomials(n, q, cap), monomials(n, r, cap)):
            relators.append(jacobi(a, b, c))
    if d == 2:
        for first, second in itertools.combinations(monomials(n, 1, cap), 2):
            if not set(first) & set(second):
                relators.append(bracket(first, second))
        for i, j, l in itertools.permutations(range(1, n + 1), 3):
            one = bracket(Generator(i, j), Generator(j, l))
            two = bracket(Generator(j, l), Generator(l, i))
            three = bracket(Generator(l, i), Generator(i, j))
            relators += [one - two, two - three]
    return [r for r in relators if not r.is_zero()]


@lru_cache(maxsize=None)
def build_component(n: int, d: int, cap: int = DEFAULT_AMBIENT_CAP) -> LieComponent:
    ambient = [text(m) for m in monomials(n, d, cap)]
    relators = _base_relators(n, d, cap)
    for e in range(2, d):
        lower = build_component(n, e, cap).relators.rows
        for m in monomials(n, d - e, cap):
            context = monomial_vector(m)
            relators.extend(lie_bracket(context, row) for row in lower)
    check_support(ambient, relators)
    component = LieComponent(n=n, d=d, ambient=tuple(ambient), relators=span(relators))
    logger.info(f"Lie component n={n} d={d}: {len(ambient)} monomials, dim {component.dim}")
    return component


def m_subspace(component: LieComponent, generators: Iterable[Monomial]) -> Subspace:
    """Preimage in the component of the span of the given monomials."""
    vectors = [monomial_vector(m) for m in generators]
    check_support(component.ambient, vectors)
    return component.relators.extend(vectors)


@lru_cache(maxsize=None)
def _slice_monomials(letters: FrozenSet[Generator]) -> Tuple[Monomial, ...]:
    if len(letters) == 1:
        return tuple(letters)
    found: Dict[BasisKey, Monomial] = {}
    ordered = sorted(letters)
    anchor, rest = ordered[0], ordered[1:]
    for size in range(0, len(rest)):
        for chosen in itertools.combinations(rest, size):
            left = frozenset((anchor,) + chosen)
            right = letters - left
            _merge(found, itertools.product(_slice_monomials(left), _slice_monomials(right)), DEFAULT_AMBIENT_CAP)
    return tuple(found[key] for key in sorted(found))


def _splits(letters: FrozenSet[Generator], parts: int):
    ordered = sorted(letters)
    for labels in itertools.product(range(parts), repeat=len(ordered)):
        groups = [frozenset(g for g, label in zip(ordered, labels) if label == index) for index in range(parts)]
        if all(groups):
            yield groups


@lru_cache(maxsize=None)
def _slice_relators(letters: FrozenSet[Generator]) -> Tuple[SparseVector, ...]:
    relators = []
    for a_part, b_part, c_part in _splits(letters, 3):
        for a, b, c in itertools.product(
            _slice_monomials(a_part), _slice_monomials(b_part), _slice_monomials(c_part)
        ):
            relators.append(jacobi(a, b, c))
    for outer, inner in _splits(letters, 2):
        if len(inner) < 3:
            continue
        rows = span(_slice_relators(inner)).rows
        for m in _slice_monomials(outer):
            relators.extend(lie_bracket(monomial_vector(m), row) for row in rows)
    return tuple(r for r in relators if not r.is_zero())


def free_lie_slice(letters: Sequence[Generator]) -> LieComponent:
    """
    Multilinear part of the free graded Lie algebra on distinct degree-1 letters:
    every letter used exactly once, modulo antisymmetry and Jacobi only.
    """
    letter_set = frozenset(letters)
    ambient = [text(m) for m in _slice_monomials(letter_set)]
    relators = span(_slice_relators(letter_set))
    n = max(index for g in letter_set for index in g)
    return LieComponent(n=n, d=len(letter_set), ambient=tuple(ambient), relators=relators)
