import itertools
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, List, Tuple

from app.services.liealg.monomials import Generator, Monomial, canonical_monomial, text
from app.services.qlinalg import BasisKey

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def monomials_on(letters: Tuple[Generator, ...]) -> Tuple[Monomial, ...]:
    """All canonical nonzero bracketings using exactly the given multiset of letters."""
    if len(letters) == 1:
        return letters
    found: Dict[BasisKey, Monomial] = {}
    counts = Counter(letters)
    distinct = sorted(counts)
    # the least letter always keeps a copy on the left
    ranges = [range(counts[g] + 1) for g in distinct]
    for taken in itertools.product(*ranges):
        if taken[0] == 0 or sum(taken) == len(letters):
            continue
        left = tuple(sorted(itertools.chain.from_iterable([g] * t for g, t in zip(distinct, taken))))
        right = tuple(sorted(itertools.chain.from_iterable([g] * (counts[g] - t) for g, t in zip(distinct, taken))))
        for a, b in itertools.product(monomials_on(left), monomials_on(right)):
            sign, canonical = canonical_monomial((a, b))
            if sign:
                found.setdefault(text(canonical), canonical)
    return tuple(found[key] for key in sorted(found))


def _covering_multisets(alphabet: List[Generator], d: int):
    """Multisets of size d over the alphabet that use every letter at least once."""
    spare = d - len(alphabet)
    if spare < 0:
        return
    for extra in itertools.combinations_with_replacement(alphabet, spare):
        yield tuple(sorted(list(alphabet) + list(extra)))


def _collect(alphabet: List[Generator], d: int) -> List[Monomial]:
    found: Dict[BasisKey, Monomial] = {}
    for letters in _covering_multisets(alphabet, d):
        for m in monomials_on(letters):
            found.setdefault(text(m), m)
    return [found[key] for key in sorted(found)]


def m_spanning_set(d: int, n: int) -> List[Monomial]:
    """Degree-d brackets in x_12..x_1n in which every index 1..n appears."""
    if n < 2:
        return []
    return _collect([Generator(1, j) for j in range(2, n + 1)], d)


def x_in_spanning_set(d: int, n: int) -> List[Monomial]:
    """Degree-d brackets in x_1n..x_{n-1}n in which every index i < n appears."""
    if n < 2:
        return []
    return _collect([Generator(i, n) for i in range(1, n)], d)


def repeated_pair_generators(n: int) -> List[Monomial]:
    """
    Brackets [c1, c2] of degree n in the x_1j where exactly one index k is used
    twice, once inside each factor, and every index 1..n appears.
    """
    found: Dict[BasisKey, Monomial] = {}
    for k in range(2, n + 1):
        rest = [j for j in range(2, n + 1) if j != k]
        for size in range(len(rest) + 1):
            for chosen in itertools.combinations(rest, size):
                left = tuple(sorted([Generator(1, k)] + [Generator(1, j) for j in chosen]))
                right = tuple(sorted([Generator(1, k)] + [Generator(1, j) for j in rest if j not in chosen]))
                for a, b in itertools.product(monomials_on(left), monomials_on(right)):
                    sign, canonical = canonical_monomial((a, b))
                    if sign:
                        found.setdefault(text(canonical), (a, b))
    logger.debug(f"repeated pair generators for n={n}: {len(found)}")
    return [found[key] for key in sorted(found)]
