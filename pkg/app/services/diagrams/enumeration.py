import itertools
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from app.errors import ModelError
from app.services.diagrams.graph import DiagramGraph, Term
from app.services.diagrams.model import LabeledTree, LineDiagram, diagram_key, diagram_from_graph, tree_key

logger = logging.getLogger(__name__)


def _insertions(term: Term, label: int) -> List[Term]:
    """Every way of hanging a new leaf on one edge of a rooted term."""
    results = [(term, label)]
    if not isinstance(term, int):
        left, right = term
        results += [(grown, right) for grown in _insertions(left, label)]
        results += [(left, grown) for grown in _insertions(right, label)]
    return results


@lru_cache(maxsize=None)
def trees_on(labels: Tuple[int, ...]) -> Tuple[Term, ...]:
    """
    Canonical unrooted trivalent trees on the given leaf labels, one per AS class.

    Stepwise leaf insertion reaches every shape once; the canonical terms are
    deduplicated anyway so the result does not rely on that.
    """
    ordered = sorted(labels)
    if len(ordered) < 2:
        return ()
    root, rest = ordered[0], ordered[1:]
    shapes: List[Term] = [rest[0]]
    for label in rest[1:]:
        shapes = [grown for shape in shapes for grown in _insertions(shape, label)]
    canonical = {}
    for shape in shapes:
        _, terms = DiagramGraph.from_terms([(root, shape)]).canonical_terms()
        canonical[terms[0]] = None
    return tuple(sorted(canonical, key=lambda t: _term_sort_key(t)))


def _term_sort_key(term: Term) -> str:
    if isinstance(term, int):
        return f"{term:04d}"
    return f"({_term_sort_key(term[0])},{_term_sort_key(term[1])})"


def _leg_partitions(legs: int, k: int):
    for blocks in multiset_partitions(list(range(legs)), k):
        if all(len(block) >= 2 for block in blocks):
            yield blocks


@lru_cache(maxsize=None)
def _enumerate(n: int, k: int) -> Tuple[LineDiagram, ...]:
    legs = n + k
    found = {}
    for blocks in _leg_partitions(legs, k):
        choices: Sequence[Tuple[Term, ...]] = [trees_on(tuple(block)) for block in blocks]
        for components in itertools.product(*choices):
            _, canonical = diagram_from_graph(DiagramGraph.from_terms(components))
            found[diagram_key(canonical)] = canonical
    logger.debug(f"enumerated {len(found)} diagrams of degree {n} with {k} components")
    return tuple(found[key] for key in sorted(found))


def enumerate_line_diagrams(n: int, k: int) -> List[LineDiagram]:
    if n < 1 or not 1 <= k <= n:
        raise ModelError(f"component count k={k} must satisfy 1 <= k <= n={n}")
    return list(_enumerate(n, k))


def enumerate_chord_diagrams(n: int) -> List[LineDiagram]:
    return enumerate_line_diagrams(n, n)


def enumerate_labeled_trees(n: int) -> List[LabeledTree]:
    if n < 1:
        raise ModelError(f"tree size n={n} must be at least 1")
    trees = [LabeledTree(size=n, term=term) for term in trees_on(tuple(range(1, n + 2)))]
    return sorted(trees, key=tree_key)
