"""
The Lie algebra of labeled trees and the maps between it and bracket monomials.

Trees are stored as SparseVectors over canonical LabeledTree keys; a tree of
size n carries distinct labels from 1..n+1. The bracket of two trees sharing
exactly one label i fuses their i-leaves into a new vertex oriented
(first tree side, second tree side, new leaf i).
"""
import logging
from typing import Iterable, Optional

from app.errors import InvariantViolation
from app.services.diagrams import DiagramGraph, LabeledTree, Term, canonicalize_labeled_tree, leaves, tree_from_key
from app.services.liealg import Generator, Monomial, generators_of, monomial_from_key, monomial_vector
from app.services.qlinalg import SparseVector, vector_sum

logger = logging.getLogger(__name__)


def index_sign(alpha: Iterable[int], beta: Iterable[int]) -> int:
    """
    Parity of the pairs (a, b) in (alpha - common) x (beta - common) with a > b.

    Raises:
        InvariantViolation: the sets share two or more indices.
    """
    alpha, beta = set(alpha), set(beta)
    common = alpha & beta
    if len(common) > 1:
        raise InvariantViolation("index sets share at most one index", f"{sorted(alpha)} and {sorted(beta)}")
    count = sum(1 for a in alpha - common for b in beta - common if a > b)
    return count % 2


def tree_vector(t: LabeledTree, coefficient=1) -> SparseVector:
    sign, key = canonicalize_labeled_tree(t)
    return SparseVector.basis(key, sign * coefficient)


def segment(i: int, j: int, size: int) -> SparseVector:
    return tree_vector(LabeledTree(size=size, term=(i, j)))


def tree_degree(t: LabeledTree) -> int:
    """Trivalent vertices plus one."""
    return len(leaves(t.term)) - 1


def _rooted_body(t: LabeledTree, label: int):
    sign, (_, body) = DiagramGraph.from_terms([t.term]).rooted_term(label)
    return sign, body


def tree_bracket(t1: LabeledTree, t2: LabeledTree) -> SparseVector:
    alpha, beta = set(leaves(t1.term)), set(leaves(t2.term))
    common = alpha & beta
    if len(common) != 1:
        return SparseVector()
    (label,) = common
    first_sign, first = _rooted_body(t1, label)
    second_sign, second = _rooted_body(t2, label)
    fused = LabeledTree(size=max(t1.size, t2.size), term=(label, (first, second)))
    sign = first_sign * second_sign * (-1) ** index_sign(alpha, beta)
    return tree_vector(fused, sign)


def bracket_trees(u: SparseVector, v: SparseVector) -> SparseVector:
    return vector_sum(
        tree_bracket(tree_from_key(left), tree_from_key(right)) * (a * b)
        for left, a in u.items()
        for right, b in v.items()
    )


def _delta_monomial(m: Monomial, size: int) -> SparseVector:
    if isinstance(m, Generator):
        if m.i == m.j:
            return SparseVector()
        return segment(m.i, m.j, size) * (-1) ** index_sign({m.i}, {m.j})
    return bracket_trees(_delta_monomial(m[0], size), _delta_monomial(m[1], size))


def delta(c: SparseVector, size: Optional[int] = None) -> SparseVector:
    """
    Lie map from bracket monomials to trees: x_ij goes to the segment i-j with
    sign (-1)^{[i > j]} and brackets go to tree brackets.

    Args:
        size: tree size n (labels up to n+1); defaults to the largest index minus one.
    """
    monomials = [(monomial_from_key(key), value) for key, value in c.items()]
    if size is None:
        size = max((max(g) for m, _ in monomials for g in generators_of(m)), default=2) - 1
    return vector_sum(_delta_monomial(m, size) * value for m, value in monomials)


def _nabla_term(term: Term):
    """Returns (sign, monomial, labels) for a subtree hanging away from the root."""
    if isinstance(term, int):
        return 1, Generator(1, term), {term}
    left_sign, left, alpha = _nabla_term(term[0])
    right_sign, right, beta = _nabla_term(term[1])
    sign = left_sign * right_sign * (-1) ** index_sign(alpha, beta)
    return sign, (left, right), alpha | beta


def nabla_tree(t: LabeledTree) -> SparseVector:
    labels = sorted(leaves(t.term))
    if labels != list(range(1, t.size + 2)):
        raise InvariantViolation(f"nabla needs labels exactly 1..{t.size + 1}", f"got {labels}")
    root_sign, body = _rooted_body(t, 1)
    sign, monomial, _ = _nabla_term(body)
    return monomial_vector(monomial, root_sign * sign)


def nabla(v: SparseVector) -> SparseVector:
    return vector_sum(nabla_tree(tree_from_key(key)) * value for key, value in v.items())
