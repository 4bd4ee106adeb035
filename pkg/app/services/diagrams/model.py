"""
Diagram values and their canonical forms.

A LineDiagram is a forest of unitrivalent trees hanging off a directed
segment; each tree is written as a binary term whose top-level pair is an
edge and whose every other pair is a trivalent vertex with cyclic order
(parent, left, right). Leaves are 0-based leg positions. A LabeledTree is a
single such tree whose leaves carry distinct labels from 1..n+1.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Tuple

from app.errors import InvariantViolation
from app.services.diagrams.graph import DiagramGraph, Term
from app.services.qlinalg import BasisKey

logger = logging.getLogger(__name__)


class SignedKey(NamedTuple):
    sign: int
    key: BasisKey


@dataclass(frozen=True)
class LineDiagram:
    degree: int
    legs: int
    components: Tuple[Term, ...]

    @property
    def k(self) -> int:
        return len(self.components)

    def graph(self) -> DiagramGraph:
        return DiagramGraph.from_terms(self.components)

    def component_legs(self) -> List[List[int]]:
        return [sorted(leaves(term)) for term in self.components]


@dataclass(frozen=True)
class LabeledTree:
    size: int
    term: Term

    def labels(self) -> List[int]:
        return sorted(leaves(self.term))


def leaves(term: Term) -> List[int]:
    if isinstance(term, int):
        return [term]
    return leaves(term[0]) + leaves(term[1])


def map_leaves(term: Term, relabel: Callable[[int], int]) -> Term:
    if isinstance(term, int):
        return relabel(term)
    return map_leaves(term[0], relabel), map_leaves(term[1], relabel)


def term_text(term: Term) -> str:
    if isinstance(term, int):
        return str(term)
    return f"({term_text(term[0])},{term_text(term[1])})"


def validate_line_diagram(d: LineDiagram) -> None:
    positions = []
    for term in d.components:
        if isinstance(term, int):
            raise InvariantViolation("each component has at least two leaves", f"bare leaf {term}")
        positions.extend(leaves(term))
    if sorted(positions) != list(range(d.legs)):
        raise InvariantViolation("every leg position 0..legs-1 appears exactly once", f"got {sorted(positions)}")
    if d.degree != d.legs - d.k:
        raise InvariantViolation(
            "internal plus leg vertices equal twice the degree",
            f"degree {d.degree} with {d.legs} legs and {d.k} components",
        )


def validate_labeled_tree(t: LabeledTree) -> None:
    if isinstance(t.term, int):
        raise InvariantViolation("a tree has at least two leaves", f"bare leaf {t.term}")
    labels = leaves(t.term)
    if len(set(labels)) != len(labels):
        raise InvariantViolation("leaf labels are distinct", f"got {labels}")
    if not all(1 <= label <= t.size + 1 for label in labels):
        raise InvariantViolation(f"leaf labels lie in 1..{t.size + 1}", f"got {labels}")


def diagram_from_graph(graph: DiagramGraph) -> Tuple[int, LineDiagram]:
    sign, terms = graph.canonical_terms()
    legs = graph.leg_count
    return sign, LineDiagram(degree=legs - len(terms), legs=legs, components=terms)


def canonical_form(d: LineDiagram) -> Tuple[int, LineDiagram]:
    validate_line_diagram(d)
    return diagram_from_graph(d.graph())


def canonical_tree_form(t: LabeledTree) -> Tuple[int, LabeledTree]:
    validate_labeled_tree(t)
    sign, terms = DiagramGraph.from_terms([t.term]).canonical_terms()
    return sign, LabeledTree(size=t.size, term=terms[0])


def diagram_key(d: LineDiagram) -> BasisKey:
    body = ",".join(term_text(term) for term in d.components)
    return f"deg={d.degree};legs={d.legs};{body}"


def tree_key(t: LabeledTree) -> BasisKey:
    return f"tree;n={t.size};{term_text(t.term)}"


def canonicalize_line_diagram(d: LineDiagram) -> SignedKey:
    # Leg labels are distinct, so no automorphism reverses orientation and the sign is never 0.
    sign, canonical = canonical_form(d)
    return SignedKey(sign, diagram_key(canonical))


def canonicalize_labeled_tree(t: LabeledTree) -> SignedKey:
    sign, canonical = canonical_tree_form(t)
    return SignedKey(sign, tree_key(canonical))


def graph_key(graph: DiagramGraph) -> SignedKey:
    sign, canonical = diagram_from_graph(graph)
    return SignedKey(sign, diagram_key(canonical))


def is_separated(d: LineDiagram) -> bool:
    """True when some proper block of consecutive legs is a union of whole components."""
    owner = {}
    for index, term in enumerate(d.components):
        for position in leaves(term):
            owner[position] = index
    sizes = [len(leaves(term)) for term in d.components]
    for start in range(d.legs):
        counts = {}
        for end in range(start, d.legs):
            component = owner[end]
            counts[component] = counts.get(component, 0) + 1
            if end - start + 1 == d.legs:
                break
            if all(counts[c] == sizes[c] for c in counts):
                return True
    return False
