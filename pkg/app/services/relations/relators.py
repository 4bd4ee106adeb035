"""
Relator generation for the diagram quotients.

Sign conventions used across the package:
  - A vertex with cyclic order (leg at p, x, y) resolves by STU into
    S = R(x at p, y at p+1) - R(y at p, x at p+1); the STU relator is D - S.
  - IHX is the rooted Jacobi identity on the canonical term of a component:
    (P,(B,C)) - ((P,B),C) - (B,(P,C)).
  - An STU² relator is S(b1) - S(b2) for two valid breakings of one template.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from app.errors import InvariantViolation
from app.services.diagrams import (
    DiagramGraph,
    LineDiagram,
    NotAForestError,
    Term,
    diagram_from_graph,
    diagram_key,
    enumerate_chord_diagrams,
    enumerate_line_diagrams,
    graph_key,
    is_separated,
)
from app.services.diagrams.graph import leg
from app.services.qlinalg import SparseVector

logger = logging.getLogger(__name__)


class RelatorKind(str, Enum):
    STU = "STU"
    FOUR_T = "4T"
    IHX = "IHX"
    SEP = "SEP"
    STU2 = "STU2"


@dataclass(frozen=True)
class Relator:
    vector: SparseVector
    kind: RelatorKind


def graph_vector(graph: DiagramGraph, coefficient: int = 1) -> SparseVector:
    sign, key = graph_key(graph)
    return SparseVector.basis(key, sign * coefficient)


def diagram_vector(d: LineDiagram) -> SparseVector:
    return graph_vector(d.graph())


def breaking_at_leg(graph: DiagramGraph, position: int) -> Tuple[int, int]:
    """The (vertex, leg edge) breaking at the leg in the given position."""
    edge = graph.legs[position]
    node = graph.other_end(edge, leg(position))
    if node[0] != "v":
        raise InvariantViolation("STU needs a trivalent vertex adjacent to the segment", f"leg {position} is a chord end")
    return node[1], edge


def resolution(graph: DiagramGraph, identifier: int, leg_edge: int) -> SparseVector:
    """S at one breaking; raises NotAForestError when the breaking leaves a cycle."""
    first, second = graph.break_at(identifier, leg_edge)
    return graph_vector(first) - graph_vector(second)


def stu_resolutions(d: LineDiagram, position: int) -> Tuple[Tuple[int, LineDiagram], Tuple[int, LineDiagram]]:
    """
    Resolve the vertex carrying the leg at position.

    Returns:
        ((sign1, R1), (sign2, R2)) with canonical diagrams, so that the STU
        relator is d - (sign1 * R1 - sign2 * R2).
    """
    graph = d.graph()
    first, second = graph.break_at(*breaking_at_leg(graph, position))
    return diagram_from_graph(first), diagram_from_graph(second)


def stu_vector(d: LineDiagram, position: int) -> SparseVector:
    graph = d.graph()
    return resolution(graph, *breaking_at_leg(graph, position))


def vertex_legs(d: LineDiagram) -> List[int]:
    """Leg positions whose neighbour is a trivalent vertex."""
    graph = d.graph()
    return [p for p in sorted(graph.legs) if graph.other_end(graph.legs[p], leg(p))[0] == "v"]


def relators_stu(n: int) -> List[Relator]:
    relators = []
    for k in range(1, n):
        for d in enumerate_line_diagrams(n, k):
            for position in vertex_legs(d):
                vector = diagram_vector(d) - stu_vector(d, position)
                relators.append(Relator(vector, RelatorKind.STU))
    logger.debug(f"STU relators in degree {n}: {len(relators)}")
    return relators


def _chord_diagram(sequence: List[int]) -> SparseVector:
    ends = {}
    for position, chord in enumerate(sequence):
        ends.setdefault(chord, []).append(position)
    components = sorted(tuple(pair) for pair in ends.values())
    d = LineDiagram(degree=len(components), legs=len(sequence), components=tuple(components))
    return SparseVector.basis(diagram_key(d))


def relators_4t(n: int) -> List[Relator]:
    relators = []
    for d in enumerate_chord_diagrams(n):
        sequence = [0] * d.legs
        for chord, (u, w) in enumerate(d.components):
            sequence[u] = sequence[w] = chord
        for fixed in range(d.k):
            for foot in range(d.legs):
                if sequence[foot] == fixed:
                    continue
                rest = sequence[:foot] + sequence[foot + 1:]
                mobile = sequence[foot]
                first_end, second_end = [i for i, chord in enumerate(rest) if chord == fixed]
                vector = SparseVector()
                for end in (first_end, second_end):
                    right = rest[:end + 1] + [mobile] + rest[end + 1:]
                    left = rest[:end] + [mobile] + rest[end:]
                    vector = vector + _chord_diagram(right) - _chord_diagram(left)
                if not vector.is_zero():
                    relators.append(Relator(vector, RelatorKind.FOUR_T))
    logger.debug(f"4T relators in degree {n}: {len(relators)}")
    return relators


def jacobi_moves(term: Term) -> Iterator[Tuple[int, Term, Term, Term]]:
    """
    Yield (sign, I, H, X) for every internal edge below the given vertex term.

    The internal edge joins a vertex (P, Q) to its pair child Q = (B, C);
    a pair child on the left is first moved right at the cost of one AS sign.
    """
    if isinstance(term, int):
        return
    left, right = term
    if not isinstance(right, int):
        b, c = right
        yield 1, (left, (b, c)), ((left, b), c), (b, (left, c))
    if not isinstance(left, int):
        b, c = left
        yield -1, (right, (b, c)), ((right, b), c), (b, (right, c))
    for sign, i, h, x in jacobi_moves(left):
        yield sign, (i, right), (h, right), (x, right)
    for sign, i, h, x in jacobi_moves(right):
        yield sign, (left, i), (left, h), (left, x)


def _component_vector(d: LineDiagram, index: int, replacement: Term) -> SparseVector:
    components = list(d.components)
    components[index] = replacement
    return graph_vector(DiagramGraph.from_terms(components))


def relators_ihx(n: int, k: int) -> List[Relator]:
    relators = []
    for d in enumerate_line_diagrams(n, k):
        relators.extend(ihx_relators_of(d))
    logger.debug(f"IHX relators for n={n}, k={k}: {len(relators)}")
    return relators


def ihx_relators_of(d: LineDiagram) -> List[Relator]:
    relators = []
    for index, (root, body) in enumerate(d.components):
        for sign, i, h, x in jacobi_moves(body):
            vector = (
                _component_vector(d, index, (root, i))
                - _component_vector(d, index, (root, h))
                - _component_vector(d, index, (root, x))
            )
            if not vector.is_zero():
                relators.append(Relator(vector * sign, RelatorKind.IHX))
    return relators


def relators_sep(n: int, k: int) -> List[Relator]:
    return [
        Relator(SparseVector.basis(diagram_key(d)), RelatorKind.SEP)
        for d in enumerate_line_diagrams(n, k)
        if is_separated(d)
    ]


def templates(n: int, k: int, include_loops: bool = True) -> Iterator[Tuple[LineDiagram, int, DiagramGraph, int, int]]:
    """
    Every STU² template as the join of two adjacent legs of a k-component diagram.

    Yields (source diagram, join position, template, join vertex, join leg edge).
    Joining two legs of one component closes a cycle.
    """
    for d in enumerate_line_diagrams(n, k):
        owner = {p: i for i, legs in enumerate(d.component_legs()) for p in legs}
        graph = d.graph()
        for position in range(d.legs - 1):
            if owner[position] == owner[position + 1] and not include_loops:
                continue
            template, identifier, leg_edge = graph.join(position)
            yield d, position, template, identifier, leg_edge


def relators_stu2(n: int, k: int, distinct_only: bool = False, include_loops: bool = True) -> List[Relator]:
    """
    STU² relators S(b_join) - S(b) for every valid breaking b of every template.

    Args:
        distinct_only: keep only pairs of breakings at two different vertices.
        include_loops: also use templates with one cycle.
    """
    if not 1 <= k <= n:
        raise InvariantViolation("1 <= k <= n", f"k={k}, n={n}")
    relators = []
    for _, _, template, joined, joined_leg in templates(n, k, include_loops):
        base = resolution(template, joined, joined_leg)
        for identifier, leg_edge in template.breakings():
            if identifier == joined and (distinct_only or leg_edge == joined_leg):
                continue
            other = _valid_resolution(template, identifier, leg_edge)
            if other is None:
                continue
            vector = base - other
            if not vector.is_zero():
                relators.append(Relator(vector, RelatorKind.STU2))
    logger.debug(f"STU2 relators for n={n}, k={k}: {len(relators)}")
    return relators


def _valid_resolution(template: DiagramGraph, identifier: int, leg_edge: int) -> Optional[SparseVector]:
    try:
        return resolution(template, identifier, leg_edge)
    except NotAForestError:
        return None
