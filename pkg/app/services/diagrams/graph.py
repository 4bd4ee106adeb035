"""
Oriented unitrivalent graphs attached to a directed segment.

A DiagramGraph is the working representation behind every local move on
diagrams: STU breakings, the joins that invert them (templates, possibly
with one cycle), and grafting an edge onto a leg. Internal vertices carry a
cyclic triple of edge ids; a loop edge appears twice in its vertex's triple.
Values of this class are transient: they are built, transformed and then
read back into canonical tree terms.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx

from app.errors import InvariantViolation

logger = logging.getLogger(__name__)

Term = Union[int, Tuple["Term", "Term"]]
Node = Tuple[str, int]


def leg(position: int) -> Node:
    return ("leg", position)


def vertex(identifier: int) -> Node:
    return ("v", identifier)


class NotAForestError(InvariantViolation):
    def __init__(self, detail: str):
        super().__init__("diagram components must be trees", detail)


@dataclass
class DiagramGraph:
    legs: Dict[int, int] = field(default_factory=dict)
    vertices: Dict[int, Tuple[int, int, int]] = field(default_factory=dict)
    edges: Dict[int, Tuple[Node, Node]] = field(default_factory=dict)
    _ids: itertools.count = field(default_factory=itertools.count, repr=False)

    # construction

    @classmethod
    def from_terms(cls, components: Iterable[Term]) -> "DiagramGraph":
        graph = cls()
        for term in components:
            if isinstance(term, int):
                raise InvariantViolation("each component has at least two leaves", f"bare leaf {term}")
            left, right = term
            top = graph._new_edge()
            graph._attach(left, top)
            graph._attach(right, top)
        return graph

    def _new_id(self) -> int:
        return next(self._ids)

    def _new_edge(self, a: Optional[Node] = None, b: Optional[Node] = None) -> int:
        edge = self._new_id()
        self.edges[edge] = (a, b)
        return edge

    def _set_endpoint(self, edge: int, old: Optional[Node], new: Node) -> None:
        a, b = self.edges[edge]
        if a == old:
            self.edges[edge] = (new, b)
        elif b == old:
            self.edges[edge] = (a, new)
        else:
            raise InvariantViolation("edge endpoint bookkeeping", f"edge {edge} has no endpoint {old}")

    def _attach(self, term: Term, parent_edge: int) -> None:
        if isinstance(term, int):
            if term in self.legs:
                raise InvariantViolation("every leg appears exactly once", f"leg {term} repeated")
            self.legs[term] = parent_edge
            self._set_endpoint(parent_edge, None, leg(term))
            return
        left, right = term
        identifier = self._new_id()
        first, second = self._new_edge(vertex(identifier)), self._new_edge(vertex(identifier))
        self.vertices[identifier] = (parent_edge, first, second)
        self._set_endpoint(parent_edge, None, vertex(identifier))
        self._attach(left, first)
        self._attach(right, second)

    def copy(self) -> "DiagramGraph":
        duplicate = DiagramGraph(dict(self.legs), dict(self.vertices), dict(self.edges))
        duplicate._ids = itertools.count(self._next_free())
        return duplicate

    def _next_free(self) -> int:
        used = list(self.vertices) + list(self.edges)
        return max(used, default=-1) + 1

    # navigation

    def other_end(self, edge: int, node: Node) -> Node:
        a, b = self.edges[edge]
        return b if a == node else a

    def leg_edges(self, identifier: int) -> List[int]:
        """Edges of a vertex that end on the segment, in cyclic order."""
        here = vertex(identifier)
        return [e for e in self.vertices[identifier] if self.other_end(e, here)[0] == "leg"]

    def nx_graph(self) -> nx.MultiGraph:
        """Legs and vertices as nodes, one edge keyed by its id per diagram edge."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(leg(position) for position in self.legs)
        graph.add_nodes_from(vertex(identifier) for identifier in self.vertices)
        for edge, (a, b) in self.edges.items():
            if a is None or b is None:
                raise InvariantViolation("every edge has two endpoints", f"edge {edge} is open")
            graph.add_edge(a, b, key=edge)
        return graph

    def components(self) -> List[List[int]]:
        """Leg positions of each connected component, sorted by least leg."""
        groups = [
            sorted(node[1] for node in nodes if node[0] == "leg")
            for nodes in nx.connected_components(self.nx_graph())
        ]
        return sorted(group for group in groups if group)

    @property
    def leg_count(self) -> int:
        return len(self.legs)

    # reading back canonical terms

    def canonical_terms(self) -> Tuple[int, Tuple[Term, ...]]:
        """
        Root every component at its least leg and order children by least leaf.

        Returns:
            (sign, terms) where sign is (-1) to the number of child swaps made,
            i.e. the AS sign relating this graph to the canonical diagram.
        """
        graph = self.nx_graph()
        if not nx.is_forest(graph):
            raise NotAForestError("a component has a cycle")
        for nodes in nx.connected_components(graph):
            if not any(node[0] == "leg" for node in nodes):
                raise NotAForestError("component without legs")
        sign = 1
        terms = []
        for group in self.components():
            root = group[0]
            start_edge = self.legs[root]
            here = leg(root)
            subterm, _, swaps = self._read(self.other_end(start_edge, here), start_edge, {here})
            sign *= (-1) ** swaps
            terms.append((root, subterm))
        return sign, tuple(terms)

    def rooted_term(self, position: int) -> Tuple[int, Term]:
        """
        The component through the given leg read as (position, subtree).

        Returns:
            (sign, term) with graph = sign * term under AS.
        """
        start_edge = self.legs[position]
        here = leg(position)
        subterm, _, swaps = self._read(self.other_end(start_edge, here), start_edge, {here})
        return (-1) ** swaps, (position, subterm)

    def _read(self, node: Node, from_edge: int, visited: set) -> Tuple[Term, int, int]:
        if node in visited:
            raise NotAForestError(f"cycle through {node}")
        visited.add(node)
        if node[0] == "leg":
            return node[1], node[1], 0
        triple = self.vertices[node[1]]
        if triple.count(from_edge) != 1:
            raise NotAForestError(f"loop at vertex {node[1]}")
        turn = triple.index(from_edge)
        first, second = triple[(turn + 1) % 3], triple[(turn + 2) % 3]
        left, left_min, left_swaps = self._read(self.other_end(first, node), first, visited)
        right, right_min, right_swaps = self._read(self.other_end(second, node), second, visited)
        swaps = left_swaps + right_swaps
        if right_min < left_min:
            return (right, left), right_min, swaps + 1
        return (left, right), left_min, swaps

    # local moves

    def breakings(self) -> List[Tuple[int, int]]:
        return [(identifier, edge) for identifier in sorted(self.vertices) for edge in self.leg_edges(identifier)]

    def break_at(self, identifier: int, leg_edge: int) -> Tuple["DiagramGraph", "DiagramGraph"]:
        """
        STU at a segment-adjacent vertex with cyclic order (leg, x, y).

        Returns:
            (R1, R2): x lands at the leg's position p and y at p + 1 in R1,
            the other way round in R2.
        """
        triple = self.vertices[identifier]
        turn = triple.index(leg_edge)
        x_edge, y_edge = triple[(turn + 1) % 3], triple[(turn + 2) % 3]
        here = vertex(identifier)
        position = self.other_end(leg_edge, here)[1]
        results = []
        for first, second in ((x_edge, y_edge), (y_edge, x_edge)):
            graph = self.copy()
            del graph.vertices[identifier]
            del graph.edges[leg_edge]
            del graph.legs[position]
            graph._shift_legs(lambda q: q + 1 if q > position else q)
            graph._set_endpoint(first, here, leg(position))
            graph._set_endpoint(second, here, leg(position + 1))
            graph.legs[position] = first
            graph.legs[position + 1] = second
            results.append(graph)
        return results[0], results[1]

    def join(self, position: int) -> Tuple["DiagramGraph", int, int]:
        """
        Merge the legs at position and position + 1 into one new vertex with a
        leg at position, oriented (leg, left branch, right branch).

        Returns:
            (template, vertex id, leg edge) identifying the breaking that undoes the join.
        """
        if position + 1 not in self.legs:
            raise InvariantViolation("join needs two adjacent legs", f"position {position}")
        graph = self.copy()
        left_edge, right_edge = graph.legs.pop(position), graph.legs.pop(position + 1)
        identifier = graph._new_id()
        here = vertex(identifier)
        graph._set_endpoint(left_edge, leg(position), here)
        graph._set_endpoint(right_edge, leg(position + 1), here)
        graph._shift_legs(lambda q: q - 1 if q > position + 1 else q)
        leg_edge = graph._new_edge(here, leg(position))
        graph.legs[position] = leg_edge
        graph.vertices[identifier] = (leg_edge, left_edge, right_edge)
        return graph, identifier, leg_edge

    def graft(self, source: int, target: int) -> "DiagramGraph":
        """
        Detach the leg at source and attach its edge onto the leg edge at
        target through a new vertex oriented (segment side, target tree side,
        grafted edge).
        """
        if source == target:
            raise InvariantViolation("graft needs two distinct legs", f"leg {source}")
        graph = self.copy()
        grafted = graph.legs.pop(source)
        target_edge = graph.legs[target]
        if graph.other_end(grafted, leg(source)) == leg(target):
            raise InvariantViolation("graft joins two different components", f"chord {source}-{target}")
        identifier = graph._new_id()
        here = vertex(identifier)
        graph._set_endpoint(grafted, leg(source), here)
        graph._set_endpoint(target_edge, leg(target), here)
        new_leg_edge = graph._new_edge(here, leg(target))
        graph.legs[target] = new_leg_edge
        graph.vertices[identifier] = (new_leg_edge, target_edge, grafted)
        graph._shift_legs(lambda q: q - 1 if q > source else q)
        return graph

    def relabel(self, mapping: Dict[int, int]) -> "DiagramGraph":
        graph = self.copy()
        graph._shift_legs(lambda q: mapping[q])
        return graph

    def _shift_legs(self, move) -> None:
        moved = {}
        renamed = {}
        for position, edge in self.legs.items():
            target = move(position)
            moved[target] = edge
            renamed[leg(position)] = leg(target)
        self.legs = moved
        self.edges = {
            edge: (renamed.get(a, a), renamed.get(b, b))
            for edge, (a, b) in self.edges.items()
        }
