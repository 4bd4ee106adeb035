from app.services.diagrams.codec import diagram_from_key, parse, parse_diagram, parse_tree, serialize, tree_from_key
from app.services.diagrams.enumeration import (
    enumerate_chord_diagrams,
    enumerate_labeled_trees,
    enumerate_line_diagrams,
    trees_on,
)
from app.services.diagrams.graph import DiagramGraph, NotAForestError, Term
from app.services.diagrams.model import (
    LabeledTree,
    LineDiagram,
    SignedKey,
    canonical_form,
    canonicalize_labeled_tree,
    canonicalize_line_diagram,
    diagram_from_graph,
    diagram_key,
    graph_key,
    is_separated,
    leaves,
    map_leaves,
    tree_key,
)

__all__ = [
    'DiagramGraph',
    'LabeledTree',
    'LineDiagram',
    'NotAForestError',
    'SignedKey',
    'Term',
    'canonical_form',
    'canonicalize_labeled_tree',
    'canonicalize_line_diagram',
    'diagram_from_graph',
    'diagram_from_key',
    'diagram_key',
    'enumerate_chord_diagrams',
    'enumerate_labeled_trees',
    'enumerate_line_diagrams',
    'graph_key',
    'is_separated',
    'leaves',
    'map_leaves',
    'parse',
    'parse_diagram',
    'parse_tree',
    'serialize',
    'tree_from_key',
    'tree_key',
    'trees_on',
]
