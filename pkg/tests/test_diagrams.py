import pytest

from app.errors import DiagramSyntaxError, InvariantViolation, ModelError
from app.services.diagrams import (
    LineDiagram,
    NotAForestError,
    canonical_form,
    canonicalize_labeled_tree,
    canonicalize_line_diagram,
    diagram_key,
    enumerate_chord_diagrams,
    enumerate_labeled_trees,
    enumerate_line_diagrams,
    graph_key,
    is_separated,
    parse,
    parse_diagram,
    parse_tree,
    serialize,
)
from app.services.diagrams.graph import leg, vertex
from app.services.diagrams.model import LabeledTree


def mirror(term):
    if isinstance(term, int):
        return term
    return mirror(term[1]), mirror(term[0])


def test_parse_single_chord():
    d = parse_diagram("deg=1;legs=2;(0,1)")
    assert d == LineDiagram(degree=1, legs=2, components=((0, 1),))
    assert serialize(d) == "deg=1;legs=2;(0,1)"


def test_parse_tree():
    t = parse("tree;n=2;(1,(2,3))")
    assert t == LabeledTree(size=2, term=(1, (2, 3)))
    assert serialize(t) == "tree;n=2;(1,(2,3))"


def test_whitespace_is_rejected_with_its_position():
    with pytest.raises(DiagramSyntaxError) as e:
        parse_diagram("deg=1;legs=2;(0, 1)")
    assert e.value.position == 16


def test_malformed_text():
    with pytest.raises(DiagramSyntaxError):
        parse_diagram("deg=1;legs=2;(0,1")
    with pytest.raises(DiagramSyntaxError):
        parse_tree("tree;n=1;(1;2)")


def test_invariants_are_checked_on_parse():
    with pytest.raises(InvariantViolation):
        parse_diagram("deg=2;legs=2;(0,1)")
    with pytest.raises(InvariantViolation):
        parse_diagram("deg=1;legs=3;(0,2)")
    with pytest.raises(InvariantViolation):
        parse_tree("tree;n=1;(1,1)")


def test_antisymmetry_flips_the_sign():
    ordered = LineDiagram(degree=2, legs=3, components=((0, (1, 2)),))
    swapped = LineDiagram(degree=2, legs=3, components=((0, (2, 1)),))
    assert canonicalize_line_diagram(ordered) == (1, "deg=2;legs=3;(0,(1,2))")
    assert canonicalize_line_diagram(swapped) == (-1, "deg=2;legs=3;(0,(1,2))")


def test_rerooting_at_the_least_leg():
    rooted_elsewhere = LineDiagram(degree=2, legs=3, components=((1, (0, 2)),))
    assert canonicalize_line_diagram(rooted_elsewhere) == (-1, "deg=2;legs=3;(0,(1,2))")
    assert canonicalize_labeled_tree(LabeledTree(size=2, term=(3, (1, 2)))).key == "tree;n=2;(1,(2,3))"


def test_components_are_sorted_by_least_leg():
    d = LineDiagram(degree=2, legs=4, components=((1, 3), (0, 2)))
    assert canonicalize_line_diagram(d).key == "deg=2;legs=4;(0,2),(1,3)"


def test_canonical_form_is_idempotent():
    for d in enumerate_line_diagrams(3, 1) + enumerate_line_diagrams(3, 2):
        assert canonicalize_line_diagram(d) == (1, diagram_key(d))


def test_chord_diagram_counts():
    assert [len(enumerate_chord_diagrams(n)) for n in range(1, 5)] == [1, 3, 15, 105]


@pytest.mark.slow
def test_chord_diagram_count_in_degree_five():
    assert len(enumerate_chord_diagrams(5)) == 945


def test_chord_diagrams_are_distinct(crossed):
    keys = [diagram_key(d) for d in enumerate_chord_diagrams(3)]
    assert len(keys) == len(set(keys))
    assert crossed in enumerate_chord_diagrams(2)


def test_component_count_out_of_range():
    with pytest.raises(ModelError):
        enumerate_line_diagrams(2, 3)
    with pytest.raises(ModelError):
        enumerate_line_diagrams(2, 0)


def test_labeled_tree_counts():
    # trivalent trees with L labeled leaves: (2L - 5)!!
    assert [len(enumerate_labeled_trees(n)) for n in range(1, 5)] == [1, 1, 3, 15]


def test_separation(crossed, nested, side_by_side):
    assert is_separated(side_by_side)
    assert is_separated(nested)
    assert not is_separated(crossed)
    assert not is_separated(parse_diagram("deg=1;legs=2;(0,1)"))


def test_join_then_break_recovers_the_diagram(crossed):
    template, identifier, leg_edge = crossed.graph().join(1)
    first, second = template.break_at(identifier, leg_edge)
    assert graph_key(first) == (1, diagram_key(crossed))
    assert graph_key(second).key != diagram_key(crossed)


def test_joining_one_chord_closes_a_loop(side_by_side):
    template, _, _ = side_by_side.graph().join(0)
    with pytest.raises(NotAForestError):
        graph_key(template)


def test_grafting_onto_both_ends_of_a_chord_cancels(crossed):
    graph = crossed.graph()
    first, second = graph_key(graph.graft(0, 1)), graph_key(graph.graft(0, 3))
    assert first.key == second.key
    assert first.sign == -second.sign


def test_graft_needs_two_components():
    graph = parse_diagram("deg=1;legs=2;(0,1)").graph()
    with pytest.raises(InvariantViolation):
        graph.graft(0, 1)


def test_every_edge_is_closed_after_construction():
    graph = parse_diagram("deg=4;legs=5;(0,((1,2),(3,4)))").graph()
    assert all(a is not None and b is not None for a, b in graph.edges.values())
    for identifier, triple in graph.vertices.items():
        assert all(vertex(identifier) in graph.edges[edge] for edge in triple)
    for position, edge in graph.legs.items():
        assert leg(position) in graph.edges[edge]


def test_components_of_a_forest():
    graph = parse_diagram("deg=3;legs=5;(0,(2,4)),(1,3)").graph()
    assert graph.components() == [[0, 2, 4], [1, 3]]
    assert graph.nx_graph().number_of_edges() == 4


def test_separation_survives_canonicalization():
    for k in (1, 2, 3):
        for d in enumerate_line_diagrams(3, k):
            shuffled = LineDiagram(d.degree, d.legs, tuple(mirror(term) for term in reversed(d.components)))
            _, canonical = canonical_form(shuffled)
            assert canonical == d
            assert is_separated(shuffled) == is_separated(canonical)
