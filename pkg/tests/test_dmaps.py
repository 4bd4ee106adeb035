import pytest

from app.errors import InvariantViolation
from app.services.diagrams import LabeledTree, diagram_key, enumerate_labeled_trees, parse_diagram, parse_tree
from app.services.dmaps import (
    delta,
    index_sign,
    nabla,
    phi,
    phi_choices,
    phi_representative,
    psi,
    psi_diagram,
    psi_representative,
    tree_bracket,
    tree_vector,
)
from app.services.liealg import Generator, monomial_vector
from app.services.qlinalg import SparseVector
from app.services.relations import quotient_space

Y_TREE = "deg=2;legs=3;(0,(1,2))"
Y_LABELED = "tree;n=2;(1,(2,3))"
x12, x13, x23 = Generator(1, 2), Generator(1, 3), Generator(2, 3)


def test_index_sign():
    assert index_sign({1}, {2}) == 0
    assert index_sign({2}, {1}) == 1
    assert index_sign({1, 3}, {1, 2}) == 1
    with pytest.raises(InvariantViolation):
        index_sign({1, 2}, {1, 2, 3})


def test_delta_on_generators():
    assert delta(monomial_vector(x12), 1) == SparseVector.basis("tree;n=1;(1,2)")
    assert delta(monomial_vector(Generator(2, 1)), 1) == SparseVector.basis("tree;n=1;(1,2)", -1)


def test_delta_on_brackets():
    y = SparseVector.basis(Y_LABELED)
    assert delta(monomial_vector((x12, x13)), 2) == y
    assert delta(monomial_vector((x13, x23)), 2) == y
    assert delta(monomial_vector((x12, x23)), 2) == -y


def test_delta_of_the_h_tree_chain():
    inner = tree_bracket(LabeledTree(size=3, term=(4, 2)), LabeledTree(size=3, term=(2, 3)))
    assert inner == -tree_vector(LabeledTree(size=3, term=(2, (4, 3))))
    h_tree = delta(monomial_vector(((Generator(4, 2), x23), x13)), 3)
    assert h_tree == SparseVector.basis("tree;n=3;(1,((2,4),3))", -1)


def test_tree_bracket_needs_exactly_one_common_label():
    segment = parse_tree("tree;n=3;(1,2)")
    assert tree_bracket(segment, parse_tree("tree;n=3;(3,4)")).is_zero()
    assert tree_bracket(segment, parse_tree("tree;n=3;(1,2)")).is_zero()
    assert not tree_bracket(segment, parse_tree("tree;n=3;(2,3)")).is_zero()


def test_nabla():
    assert nabla(SparseVector.basis(Y_LABELED)) == monomial_vector((x12, x13))
    with pytest.raises(InvariantViolation):
        nabla(tree_vector(LabeledTree(size=3, term=(1, (2, 3)))))


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_delta_inverts_nabla(n):
    trees = quotient_space("barAI1n_mod_IHX", n)
    for t in enumerate_labeled_trees(n):
        v = tree_vector(t)
        assert trees.is_zero(delta(nabla(v), n) - v)


def test_psi_on_the_crossed_chords(crossed):
    trees = quotient_space("AIkn_mod_IHX_STU2_SEP", 2, 1)
    y = SparseVector.basis(Y_TREE)
    assert psi_representative(SparseVector.basis(diagram_key(crossed))) == y
    assert psi(SparseVector.basis(diagram_key(crossed))) == trees.normal_form(y)


def test_phi_resolves_the_leftmost_vertex(crossed, nested):
    chords = quotient_space("AIkn_mod_IHX_STU2_SEP", 2, 2)
    expected = SparseVector.basis(diagram_key(crossed)) - SparseVector.basis(diagram_key(nested))
    assert phi_representative(SparseVector.basis(Y_TREE)) == expected
    assert phi(SparseVector.basis(Y_TREE)) == chords.normal_form(expected)


def test_phi_and_psi_return_normal_forms():
    for k in (1, 2):
        source, target = quotient_space("AIkn_mod_IHX_STU2_SEP", 3, k), quotient_space("AIkn_mod_IHX_STU2_SEP", 3, k + 1)
        for key in source.ambient:
            image = phi(SparseVector.basis(key))
            assert target.normal_form(image) == image
            assert target.is_zero(image - phi_representative(SparseVector.basis(key)))
    for key in quotient_space("AIkn_mod_IHX_STU2_SEP", 3, 3).ambient:
        image = psi(SparseVector.basis(key))
        assert quotient_space("AIkn_mod_IHX_STU2_SEP", 3, 2).normal_form(image) == image


def test_phi_inverts_psi_in_degree_two():
    chords = quotient_space("AIkn_mod_IHX_STU2_SEP", 2, 2)
    for key in chords.ambient:
        basis = SparseVector.basis(key)
        assert chords.is_zero(phi(psi(basis)) - basis)


def test_phi_choices_agree_modulo_relators():
    chords = quotient_space("AIkn_mod_IHX_STU2_SEP", 2, 2)
    choices = [chords.normal_form(v) for v in phi_choices(parse_diagram(Y_TREE))]
    assert len(choices) == 3
    assert all(choice == choices[0] for choice in choices)


def test_psi_needs_two_components():
    with pytest.raises(InvariantViolation):
        psi_diagram(parse_diagram(Y_TREE))
