from math import factorial

import pytest

from app.errors import ForeignKeyError, InvariantViolation, ModelError
from app.services.diagrams import diagram_key, enumerate_line_diagrams, parse_diagram
from app.services.qlinalg import SparseVector, dense_rank, span
from app.services.relations import (
    MODELS,
    quotient_space,
    relators_4t,
    relators_sep,
    relators_stu2,
    stu_resolutions,
    stu_vector,
    vertex_legs,
)
from app.services.relations.relators import jacobi_moves

PRIMITIVE_DIMS = {1: 1, 2: 1, 3: 1, 4: 2}


def test_stu_at_a_y_tree(crossed, nested):
    y_tree = parse_diagram("deg=2;legs=3;(0,(1,2))")
    assert vertex_legs(y_tree) == [0, 1, 2]
    expected = SparseVector.basis(diagram_key(crossed)) - SparseVector.basis(diagram_key(nested))
    assert stu_vector(y_tree, 0) == expected


def test_stu_resolutions_agree_with_the_relator():
    for k in (1, 2):
        for d in enumerate_line_diagrams(3, k):
            for position in vertex_legs(d):
                (first_sign, first), (second_sign, second) = stu_resolutions(d, position)
                assert first.k == second.k == k + 1
                resolved = SparseVector.basis(diagram_key(first), first_sign) - SparseVector.basis(diagram_key(second), second_sign)
                assert resolved == stu_vector(d, position)


def test_stu_needs_a_vertex():
    with pytest.raises(InvariantViolation):
        stu_vector(parse_diagram("deg=1;legs=2;(0,1)"), 0)


def test_jacobi_moves_on_a_single_internal_edge():
    assert list(jacobi_moves((1, (2, 3)))) == [(1, (1, (2, 3)), ((1, 2), 3), (2, (1, 3)))]
    assert list(jacobi_moves((2, 3))) == []


def test_four_term_relators_have_balanced_coefficients():
    for relator in relators_4t(3):
        assert sum(value for _, value in relator.vector.items()) == 0


def test_separated_relators(crossed):
    separated = {relator.vector.leading_key() for relator in relators_sep(2, 2)}
    assert len(separated) == 2
    assert diagram_key(crossed) not in separated


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chord_and_feynman_models_agree(n):
    assert quotient_space("chords_mod_4T_SEP", n).dim == PRIMITIVE_DIMS[n]
    assert quotient_space("feynman_mod_STU_SEP", n).dim == PRIMITIVE_DIMS[n]


@pytest.mark.slow
def test_chord_model_in_degree_four():
    assert quotient_space("chords_mod_4T_SEP", 4).dim == PRIMITIVE_DIMS[4]
    assert quotient_space("feynman_mod_STU_SEP", 4).dim == PRIMITIVE_DIMS[4]


@pytest.mark.parametrize("n", [2, 3])
def test_tree_model_is_independent_of_k(n):
    for k in range(1, n + 1):
        if k == n - 1:
            continue
        assert quotient_space("AIkn_mod_IHX_STU2_SEP", n, k).dim == PRIMITIVE_DIMS[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_labeled_trees_modulo_ihx(n):
    assert quotient_space("barAI1n_mod_IHX", n).dim == factorial(n - 1)


@pytest.mark.parametrize("n", [2, 3])
def test_stu2_on_chords_is_4t(n):
    assert span(r.vector for r in relators_stu2(n, n)) == span(r.vector for r in relators_4t(n))


def test_distinct_vertex_stu2_suffices_below_chords():
    for k in (1, 2):
        full = span(r.vector for r in relators_stu2(3, k))
        assert span(r.vector for r in relators_stu2(3, k, distinct_only=True)) == full


def model_instances(max_degree):
    for model in MODELS:
        for n in range(1, max_degree + 1):
            for k in (range(1, n + 1) if model == "AIkn_mod_IHX_STU2_SEP" else [None]):
                yield model, n, k


def test_sparse_ranks_match_dense_oracle():
    checked = 0
    for model, n, k in model_instances(3):
        space = quotient_space(model, n, k)
        if len(space.ambient) > 500:
            continue
        assert dense_rank(space.relators.rows, space.ambient) == space.relators.rank, (model, n, k)
        checked += 1
    assert checked == 15
    vectors = [r.vector for r in relators_4t(3)]
    assert dense_rank(vectors) == span(vectors).rank


def test_unknown_models_and_bad_k():
    with pytest.raises(ModelError):
        quotient_space("knots", 2)
    with pytest.raises(ModelError):
        quotient_space("AIkn_mod_IHX_STU2_SEP", 2, 3)
    with pytest.raises(ModelError):
        quotient_space("chords_mod_4T_SEP", 0)


def test_normal_form_rejects_foreign_keys():
    space = quotient_space("chords_mod_4T_SEP", 2)
    with pytest.raises(ForeignKeyError):
        space.normal_form(SparseVector.basis("deg=1;legs=2;(0,1)"))


def test_normal_form_of_separated_diagram_is_zero(nested, crossed):
    space = quotient_space("chords_mod_4T_SEP", 2)
    assert space.is_zero(SparseVector.basis(diagram_key(nested)))
    assert not space.is_zero(SparseVector.basis(diagram_key(crossed)))
