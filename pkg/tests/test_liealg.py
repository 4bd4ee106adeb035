import pytest

from app.errors import AmbientTooLargeError, DiagramSyntaxError, InvariantViolation
from app.services.liealg import (
    Generator,
    SubstitutionKind,
    SubstitutionRule,
    build_component,
    canonical_monomial,
    coface,
    differential,
    free_lie_slice,
    full_differential,
    jacobi,
    lie_bracket,
    m_spanning_set,
    m_subspace,
    monomial_vector,
    monomials,
    parse_monomial,
    repeated_pair_generators,
    substitute,
    text,
    tilde_coface,
    x_in_spanning_set,
)
from app.services.liealg.monomials import normalize_generator
from app.services.qlinalg import SparseVector

x12, x13, x23 = Generator(1, 2), Generator(1, 3), Generator(2, 3)


def test_parse_and_print():
    assert parse_monomial("[x1_2,[x1_3,x2_3]]") == (x12, (x13, x23))
    assert text((x12, (x13, x23))) == "[x1_2,[x1_3,x2_3]]"


def test_parse_rejects_whitespace():
    with pytest.raises(DiagramSyntaxError) as e:
        parse_monomial("[x1_2, x1_3]")
    assert e.value.position == 6
    with pytest.raises(DiagramSyntaxError):
        parse_monomial("[x1_2,x1_3")


def test_generators_are_antisymmetric_in_their_indices():
    assert normalize_generator(Generator(3, 1)) == (-1, x13)
    assert normalize_generator(Generator(2, 2))[0] == 0
    assert monomial_vector(Generator(2, 1)) == SparseVector.basis("x1_2", -1)


def test_graded_antisymmetry():
    # odd generators commute up to the graded sign
    assert canonical_monomial((x13, x12)) == (1, (x12, x13))
    assert canonical_monomial((x12, x12))[0] == 1
    even = (x12, x13)
    assert canonical_monomial((even, even))[0] == 0
    assert canonical_monomial(((x12, x13), x23)) == (1, ((x12, x13), x23))
    assert canonical_monomial((x23, (x12, x13))) == (-1, ((x12, x13), x23))


def test_lie_bracket_is_bilinear():
    u = monomial_vector(x12) + monomial_vector(x13)
    expected = monomial_vector((x12, x12)) + monomial_vector((x12, x13)) * 2 + monomial_vector((x13, x13))
    assert lie_bracket(u, u) == expected


def test_jacobi_holds_in_the_component():
    component = build_component(3, 3)
    assert component.is_zero(jacobi(x12, x13, x23))
    assert component.is_zero(jacobi(x12, x12, x13))


def test_disjoint_generators_commute():
    component = build_component(4, 2)
    assert component.is_zero(monomial_vector((Generator(1, 2), Generator(3, 4))))
    assert not component.is_zero(monomial_vector((x12, x13)))


def test_ambient_cap():
    with pytest.raises(AmbientTooLargeError, match="ambient too large"):
        monomials(4, 4, 10)


def test_reduced_differential_in_degree_two():
    c = monomial_vector((x12, x12))
    expected = monomial_vector((x12, x13)) * 2 - monomial_vector((x13, x23)) * 2
    assert differential(c, 2) == expected
    assert differential(c, 2, verify=True) == expected


def test_full_differential_of_a_generator_vanishes():
    assert full_differential(monomial_vector(x12), 2).is_zero()
    assert coface(1, monomial_vector(x12), 2) == monomial_vector(x13) + monomial_vector(x23)


def test_coface_index_range():
    with pytest.raises(InvariantViolation):
        coface(4, monomial_vector(x12), 2)


def test_differential_squares_to_zero():
    for c in m_spanning_set(3, 3):
        once = differential(monomial_vector(c), 3)
        assert differential(once, 4).is_zero()


def test_substitutions():
    assert substitute(x12, SubstitutionRule(SubstitutionKind.SHIFT1)) == monomial_vector(x13)
    assert substitute(x12, SubstitutionRule(SubstitutionKind.SHIFT2)) == monomial_vector(x23)
    assert substitute((x12, x13), SubstitutionRule(SubstitutionKind.BRACE, 2)) == monomial_vector((x12, Generator(1, 4)))
    assert substitute((x12, x13), SubstitutionRule(SubstitutionKind.ANGLE, 2)) == monomial_vector((x13, Generator(1, 4)))
    with pytest.raises(InvariantViolation):
        substitute(x23, SubstitutionRule(SubstitutionKind.SHIFT1))
    with pytest.raises(InvariantViolation):
        SubstitutionRule(SubstitutionKind.BRACE)


def test_reduced_coface_index_range():
    c = monomial_vector((x12, x13))
    assert not tilde_coface(1, c, 2).is_zero()
    for l in (0, 3):
        with pytest.raises(InvariantViolation):
            tilde_coface(l, c, 2)


def test_spanning_sets():
    assert m_spanning_set(2, 2) == [(x12, x12)]
    assert m_spanning_set(2, 3) == [(x12, x13)]
    assert m_spanning_set(1, 3) == []
    assert x_in_spanning_set(2, 3) == [(x13, x23)]
    assert repeated_pair_generators(2) == [(x12, x12)]


def test_two_descriptions_of_the_antidiagonal_agree_in_degree_two():
    component = build_component(3, 2)
    assert m_subspace(component, m_spanning_set(2, 3)) == m_subspace(component, x_in_spanning_set(2, 3))


def test_repeated_pairs_span_the_top_degree():
    component = build_component(3, 3)
    assert m_subspace(component, repeated_pair_generators(3)) == m_subspace(component, m_spanning_set(3, 3))


def test_free_lie_slice_dimension():
    # multilinear free Lie algebra on three letters has dimension 2
    assert free_lie_slice([x12, x13, Generator(1, 4)]).dim == 2
