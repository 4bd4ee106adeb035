from app.services.liealg.cofaces import (
    SubstitutionKind,
    SubstitutionRule,
    coface,
    differential,
    full_differential,
    substitute,
    tilde_coface,
)
from app.services.liealg.component import (
    DEFAULT_AMBIENT_CAP,
    LieComponent,
    build_component,
    free_lie_slice,
    jacobi,
    m_subspace,
    monomials,
)
from app.services.liealg.monomials import (
    Generator,
    Monomial,
    canonical_monomial,
    degree,
    generators_of,
    indices_of,
    lie_bracket,
    monomial_from_key,
    monomial_vector,
    parse_monomial,
    text,
)
from app.services.liealg.spanning import m_spanning_set, monomials_on, repeated_pair_generators, x_in_spanning_set

__all__ = [
    'DEFAULT_AMBIENT_CAP',
    'Generator',
    'LieComponent',
    'Monomial',
    'SubstitutionKind',
    'SubstitutionRule',
    'build_component',
    'canonical_monomial',
    'coface',
    'degree',
    'differential',
    'free_lie_slice',
    'full_differential',
    'generators_of',
    'indices_of',
    'jacobi',
    'lie_bracket',
    'm_spanning_set',
    'm_subspace',
    'monomial_from_key',
    'monomial_vector',
    'monomials',
    'monomials_on',
    'parse_monomial',
    'repeated_pair_generators',
    'substitute',
    'text',
    'tilde_coface',
    'x_in_spanning_set',
]
