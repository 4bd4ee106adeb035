from app.services.dmaps.diagram_maps import (
    phi,
    phi_choices,
    phi_diagram,
    phi_prime,
    phi_representative,
    psi,
    psi_diagram,
    psi_prime,
    psi_representative,
)
from app.services.dmaps.trees import (
    bracket_trees,
    delta,
    index_sign,
    nabla,
    nabla_tree,
    segment,
    tree_bracket,
    tree_degree,
    tree_vector,
)

__all__ = [
    'bracket_trees',
    'delta',
    'index_sign',
    'nabla',
    'nabla_tree',
    'phi',
    'phi_choices',
    'phi_diagram',
    'phi_prime',
    'phi_representative',
    'psi',
    'psi_diagram',
    'psi_prime',
    'psi_representative',
    'segment',
    'tree_bracket',
    'tree_degree',
    'tree_vector',
]
