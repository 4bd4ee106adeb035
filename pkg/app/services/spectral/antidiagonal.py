"""
The antidiagonal of the spectral sequence, computed in the tree model.

M_{n,n+1} is carried by Delta onto labeled trees of size n modulo IHX, so
the image of the differential and the STU² relators are both compared as
subspaces of the labeled-tree span; a subspace of the quotient is stored as
its preimage span(IHX + vectors).
"""
import logging
from functools import lru_cache

from app.services.diagrams import LabeledTree, diagram_from_key, map_leaves
from app.services.dmaps import delta, tree_vector
from app.services.liealg import differential, m_spanning_set, monomial_vector
from app.services.qlinalg import SparseVector, Subspace, span, vector_sum
from app.services.relations import quotient_space, relators_stu2

logger = logging.getLogger(__name__)


def line_to_tree(v: SparseVector, n: int) -> SparseVector:
    """One-component diagrams of degree n as labeled trees, label = leg position + 1."""
    terms = []
    for key, value in v.items():
        (component,) = diagram_from_key(key).components
        tree = LabeledTree(size=n, term=map_leaves(component, lambda position: position + 1))
        terms.append(tree_vector(tree, value))
    return vector_sum(terms)


def e1_antidiagonal_dim(n: int) -> int:
    return quotient_space("barAI1n_mod_IHX", n).dim


@lru_cache(maxsize=None)
def image_d_vectors(n: int) -> tuple:
    """Delta of the reduced differential on every spanning monomial of M_{n,n}."""
    images = []
    for c in m_spanning_set(n, n):
        image = delta(differential(monomial_vector(c), n), n)
        if not image.is_zero():
            images.append(image)
    logger.info(f"image of d for n={n}: {len(images)} nonzero vectors")
    return tuple(images)


@lru_cache(maxsize=None)
def image_d_subspace(n: int) -> Subspace:
    return quotient_space("barAI1n_mod_IHX", n).relators.extend(image_d_vectors(n))


@lru_cache(maxsize=None)
def stu2_tree_subspace(n: int) -> Subspace:
    vectors = [line_to_tree(relator.vector, n) for relator in relators_stu2(n, 1)]
    return quotient_space("barAI1n_mod_IHX", n).relators.extend(vectors)


def image_d_rank(n: int) -> int:
    """Rank of the image of d inside the tree quotient."""
    return image_d_subspace(n).rank - quotient_space("barAI1n_mod_IHX", n).relators.rank


def e2_antidiagonal_dim(n: int) -> int:
    return e1_antidiagonal_dim(n) - image_d_rank(n)
