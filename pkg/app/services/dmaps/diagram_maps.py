"""
Maps between the diagram modules A^I_{k,n} for neighbouring k.

Phi resolves one segment-adjacent vertex by STU. Psi grafts the legs of the
first component onto the legs they cross while that component is slid to
the far left of the segment; each graft is the join of two adjacent legs in
the STU orientation, so Psi(C) equals C minus the slid diagram modulo STU.

phi and psi act on classes and return normal forms in the target quotient;
phi_representative and psi_representative return the raw STU and graft
sums, which is what the composites below are built from: phi is not
well-defined on classes at k = n - 2.
"""
import logging
from typing import List

from app.errors import InvariantViolation
from app.services.diagrams import LineDiagram, diagram_from_key
from app.services.qlinalg import SparseVector, vector_sum
from app.services.relations import graph_vector, quotient_space, stu_vector, vertex_legs

logger = logging.getLogger(__name__)

AIKN = "AIkn_mod_IHX_STU2_SEP"


def _reduced(image: SparseVector, n: int, k: int) -> SparseVector:
    return quotient_space(AIKN, n, k).normal_form(image)


def phi_diagram(d: LineDiagram) -> SparseVector:
    """STU at the vertex carrying the leftmost vertex-adjacent leg."""
    positions = vertex_legs(d)
    if not positions:
        raise InvariantViolation("phi needs a trivalent vertex adjacent to the segment", f"{d.k} chords only")
    return stu_vector(d, positions[0])


def phi_choices(d: LineDiagram) -> List[SparseVector]:
    """STU at every vertex-adjacent leg; used to check independence of the choice."""
    return [stu_vector(d, position) for position in vertex_legs(d)]


def phi_representative(v: SparseVector) -> SparseVector:
    return vector_sum(phi_diagram(diagram_from_key(key)) * value for key, value in v.items())


def phi(v: SparseVector) -> SparseVector:
    return vector_sum(_phi_class(diagram_from_key(key)) * value for key, value in v.items())


def _phi_class(d: LineDiagram) -> SparseVector:
    return _reduced(phi_diagram(d), d.degree, d.k + 1)


def psi_diagram(d: LineDiagram) -> SparseVector:
    if d.k < 2:
        raise InvariantViolation("psi needs at least two components", f"k={d.k}")
    graph = d.graph()
    first = next(legs for legs in d.component_legs() if 0 in legs)
    order = list(range(d.legs))
    total = SparseVector()
    for placed, moving in enumerate(first):
        if placed == 0:
            continue
        where = order.index(moving)
        arrangement = graph.relabel({original: order.index(original) for original in order})
        for slot in range(where - 1, placed - 1, -1):
            total = total + graph_vector(arrangement.graft(where, slot))
        order.insert(placed, order.pop(where))
    return total


def psi_representative(v: SparseVector) -> SparseVector:
    return vector_sum(psi_diagram(diagram_from_key(key)) * value for key, value in v.items())


def psi(v: SparseVector) -> SparseVector:
    return vector_sum(_psi_class(diagram_from_key(key)) * value for key, value in v.items())


def _psi_class(d: LineDiagram) -> SparseVector:
    return _reduced(psi_diagram(d), d.degree, d.k - 1)


def psi_prime(v: SparseVector) -> SparseVector:
    """Psi applied twice, from chord diagrams down two component counts."""
    return psi_representative(psi_representative(v))


def phi_prime(v: SparseVector) -> SparseVector:
    """Two deterministic STU resolutions, back up to chord diagrams."""
    return phi_representative(phi_representative(v))
