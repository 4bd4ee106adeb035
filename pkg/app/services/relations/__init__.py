from app.services.relations.base_quotient_class import BaseQuotientModel, QuotientSpace
from app.services.relations.quotient_models import MODELS, quotient_space, tree_ihx_relators
from app.services.relations.relators import (
    Relator,
    RelatorKind,
    breaking_at_leg,
    diagram_vector,
    graph_vector,
    relators_4t,
    relators_ihx,
    relators_sep,
    relators_stu,
    relators_stu2,
    resolution,
    stu_resolutions,
    stu_vector,
    vertex_legs,
)

__all__ = [
    'BaseQuotientModel',
    'MODELS',
    'QuotientSpace',
    'Relator',
    'RelatorKind',
    'breaking_at_leg',
    'diagram_vector',
    'graph_vector',
    'quotient_space',
    'relators_4t',
    'relators_ihx',
    'relators_sep',
    'relators_stu',
    'relators_stu2',
    'resolution',
    'stu_resolutions',
    'stu_vector',
    'tree_ihx_relators',
    'vertex_legs',
]
