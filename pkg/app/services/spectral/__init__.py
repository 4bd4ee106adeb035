from app.services.spectral.antidiagonal import (
    e1_antidiagonal_dim,
    e2_antidiagonal_dim,
    image_d_rank,
    image_d_subspace,
    line_to_tree,
    stu2_tree_subspace,
)
from app.services.spectral.tables import TABLE_COLUMNS, dimension, dimension_table
from app.services.spectral.verification import (
    STATEMENTS,
    format_vector,
    verify_appendix,
    verify_chain,
    verify_differential,
    verify_lie,
    verify_main,
    verify_maps,
    verify_proposition,
    verify_stu2,
)

__all__ = [
    'STATEMENTS',
    'TABLE_COLUMNS',
    'dimension',
    'dimension_table',
    'e1_antidiagonal_dim',
    'e2_antidiagonal_dim',
    'format_vector',
    'image_d_rank',
    'image_d_subspace',
    'line_to_tree',
    'stu2_tree_subspace',
    'verify_appendix',
    'verify_chain',
    'verify_differential',
    'verify_lie',
    'verify_main',
    'verify_maps',
    'verify_proposition',
    'verify_stu2',
]
