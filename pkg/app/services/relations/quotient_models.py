import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

from app.errors import ModelError
from app.services.diagrams import LabeledTree, diagram_key, enumerate_labeled_trees, enumerate_line_diagrams, tree_key, trees_on
from app.services.diagrams.model import canonicalize_labeled_tree
from app.services.qlinalg import BasisKey, SparseVector
from app.services.relations.base_quotient_class import BaseQuotientModel, QuotientSpace
from app.services.relations.relators import (
    Relator,
    RelatorKind,
    jacobi_moves,
    relators_4t,
    relators_ihx,
    relators_sep,
    relators_stu,
    relators_stu2,
)

logger = logging.getLogger(__name__)


class ChordsMod4TSep(BaseQuotientModel):
    name = "chords_mod_4T_SEP"

    def ambient(self, n: int, k: Optional[int]) -> List[BasisKey]:
        return [diagram_key(d) for d in enumerate_line_diagrams(n, n)]

    def relators(self, n: int, k: Optional[int]) -> List[Relator]:
        return relators_4t(n) + relators_sep(n, n)


class FeynmanModStuSep(BaseQuotientModel):
    name = "feynman_mod_STU_SEP"

    def ambient(self, n: int, k: Optional[int]) -> List[BasisKey]:
        return [diagram_key(d) for components in range(1, n + 1) for d in enumerate_line_diagrams(n, components)]

    def relators(self, n: int, k: Optional[int]) -> List[Relator]:
        separated = [relator for components in range(1, n + 1) for relator in relators_sep(n, components)]
        return relators_stu(n) + separated


class AIknModIhxStu2Sep(BaseQuotientModel):
    name = "AIkn_mod_IHX_STU2_SEP"

    def validate(self, n: int, k: Optional[int]) -> None:
        if k is None or not 1 <= k <= n:
            raise ModelError(f"{self.name} needs 1 <= k <= n, got k={k}, n={n}")

    def ambient(self, n: int, k: Optional[int]) -> List[BasisKey]:
        return [diagram_key(d) for d in enumerate_line_diagrams(n, k)]

    def relators(self, n: int, k: Optional[int]) -> List[Relator]:
        return relators_ihx(n, k) + relators_stu2(n, k) + relators_sep(n, k)


def tree_ihx_relators(n: int, labels: Optional[Sequence[int]] = None) -> List[Relator]:
    """IHX among trees of size n on the given labels (all of 1..n+1 by default)."""
    if labels is None:
        terms = [tree.term for tree in enumerate_labeled_trees(n)]
    else:
        terms = list(trees_on(tuple(sorted(labels))))
    relators = []
    for root, body in terms:
        for sign, *moved in jacobi_moves(body):
            vector = SparseVector()
            for coefficient, term in zip((1, -1, -1), moved):
                signed = canonicalize_labeled_tree(LabeledTree(size=n, term=(root, term)))
                vector = vector + SparseVector.basis(signed.key, coefficient * signed.sign)
            if not vector.is_zero():
                relators.append(Relator(vector * sign, RelatorKind.IHX))
    return relators


class BarAI1nModIhx(BaseQuotientModel):
    name = "barAI1n_mod_IHX"

    def ambient(self, n: int, k: Optional[int]) -> List[BasisKey]:
        return [tree_key(t) for t in enumerate_labeled_trees(n)]

    def relators(self, n: int, k: Optional[int]) -> List[Relator]:
        return tree_ihx_relators(n)


MODELS: Dict[str, BaseQuotientModel] = {
    model.name: model for model in (ChordsMod4TSep(), FeynmanModStuSep(), AIknModIhxStu2Sep(), BarAI1nModIhx())
}


@lru_cache(maxsize=None)
def quotient_space(model: str, n: int, k: Optional[int] = None) -> QuotientSpace:
    if model not in MODELS:
        raise ModelError(f"unknown model {model!r}; expected one of {sorted(MODELS)}")
    if n < 1:
        raise ModelError(f"degree must be at least 1, got {n}")
    if model != AIknModIhxStu2Sep.name:
        k = None
    return MODELS[model].build(n, k)
