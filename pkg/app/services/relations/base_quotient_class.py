from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional, Tuple

import logging

from app.services.qlinalg import BasisKey, SparseVector, Subspace, check_support, span
from app.services.relations.relators import Relator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientSpace:
    model: str
    n: int
    k: Optional[int]
    ambient: Tuple[BasisKey, ...]
    relators: Subspace

    @property
    def dim(self) -> int:
        return len(self.ambient) - self.relators.rank

    def normal_form(self, vector: SparseVector) -> SparseVector:
        check_support(self.ambient, [vector])
        return self.relators.reduce(vector)

    def is_zero(self, vector: SparseVector) -> bool:
        return self.normal_form(vector).is_zero()


class BaseQuotientModel(ABC):
    """A family of quotient spaces: an enumerated basis modulo generated relators."""

    name: str = "base"

    @abstractmethod
    def ambient(self, n: int, k: Optional[int]) -> List[BasisKey]:
        """Ordered basis keys of the space before relations."""
        pass

    @abstractmethod
    def relators(self, n: int, k: Optional[int]) -> List[Relator]:
        """Relators supported on the ambient basis."""
        pass

    def validate(self, n: int, k: Optional[int]) -> None:
        pass

    def build(self, n: int, k: Optional[int] = None) -> QuotientSpace:
        self.validate(n, k)
        ambient = sorted(self.ambient(n, k))
        vectors = [relator.vector for relator in self.relators(n, k)]
        check_support(ambient, vectors)
        space = QuotientSpace(model=self.name, n=n, k=k, ambient=tuple(ambient), relators=span(vectors))
        logger.info(f"{self.name} n={n} k={k}: {len(ambient)} generators, {len(vectors)} relators, dim {space.dim}")
        return space
