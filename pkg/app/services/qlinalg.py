"""
Exact rational sparse linear algebra over ordered string keys.

Vectors are immutable maps key -> Fraction with no stored zeros. A Subspace
keeps its basis in reduced echelon form: every row is normalised so that its
least key (the pivot) has coefficient 1, and no pivot key occurs in any other
row. Rows are inserted one at a time and reduced against the existing basis.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from app.errors import ForeignKeyError

logger = logging.getLogger(__name__)

BasisKey = str
Scalar = Union[int, Fraction]


class SparseVector:
    """A finite linear combination of basis keys with rational coefficients."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Optional[Union[Mapping[BasisKey, Scalar], Iterable[Tuple[BasisKey, Scalar]]]] = None):
        merged: Dict[BasisKey, Fraction] = {}
        if entries is not None:
            items = entries.items() if isinstance(entries, Mapping) else entries
            for key, value in items:
                if value == 0:
                    continue
                total = merged.get(key, 0) + Fraction(value)
                if total == 0:
                    merged.pop(key, None)
                else:
                    merged[key] = total
        self._entries = merged
        self._hash = None

    @classmethod
    def basis(cls, key: BasisKey, coefficient: Scalar = 1) -> "SparseVector":
        return cls({key: coefficient})

    @classmethod
    def _trusted(cls, entries: Dict[BasisKey, Fraction]) -> "SparseVector":
        vector = cls.__new__(cls)
        vector._entries = entries
        vector._hash = None
        return vector

    def __getitem__(self, key: BasisKey) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __contains__(self, key: BasisKey) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[BasisKey]:
        return iter(sorted(self._entries))

    def __bool__(self) -> bool:
        return bool(self._entries)

    def items(self) -> List[Tuple[BasisKey, Fraction]]:
        return sorted(self._entries.items())

    def keys(self) -> List[BasisKey]:
        return sorted(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def leading_key(self) -> BasisKey:
        return min(self._entries)

    def support(self) -> frozenset:
        return frozenset(self._entries)

    def add_scaled(self, other: "SparseVector", factor: Scalar) -> "SparseVector":
        """Return self + factor * other."""
        if factor == 0 or not other._entries:
            return self
        result = dict(self._entries)
        for key, value in other._entries.items():
            total = result.get(key, 0) + factor * value
            if total == 0:
                result.pop(key, None)
            else:
                result[key] = total
        return SparseVector._trusted(result)

    def __add__(self, other: "SparseVector") -> "SparseVector":
        return self.add_scaled(other, 1)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self.add_scaled(other, -1)

    def __neg__(self) -> "SparseVector":
        return SparseVector._trusted({k: -v for k, v in self._entries.items()})

    def __mul__(self, factor: Scalar) -> "SparseVector":
        if factor == 0:
            return SparseVector()
        factor = Fraction(factor)
        return SparseVector._trusted({k: v * factor for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._entries:
            return "SparseVector(0)"
        body = " + ".join(f"{value}*{key}" for key, value in self.items())
        return f"SparseVector({body})"


def vector_sum(vectors: Iterable[SparseVector]) -> SparseVector:
    accumulator: Dict[BasisKey, Fraction] = {}
    for vector in vectors:
        for key, value in vector._entries.items():
            total = accumulator.get(key, 0) + value
            if total == 0:
                accumulator.pop(key, None)
            else:
                accumulator[key] = total
    return SparseVector._trusted(accumulator)


class Subspace:
    """Reduced echelon basis of a subspace of the free Q-module on string keys."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Optional[Dict[BasisKey, SparseVector]] = None):
        self._rows: Dict[BasisKey, SparseVector] = dict(rows or {})

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Dict[BasisKey, int]:
        return {key: index for index, key in enumerate(sorted(self._rows))}

    @property
    def rows(self) -> List[SparseVector]:
        return [self._rows[key] for key in sorted(self._rows)]

    def reduce(self, vector: SparseVector) -> SparseVector:
        # Rows carry no foreign pivots, so one subtraction per pivot present suffices.
        result = vector
        for key in [k for k in vector._entries if k in self._rows]:
            coefficient = result[key]
            if coefficient:
                result = result.add_scaled(self._rows[key], -coefficient)
        return result

    def _insert(self, vector: SparseVector) -> bool:
        residue = self.reduce(vector)
        if residue.is_zero():
            return False
        pivot = residue.leading_key()
        residue = residue * (1 / residue[pivot])
        for key, row in list(self._rows.items()):
            coefficient = row[pivot]
            if coefficient:
                self._rows[key] = row.add_scaled(residue, -coefficient)
        self._rows[pivot] = residue
        return True

    def extend(self, vectors: Iterable[SparseVector]) -> "Subspace":
        extended = Subspace(self._rows)
        for vector in vectors:
            extended._insert(vector)
        return extended

    def __contains__(self, vector: SparseVector) -> bool:
        return self.reduce(vector).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(frozenset(self._rows))

    def __repr__(self) -> str:
        return f"Subspace(rank={self.rank})"


def span(vectors: Iterable[SparseVector]) -> Subspace:
    return Subspace().extend(vectors)


def reduce(vector: SparseVector, subspace: Subspace) -> SparseVector:
    return subspace.reduce(vector)


def member(vector: SparseVector, subspace: Subspace) -> bool:
    return reduce(vector, subspace).is_zero()


def check_support(ambient_keys: Iterable[BasisKey], vectors: Iterable[SparseVector]) -> None:
    ambient = set(ambient_keys)
    for vector in vectors:
        for key in vector._entries:
            if key not in ambient:
                raise ForeignKeyError(key)


def quotient_dim(ambient_keys: Sequence[BasisKey], relators: Sequence[SparseVector]) -> int:
    check_support(ambient_keys, relators)
    relator_span = span(relators)
    logger.debug(f"quotient: {len(ambient_keys)} keys, {len(relators)} relators, rank {relator_span.rank}")
    return len(set(ambient_keys)) - relator_span.rank


def dense_rank(vectors: Sequence[SparseVector], keys: Optional[Sequence[BasisKey]] = None) -> int:
    """Rank computed by sympy's dense elimination over QQ, used as an independent oracle."""
    if not vectors:
        return 0
    columns = sorted(keys) if keys is not None else sorted(set().union(*(v.support() for v in vectors)))
    if not columns:
        return 0
    index = {key: i for i, key in enumerate(columns)}
    rows = []
    for vector in vectors:
        row = [QQ(0)] * len(columns)
        for key, value in vector.items():
            row[index[key]] = QQ(value.numerator, value.denominator)
        rows.append(row)
    return DomainMatrix(rows, (len(rows), len(columns)), QQ).rank()
