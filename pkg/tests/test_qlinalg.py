import random
from fractions import Fraction

import pytest

from app.errors import ForeignKeyError
from app.services.qlinalg import (
    SparseVector,
    check_support,
    dense_rank,
    member,
    quotient_dim,
    span,
    vector_sum,
)


def test_zero_coefficients_are_not_stored():
    v = SparseVector({"a": 1, "b": 0, "c": Fraction(2, 3)})
    assert v.keys() == ["a", "c"]
    assert (v - v).is_zero()
    assert SparseVector([("a", 1), ("a", -1)]).is_zero()


def test_arithmetic_is_exact():
    v = SparseVector({"a": 1}) * Fraction(1, 3)
    assert v["a"] == Fraction(1, 3)
    assert (v * 3) == SparseVector.basis("a")
    assert vector_sum([v, v, v]) == SparseVector.basis("a")
    assert (2 * v)["a"] == Fraction(2, 3)


def test_span_reduce_and_membership():
    a, b, c = (SparseVector.basis(key) for key in "abc")
    subspace = span([a + b, a - b])
    assert subspace.rank == 2
    assert member(a, subspace)
    assert member(b * 5, subspace)
    assert not member(c, subspace)
    assert subspace.reduce(a + c) == c


def test_subspace_equality_ignores_insertion_order():
    a, b, c = (SparseVector.basis(key) for key in "abc")
    vectors = [a + b, b + c * 2, a - c * 2]
    assert span(vectors) == span(reversed(vectors))
    assert span(vectors) == span([a + b, b + c * 2])
    assert span(vectors).rank == 2
    assert span(vectors) != span([a, b])
    assert span(vectors + [a - c]) == span([a, b, c])


def test_quotient_dim_and_foreign_keys():
    a, b = SparseVector.basis("a"), SparseVector.basis("b")
    assert quotient_dim(["a", "b", "c"], [a - b, (a - b) * 2]) == 2
    with pytest.raises(ForeignKeyError, match="foreign key"):
        check_support(["a"], [a + b])


def test_sparse_rank_matches_dense_oracle():
    rng = random.Random(20240611)
    for _ in range(100):
        rows, cols = rng.randint(1, 30), rng.randint(1, 30)
        keys = [f"k{index:02d}" for index in range(cols)]
        vectors = []
        for _ in range(rows):
            entries = {
                key: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                for key in keys
                if rng.random() < 0.3
            }
            vectors.append(SparseVector(entries))
        # duplicate a combination so that some matrices are rank deficient
        if len(vectors) > 2:
            vectors.append(vectors[0] * 2 - vectors[1])
        assert span(vectors).rank == dense_rank(vectors, keys)
