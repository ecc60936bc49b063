"""Shared helpers for the test suite."""

from fractions import Fraction

import pytest

from reflext.linalg import Matrix, Subspace


def random_matrix(rng, rows, cols, bound=4):
    return Matrix(rows, cols, [Fraction(rng.randint(-bound, bound)) for _ in range(rows * cols)])


def random_invertible(rng, n, bound=4):
    while True:
        m = random_matrix(rng, n, n, bound)
        if m.det():
            return m


def random_subspace(rng, ambient, max_dim=None, bound=3):
    max_dim = ambient if max_dim is None else max_dim
    dim = rng.randint(0, max_dim)
    vectors = [
        [Fraction(rng.randint(-bound, bound)) for _ in range(ambient)] for _ in range(dim)
    ]
    return Subspace.span(vectors, ambient)


@pytest.fixture
def rng():
    import random

    return random.Random(987654321)
