"""Exterior powers: compound matrices, wedge coordinates, eigen-splits and
intersections of minus-eigenspaces.

Coordinates on the d-th exterior power are indexed by the lexicographically
ordered d-subsets of {0..n-1} (see linalg.wedge_index_sets); all sign
conventions flow from minor expansion in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import BadDegree, DependentAlphas, NotABasis
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    intersect_all,
    kernel,
    rank,
    vector,
    wedge_index_sets,
)
from .reflections import ReflectionData
from .scalars import Scalar


def _check_degree(n: int, d: int) -> None:
    if d < 0 or d > n:
        raise BadDegree(f"degree {d} outside 0..{n}")


def compound(matrix: Matrix, d: int) -> Matrix:
    """d-th compound: the matrix of d x d minors in lexicographic subset order.

    Entry (J, I) is det of the submatrix on rows J, columns I, so the compound
    realizes the action of the matrix on the d-th exterior power.
    """
    if matrix.rows != matrix.cols:
        raise BadDegree("compound of non-square matrix")
    n = matrix.rows
    _check_degree(n, d)
    subsets = wedge_index_sets(n, d)
    entries: list[Scalar] = []
    for row_set in subsets:
        for col_set in subsets:
            entries.append(matrix.submatrix(row_set, col_set).det())
    size = comb(n, d)
    return Matrix(size, size, entries)


def wedge(vectors: Sequence[Sequence]) -> Vector:
    """Coordinates of v_1 ^ ... ^ v_d on the lexicographic wedge basis.

    The d coordinates are the d x d minors of the n x d stack; the zero vector
    comes back exactly when the inputs are dependent.
    """
    vecs = [vector(v) for v in vectors]
    d = len(vecs)
    if d == 0:
        return (Fraction(1),)
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise NotABasis("wedge factors must share one ambient dimension")
    _check_degree(n, d)
    stacked = Matrix.from_rows(vecs).transpose()  # n x d, columns are the vectors
    return tuple(
        stacked.submatrix(row_set, range(d)).det() for row_set in wedge_index_sets(n, d)
    )


@dataclass(frozen=True)
class EigenSplit:
    """The 1- and lambda-eigenspaces of a reflection acting on the d-th exterior power."""

    plus: Subspace
    minus: Subspace
    degree: int
    reflection: ReflectionData


def eigen_split(refl: ReflectionData, d: int) -> EigenSplit:
    """Eigen-decomposition of the d-th exterior power under a reflection.

    plus is spanned by wedges of d hyperplane-basis vectors, minus by
    alpha ^ (d-1 hyperplane-basis vectors); both are cross-checked against the
    eigen-kernels of the compound matrix.
    """
    n = refl.dim
    _check_degree(n, d)
    h_rows = refl.hyperplane.basis_vectors()
    plus_vecs = [wedge([h_rows[i] for i in c]) for c in itertools.combinations(range(n - 1), d)]
    minus_vecs = [
        wedge([refl.alpha] + [h_rows[i] for i in c])
        for c in itertools.combinations(range(n - 1), d - 1)
    ] if d >= 1 else []
    ambient = comb(n, d)
    plus = Subspace.span(plus_vecs, ambient)
    minus = Subspace.span(minus_vecs, ambient)

    # oracle: the formulas must agree with the kernels of the compound matrix
    cmp_mat = compound(refl.matrix, d)
    ident = Matrix.identity(ambient)
    if plus != kernel(cmp_mat - ident):
        raise AssertionError("plus-eigenspace formula disagrees with compound kernel")
    if minus != kernel(cmp_mat - ident.scale(refl.eigenvalue)):
        raise AssertionError("minus-eigenspace formula disagrees with compound kernel")
    return EigenSplit(plus=plus, minus=minus, degree=d, reflection=refl)


def minus_basis_from_any_extension(
    refl: ReflectionData, ext_basis: Sequence[Sequence], d: int
) -> list[Vector]:
    """Wedges alpha ^ (d-1 of the extension vectors), for any extension of alpha to a basis.

    Their span equals the minus-eigenspace of the d-th exterior power.
    """
    n = refl.dim
    _check_degree(n, d)
    ext = [vector(v) for v in ext_basis]
    if len(ext) != n - 1 or rank(Matrix.from_rows([list(refl.alpha)] + [list(v) for v in ext])) != n:
        raise NotABasis("alpha together with the extension must form a basis")
    if d == 0:
        return []
    return [
        wedge([refl.alpha] + [ext[i] for i in c])
        for c in itertools.combinations(range(n - 1), d - 1)
    ]


def extend_to_basis(vectors: Sequence[Vector], n: int) -> list[Vector]:
    """Greedily extend independent vectors to a basis of F^n using standard basis vectors."""
    rows = [list(v) for v in vectors]
    base = rank(Matrix.from_rows(rows)) if rows else 0
    if base != len(rows):
        raise DependentAlphas("vectors to extend are dependent")
    out = list(vectors)
    for j in range(n):
        if len(out) == n:
            break
        e = tuple(Fraction(1) if i == j else Fraction(0) for i in range(n))
        candidate = [list(v) for v in out] + [list(e)]
        if rank(Matrix.from_rows(candidate)) == len(out) + 1:
            out.append(e)
    return out


def minus_intersection(refls: Sequence[ReflectionData], d: int) -> Subspace:
    """Intersection of the minus-eigenspaces of k reflections with independent alphas.

    Zero for d < k; for d >= k the span of alpha_1 ^ ... ^ alpha_k ^ (d-k
    extension vectors) over any extension of the alphas to a basis.  The empty
    family yields the whole exterior power.
    """
    if not refls:
        raise ValueError("minus_intersection needs the ambient dimension; pass at least one reflection")
    n = refls[0].dim
    _check_degree(n, d)
    k = len(refls)
    alphas = [r.alpha for r in refls]
    if rank(Matrix.from_rows([list(a) for a in alphas])) != k:
        raise DependentAlphas("reflection vectors are linearly dependent")
    ambient = comb(n, d)
    if d < k:
        return Subspace.zero(ambient)
    full_basis = extend_to_basis(alphas, n)
    extension = full_basis[k:]
    vecs = [
        wedge(list(alphas) + [extension[i] for i in c])
        for c in itertools.combinations(range(n - k), d - k)
    ]
    return Subspace.span(vecs, ambient)


def exterior_subspace(space: Subspace, d: int) -> Subspace:
    """The d-th exterior power of a subspace, inside the exterior power of the ambient space."""
    n = space.ambient_dim
    _check_degree(n, d)
    rows = space.basis_vectors()
    vecs = [wedge([rows[i] for i in c]) for c in itertools.combinations(range(len(rows)), d)]
    return Subspace.span(vecs, comb(n, d))


def minus_intersection_bruteforce(refls: Sequence[ReflectionData], d: int) -> Subspace:
    """Oracle path: intersect the eigen-kernels of the compound matrices directly."""
    if not refls:
        raise ValueError("need at least one reflection")
    n = refls[0].dim
    _check_degree(n, d)
    ambient = comb(n, d)
    spaces = []
    for r in refls:
        cmp_mat = compound(r.matrix, d)
        spaces.append(kernel(cmp_mat - Matrix.identity(ambient).scale(r.eigenvalue)))
    return intersect_all(spaces, ambient)
