"""Dense exact linear algebra over Q or Q(sqrt(m)).

Matrices are immutable, stored row-major as tuples of exact scalars.  A
Subspace is identified with its canonical reduced-row-echelon basis (zero rows
dropped), so subspace equality is literal matrix equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, EmptyGeneratorList, LengthMismatch, SingularMatrix
from .scalars import Scalar, as_scalar, field_tag, inv, merge_tags

Vector = tuple[Scalar, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(e) for e in entries)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    if len(u) != len(v):
        raise LengthMismatch("dot product of vectors of different lengths")
    total: Scalar = _ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in u)


def is_zero_vector(u: Sequence[Scalar]) -> bool:
    return all(not x for x in u)


class Matrix:
    """Immutable dense exact matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        self.rows = rows
        self.cols = cols
        self.entries = tuple(as_scalar(e) for e in entries)
        if len(self.entries) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [_ONE if i == j else _ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [_ZERO] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def field(self) -> int | None:
        tag = None
        for e in self.entries:
            tag = merge_tags(tag, field_tag(e))
        return tag

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LengthMismatch("matrix addition shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LengthMismatch("matrix subtraction shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LengthMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        other_cols = [other.col(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in other_cols:
                out.append(dot(r, c))
        return Matrix(self.rows, other.cols, out)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if self.cols != len(v):
            raise LengthMismatch("matrix/vector size mismatch")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise LengthMismatch("trace of non-square matrix")
        total: Scalar = _ZERO
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(
            len(row_idx),
            len(col_idx),
            [self.entries[i * self.cols + j] for i in row_idx for j in col_idx],
        )

    def stack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise LengthMismatch("vertical stack needs equal column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def augment(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise LengthMismatch("augment needs equal row counts")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, out)

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise LengthMismatch("determinant of non-square matrix")
        n = self.rows
        rows = self.row_list()
        result: Scalar = _ONE
        for c in range(n):
            pivot = next((r for r in range(c, n) if rows[r][c]), None)
            if pivot is None:
                return _ZERO
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                result = -result
            result = result * rows[c][c]
            piv_inv = inv(rows[c][c])
            for r in range(c + 1, n):
                if rows[r][c]:
                    factor = rows[r][c] * piv_inv
                    for j in range(c, n):
                        rows[r][j] = rows[r][j] - factor * rows[c][j]
        return result

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise LengthMismatch("inverse of non-square matrix")
        n = self.rows
        reduced, rank = rref(self.augment(Matrix.identity(n)))
        if rank < n or any(reduced[i, i] != 1 for i in range(n)):
            raise SingularMatrix("matrix is not invertible")
        return reduced.submatrix(range(n), range(n, 2 * n))

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        from .scalars import render_scalar

        body = "; ".join(
            " ".join(render_scalar(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix[{body}]"


def rref(matrix: Matrix) -> tuple[Matrix, int]:
    """Canonical reduced row echelon form and rank.

    Pivots are 1 with zeros above and below; zero rows sink to the bottom.
    """
    rows = matrix.row_list()
    n_rows, n_cols = matrix.rows, matrix.cols
    lead = 0
    for col in range(n_cols):
        pivot = next((r for r in range(lead, n_rows) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        piv_inv = inv(rows[lead][col])
        rows[lead] = [piv_inv * x for x in rows[lead]]
        for r in range(n_rows):
            if r != lead and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[lead])]
        lead += 1
        if lead == n_rows:
            break
    return Matrix(n_rows, n_cols, [e for row in rows for e in row]), lead


def rank(matrix: Matrix) -> int:
    return rref(matrix)[1]


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^ambient_dim, identified with its canonical RREF basis."""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [vector(v) for v in vectors]
        if not rows:
            return cls(ambient_dim, Matrix(0, ambient_dim, []))
        if any(len(r) != ambient_dim for r in rows):
            raise AmbientMismatch("spanning vector of wrong length")
        reduced, rk = rref(Matrix.from_rows(rows))
        return cls(ambient_dim, reduced.submatrix(range(rk), range(ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix(0, ambient_dim, []))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> list[Vector]:
        return [self.basis.row(i) for i in range(self.dim)]

    def contains(self, v: Sequence[Scalar]) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector of wrong length")
        residual = list(as_scalar(x) for x in v)
        for i in range(self.dim):
            row = self.basis.row(i)
            pivot = next(j for j in range(self.ambient_dim) if row[j])
            if residual[pivot]:
                c = residual[pivot]
                residual = [x - c * y for x, y in zip(residual, row)]
        return all(not x for x in residual)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis_vectors())

    def perp(self) -> "Subspace":
        """Annihilator: all c with <c, v> = 0 for every v in the subspace."""
        return kernel(self.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"


def kernel(matrix: Matrix) -> Subspace:
    """Exact null space {x : M x = 0} as a canonical Subspace of F^cols."""
    reduced, rk = rref(matrix)
    n = matrix.cols
    pivots = []
    col = 0
    for r in range(rk):
        while not reduced[r, col]:
            col += 1
        pivots.append(col)
        col += 1
    free = [j for j in range(n) if j not in pivots]
    basis_rows = []
    for f in free:
        v: list[Scalar] = [_ZERO] * n
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        basis_rows.append(v)
    return Subspace.span(basis_rows, n)


def image(matrix: Matrix) -> Subspace:
    """Exact column space as a canonical Subspace of F^rows."""
    return Subspace.span(
        [matrix.col(j) for j in range(matrix.cols)], matrix.rows
    )


def row_space(matrix: Matrix) -> Subspace:
    return Subspace.span([matrix.row(i) for i in range(matrix.rows)], matrix.cols)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of stacked dual constraints."""
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    constraints = a.perp().basis.stack(b.perp().basis)
    return kernel(constraints)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    return Subspace.span(a.basis_vectors() + b.basis_vectors(), a.ambient_dim)


def intersect_all(spaces: Sequence[Subspace], ambient_dim: int | None = None) -> Subspace:
    """Intersection of a family; the empty family gives the full space."""
    spaces = list(spaces)
    if not spaces:
        if ambient_dim is None:
            raise ValueError("empty intersection needs an explicit ambient dimension")
        return Subspace.full(ambient_dim)
    result = spaces[0]
    for s in spaces[1:]:
        result = intersect(result, s)
    return result


def solve_intertwiner(
    gens_left: Sequence[Matrix], gens_right: Sequence[Matrix]
) -> Subspace:
    """All X with X @ L_i == R_i @ X, as a subspace of the row-major vec(X) space.

    X is shaped (right dim) x (left dim); the result's dimension is
    dim Hom(left module, right module).
    """
    if not gens_left or not gens_right:
        raise EmptyGeneratorList("intertwiner system needs at least one generator pair")
    if len(gens_left) != len(gens_right):
        raise LengthMismatch("generator lists differ in length")
    n_l = gens_left[0].rows
    n_r = gens_right[0].rows
    for g in gens_left:
        if g.rows != g.cols or g.rows != n_l:
            raise LengthMismatch("left generators must be square and same-sized")
    for g in gens_right:
        if g.rows != g.cols or g.rows != n_r:
            raise LengthMismatch("right generators must be square and same-sized")

    unknowns = n_r * n_l

    def idx(a: int, c: int) -> int:
        return a * n_l + c

    equations = []
    for left, right in zip(gens_left, gens_right):
        for a in range(n_r):
            for b in range(n_l):
                row: list[Scalar] = [_ZERO] * unknowns
                # (X L)[a,b] - (R X)[a,b] = 0
                for c in range(n_l):
                    row[idx(a, c)] = row[idx(a, c)] + left[c, b]
                for c in range(n_r):
                    row[idx(c, b)] = row[idx(c, b)] - right[a, c]
                equations.append(row)
    return kernel(Matrix.from_rows(equations) if equations else Matrix(0, unknowns, []))


def unvec(flat: Sequence[Scalar], rows: int, cols: int) -> Matrix:
    """Inverse of the row-major vectorization used by solve_intertwiner."""
    return Matrix(rows, cols, list(flat))


def random_invertible(n: int, rng, bound: int = 5) -> Matrix:
    """Random invertible integer matrix with entries in [-bound, bound]."""
    while True:
        m = Matrix(n, n, [Fraction(rng.randint(-bound, bound)) for _ in range(n * n)])
        if m.det():
            return m


def charpoly(matrix: Matrix) -> list[Scalar]:
    """Monic characteristic polynomial coefficients [1, c1, ..., cn]
    via the Faddeev-LeVerrier recursion (valid in characteristic 0)."""
    if matrix.rows != matrix.cols:
        raise LengthMismatch("characteristic polynomial of non-square matrix")
    n = matrix.rows
    coeffs: list[Scalar] = [_ONE]
    mk = matrix
    for k in range(1, n + 1):
        ck = -(mk.trace() / Fraction(k))
        coeffs.append(ck)
        if k < n:
            mk = matrix @ (mk + Matrix.identity(n).scale(ck))
    return coeffs


def wedge_index_sets(n: int, d: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered d-subsets of range(n): coordinate order of the d-th exterior power."""
    return list(itertools.combinations(range(n), d))
