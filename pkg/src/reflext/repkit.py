"""Representations given by generator matrices: exterior/dual/determinant-twist
constructions, hom spaces, the wedge-pairing duality, and simplicity certification.

Groups are never enumerated; intertwining with the generators is equivalent to
intertwining with every word, which keeps infinite groups (e.g. infinite
dihedral) in scope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .errors import BadDegree, EmptyGeneratorList, LengthMismatch, SingularMatrix
from .exterior import compound
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    charpoly,
    kernel,
    solve_intertwiner,
    subspace_sum,
    unvec,
    wedge_index_sets,
)
from .polys import roots_in_field
from .scalars import Scalar, merge_tags


@dataclass(frozen=True)
class Representation:
    """Dimension plus an ordered list of labeled invertible generator matrices."""

    dim: int
    generators: tuple[Matrix, ...]
    labels: tuple[str, ...]

    def __init__(self, generators: Sequence[Matrix], labels: Sequence[str] | None = None):
        gens = tuple(generators)
        if not gens:
            raise EmptyGeneratorList("a representation needs at least one generator")
        n = gens[0].rows
        for g in gens:
            if g.rows != g.cols or g.rows != n:
                raise LengthMismatch("generators must be square matrices of one size")
            if not g.det():
                raise SingularMatrix("generators must be invertible")
        if labels is None:
            labels = tuple(f"s{i + 1}" for i in range(len(gens)))
        else:
            labels = tuple(labels)
            if len(labels) != len(gens):
                raise LengthMismatch("one label per generator")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "labels", labels)

    def field(self) -> int | None:
        tag = None
        for g in self.generators:
            tag = merge_tags(tag, g.field())
        return tag

    def conjugate(self, p: Matrix) -> "Representation":
        p_inv = p.inverse()
        return Representation([p @ g @ p_inv for g in self.generators], self.labels)

    def permute(self, order: Sequence[int]) -> "Representation":
        return Representation(
            [self.generators[i] for i in order], [self.labels[i] for i in order]
        )


def exterior_rep(rep: Representation, d: int) -> Representation:
    """Generators replaced by their d-th compounds; dimension C(n, d)."""
    if d < 0 or d > rep.dim:
        raise BadDegree(f"degree {d} outside 0..{rep.dim}")
    return Representation([compound(g, d) for g in rep.generators], rep.labels)


def dual_rep(rep: Representation) -> Representation:
    """Inverse-transpose generators."""
    return Representation([g.inverse().transpose() for g in rep.generators], rep.labels)


def det_twist(rep: Representation, det_source: Representation) -> Representation:
    """Multiply each generator by the determinant of the corresponding det_source generator."""
    if len(rep.generators) != len(det_source.generators):
        raise LengthMismatch("det twist needs matching generator lists")
    return Representation(
        [g.scale(h.det()) for g, h in zip(rep.generators, det_source.generators)],
        rep.labels,
    )


def hom_space(left: Representation, right: Representation) -> Subspace:
    if len(left.generators) != len(right.generators):
        raise LengthMismatch("hom space needs matching generator lists")
    return solve_intertwiner(list(left.generators), list(right.generators))


def hom_dim(left: Representation, right: Representation) -> int:
    return hom_space(left, right).dim


def _complement_sign(k_set: tuple[int, ...], j_set: tuple[int, ...]) -> Scalar:
    """Sign of e_K ^ e_J relative to e_0 ^ ... ^ e_{n-1} for complementary K, J."""
    inversions = sum(1 for a in k_set for b in j_set if a > b)
    return Fraction(-1) ** inversions


def duality_intertwiner(rep: Representation, d: int) -> Matrix:
    """Matrix of u -> (u ^ .) pairing the (n-d)-th power against the d-th.

    Rows are indexed by d-subsets (dual coordinates), columns by (n-d)-subsets;
    entry (J, K) is the coefficient of e_K ^ e_J on the top wedge.  Satisfies
    phi @ compound(g, n-d) == det(g) * compound(g, d)^{-T} @ phi exactly for
    every generator g.
    """
    n = rep.dim
    if d < 0 or d > n:
        raise BadDegree(f"degree {d} outside 0..{n}")
    rows = wedge_index_sets(n, d)
    cols = wedge_index_sets(n, n - d)
    entries: list[Scalar] = []
    for j_set in rows:
        j_elems = set(j_set)
        for k_set in cols:
            if j_elems & set(k_set):
                entries.append(Fraction(0))
            else:
                entries.append(_complement_sign(k_set, j_set))
    return Matrix(comb(n, d), comb(n, n - d), entries)


def duality_holds(rep: Representation, d: int) -> bool:
    """Exact generator-by-generator check of the duality intertwining identity."""
    phi = duality_intertwiner(rep, d)
    for g in rep.generators:
        left = phi @ compound(g, rep.dim - d)
        right = compound(g, d).inverse().transpose().scale(g.det()) @ phi
        if left != right:
            return False
    return True


@dataclass(frozen=True)
class SimplicityVerdict:
    """Outcome of simplicity certification.

    status 'Simple' or 'Reducible' (with a generator-invariant witness) or
    'Inconclusive' when the search space is exhausted without a certificate.
    """

    status: str  # Simple | Reducible | Inconclusive
    commutant_dim: int
    witness: Optional[Subspace] = None
    semisimplicity_premise: str = "None"  # Assumed | FromSimpleBase | None
    method: str = ""

    @property
    def is_simple(self) -> bool:
        return self.status == "Simple"


def spin(rep: Representation, seeds: Sequence[Vector], transpose: bool = False) -> Subspace:
    """Smallest generator-invariant subspace containing the seeds.

    With transpose=True the generators act by their transposes (dual module up
    to inverse, which spans the same invariant subspaces).
    """
    n = rep.dim
    gens = [g.transpose() if transpose else g for g in rep.generators]
    space = Subspace.span(seeds, n)
    queue = list(space.basis_vectors())
    while queue:
        v = queue.pop()
        for g in gens:
            w = g.apply(v)
            if not space.contains(w):
                space = subspace_sum(space, Subspace.span([w], n))
                queue.append(w)
    return space


def _invariant(rep: Representation, space: Subspace) -> bool:
    return all(
        space.contains(g.apply(v)) for g in rep.generators for v in space.basis_vectors()
    )


def _witness_from_commutant(rep: Representation, commutant: Subspace) -> Optional[Subspace]:
    """Proper invariant subspace from a non-scalar commutant element, if a field
    eigenvalue exists (kernels of commutant elements are submodules)."""
    n = rep.dim
    field_m = rep.field()
    candidates = [unvec(v, n, n) for v in commutant.basis_vectors()]
    candidates += [a + b for a, b in itertools.combinations(candidates, 2)]
    for x in candidates:
        # skip scalar multiples of the identity
        diag = x[0, 0]
        if x == Matrix.identity(n).scale(diag):
            continue
        for mu in roots_in_field(charpoly(x), field_m):
            ker = kernel(x - Matrix.identity(n).scale(mu))
            if 0 < ker.dim < n:
                assert _invariant(rep, ker)
                return ker
    return None


def _word_matrices(rep: Representation, max_length: int) -> list[Matrix]:
    """Distinct matrices of generator words up to the given length, short words first."""
    seen = {Matrix.identity(rep.dim)}
    frontier = [Matrix.identity(rep.dim)]
    out: list[Matrix] = []
    for _ in range(max_length):
        new_frontier = []
        for w in frontier:
            for g in rep.generators:
                m = w @ g
                if m not in seen:
                    seen.add(m)
                    new_frontier.append(m)
                    out.append(m)
        frontier = new_frontier
    return out


def simplicity(
    rep: Representation,
    semisimple_premise: str | None = None,
    word_length: int = 4,
) -> SimplicityVerdict:
    """Certify simplicity or produce a reducibility witness.

    With a semisimplicity premise ('Assumed' or 'FromSimpleBase'),
    commutant dimension 1 is a complete certificate of simplicity; a larger
    commutant triggers a witness search through kernels of non-scalar commutant
    elements (Inconclusive if none has an eigenvalue in the field).

    Without the premise, runs a spin-up search: standard basis seeds, kernels
    of (word - mu*I) for words up to word_length with mu extracted from the
    characteristic polynomial, and their transposed (dual) counterparts.  A
    nullity-one kernel whose primal and dual spin-ups both fill the space is a
    rigorous irreducibility certificate; otherwise Simple is only reported
    after the search is exhausted with commutant dimension 1.
    """
    n = rep.dim
    commutant = hom_space(rep, rep)
    cdim = commutant.dim

    if semisimple_premise is not None:
        if cdim == 1:
            return SimplicityVerdict(
                "Simple", cdim, semisimplicity_premise=semisimple_premise,
                method="commutant",
            )
        witness = _witness_from_commutant(rep, commutant)
        if witness is not None:
            return SimplicityVerdict(
                "Reducible", cdim, witness=witness,
                semisimplicity_premise=semisimple_premise, method="commutant-kernel",
            )
        return SimplicityVerdict(
            "Inconclusive", cdim, semisimplicity_premise=semisimple_premise,
            method="commutant-kernel",
        )

    def reducible(witness: Subspace, method: str) -> SimplicityVerdict:
        assert 0 < witness.dim < n and _invariant(rep, witness)
        return SimplicityVerdict("Reducible", cdim, witness=witness, method=method)

    if n == 1:
        return SimplicityVerdict("Simple", cdim, method="dimension-one")

    # commutant kernels are submodules regardless of any premise
    if cdim > 1:
        witness = _witness_from_commutant(rep, commutant)
        if witness is not None:
            return reducible(witness, "commutant-kernel")

    basis_seeds = [
        tuple(Fraction(1) if i == j else Fraction(0) for i in range(n)) for j in range(n)
    ]
    for seed in basis_seeds:
        grown = spin(rep, [seed])
        if grown.dim < n:
            return reducible(grown, "spin-basis")

    field_m = rep.field()
    for word in _word_matrices(rep, word_length):
        for mu in roots_in_field(charpoly(word), field_m):
            shifted = word - Matrix.identity(n).scale(mu)
            ker = kernel(shifted)
            if ker.dim == n:
                continue  # word is scalar
            for v in ker.basis_vectors():
                grown = spin(rep, [v])
                if grown.dim < n:
                    return reducible(grown, "spin-eigen")
            if ker.dim == 1:
                dual_ker = kernel(shifted.transpose())
                dual_grown = spin(rep, dual_ker.basis_vectors(), transpose=True)
                if dual_grown.dim < n:
                    return reducible(dual_grown.perp(), "dual-spin-eigen")
                # nullity-one kernel, primal and dual spin both fill the space:
                # no proper submodule can exist (Norton's criterion)
                return SimplicityVerdict("Simple", cdim, method="norton")
    for seed in basis_seeds:
        dual_grown = spin(rep, [seed], transpose=True)
        if dual_grown.dim < n:
            return reducible(dual_grown.perp(), "dual-spin-basis")
    if cdim == 1:
        return SimplicityVerdict("Simple", cdim, method="search-exhausted")
    return SimplicityVerdict("Inconclusive", cdim, method="search-exhausted")
