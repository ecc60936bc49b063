"""Built-in example representations.

Crystallographic entries use Cartan-matrix reflection actions so the scalars
stay rational; the order-10 dihedral entry lives in Q(sqrt(5)).  The
two-parameter family infinite_dihedral(a, b) is the stress test for the
no-invariant-bilinear-form setting: the pipeline must succeed on it without
ever touching an inner product.

Expected verdicts recorded here are regenerated by the test suite against the
live pipeline on every run; they are bookkeeping, not ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import UnknownEntry
from .linalg import Matrix
from .repkit import Representation
from .scalars import QuadExt, as_scalar


@dataclass(frozen=True)
class Expected:
    theorem_applies: bool
    failure_reason: Optional[str] = None  # conclusion reason prefix when not applicable


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    representation: Representation
    expected: Expected
    notes: str = ""


def _rep(rows_list, labels=None) -> Representation:
    return Representation([Matrix.from_rows(rows) for rows in rows_list], labels)


def infinite_dihedral(a, b) -> Representation:
    """Two reflections of the infinite dihedral group:
    s1 = [[-1, a], [0, 1]], s2 = [[1, 0], [b, -1]]."""
    a = as_scalar(a)
    b = as_scalar(b)
    one = Fraction(1)
    return _rep(
        [
            [[-one, a], [0, one]],
            [[one, 0], [b, -one]],
        ]
    )


def _cartan_rep(cartan: list[list]) -> Representation:
    """Reflection representation from a generalized Cartan matrix:
    s_i sends e_j to e_j - c[i][j] * e_i."""
    k = len(cartan)
    gens = []
    for i in range(k):
        rows = []
        for r in range(k):
            row = []
            for j in range(k):
                base = Fraction(1) if r == j else Fraction(0)
                if r == i:
                    base = base - as_scalar(cartan[i][j])
                row.append(base)
            rows.append(row)
        gens.append(Matrix.from_rows(rows))
    return Representation(gens)


_GOLDEN = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)  # (1 + sqrt(5)) / 2


def _build_entries() -> dict[str, CatalogEntry]:
    entries: list[CatalogEntry] = []

    entries.append(
        CatalogEntry(
            "A2",
            _rep([[[-1, 1], [0, 1]], [[1, 0], [1, -1]]]),
            Expected(True),
            "rank-2 Cartan reflection representation, product of generators has order 3",
        )
    )
    entries.append(
        CatalogEntry(
            "A3",
            _cartan_rep([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]),
            Expected(True),
            "rank-3 Cartan reflection representation of the symmetric group S4",
        )
    )
    entries.append(
        CatalogEntry(
            "B2",
            _rep([[[-1, 2], [0, 1]], [[1, 0], [1, -1]]]),
            Expected(True),
            "product of generators has order 4",
        )
    )
    entries.append(
        CatalogEntry(
            "G2",
            _rep([[[-1, 1], [0, 1]], [[1, 0], [3, -1]]]),
            Expected(True),
            "product of generators has order 6",
        )
    )
    entries.append(
        CatalogEntry(
            "H2-5",
            _cartan_rep([[2, -_GOLDEN], [-_GOLDEN, 2]]),
            Expected(True),
            "order-10 dihedral reflection representation over Q(sqrt(5))",
        )
    )
    entries.append(
        CatalogEntry(
            "cond4-fail",
            _rep([[[-1, 1], [0, 1]], [[1, 0], [0, -1]]]),
            Expected(False, "condition4"),
            "second generator fixes alpha_1 while the first moves alpha_2",
        )
    )
    entries.append(
        CatalogEntry(
            "reducible-direct-sum",
            _rep(
                [
                    [[-1, 1, 0], [0, 1, 0], [0, 0, 1]],
                    [[1, 0, 0], [1, -1, 0], [0, 0, 1]],
                ]
            ),
            Expected(False, "condition3"),
            "A2 plus a trivial line; the third coordinate axis is invariant",
        )
    )
    # A2 with a redundant third generator s1 s2 s1^{-1}; exercises the
    # connected-basis-subset extraction (three vectors in dimension two).
    s1 = Matrix.from_rows([[-1, 1], [0, 1]])
    s2 = Matrix.from_rows([[1, 0], [1, -1]])
    entries.append(
        CatalogEntry(
            "A2-redundant",
            Representation([s1, s2, s1 @ s2 @ s1.inverse()]),
            Expected(True),
            "three generators in dimension two; basis subset must drop one",
        )
    )
    for a in range(4):
        for b in range(4):
            if a == 0 or b == 0:
                expected = (
                    Expected(False, "condition3")
                    if a == 0 and b == 0
                    else Expected(False, "condition4")
                )
            elif a * b == 4:
                # affine-type degenerate member: alpha_1 + alpha_2 is fixed by
                # both generators, so the plane is reducible (indecomposable)
                expected = Expected(False, "condition3")
            else:
                expected = Expected(True)
            entries.append(
                CatalogEntry(
                    f"dihedral-{a}-{b}",
                    infinite_dihedral(a, b),
                    expected,
                    "member of the two-parameter infinite dihedral family",
                )
            )
    return {e.name: e for e in entries}


_ENTRIES = _build_entries()


def list_entries() -> list[str]:
    return list(_ENTRIES)


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"no catalog entry named {name!r}") from None
