"""End-to-end certification pipeline.

Given generators acting by generalized reflections, checks the hypotheses
(reflection recognition, irreducibility of the base space, the symmetry
condition on fixed reflection vectors), builds the non-fixing graph, extracts a
connected basis subset, and certifies for every degree d that the d-th
exterior power has scalar endomorphism ring, plus pairwise non-isomorphy.
All failures are structured report values carrying re-checkable witnesses.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .errors import (
    AlphasNotABasis,
    BadDegree,
    NotConnected,
    NotDiagonalizable,
    NotRankOne,
    NotSpanning,
    SingularMatrix,
)
from .exterior import minus_intersection, wedge
from .graphs import Graph, deletable_vertex, induced, is_connected, move_sequence
from .linalg import Matrix, Subspace, Vector, kernel, rank
from .reflections import ReflectionData, fixes_vector, recognize_reflection
from .repkit import (
    Representation,
    SimplicityVerdict,
    exterior_rep,
    hom_dim,
    simplicity,
)

CLAIM4_EXHAUSTIVE_LIMIT = 100


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of checking the four hypotheses on the input generators."""

    reflections: tuple[Optional[ReflectionData], ...]
    condition1_failures: tuple[tuple[int, str], ...]
    generation_assumed: bool
    v_simple: Optional[SimplicityVerdict]
    condition4_evaluated: bool
    condition4_violations: tuple[tuple[int, int], ...]
    graph: Optional[Graph]
    remarks: tuple[str, ...] = ()

    @property
    def condition1_ok(self) -> bool:
        return not self.condition1_failures

    @property
    def condition4_holds(self) -> bool:
        return self.condition4_evaluated and not self.condition4_violations

    def alphas(self) -> list[Vector]:
        return [r.alpha for r in self.reflections if r is not None]


@dataclass(frozen=True)
class TraceStep:
    removed: int
    added: int
    before: tuple[int, ...]
    after: tuple[int, ...]

    @property
    def edge(self) -> tuple[int, int]:
        return (min(self.removed, self.added), max(self.removed, self.added))


@dataclass(frozen=True)
class TraceSequence:
    target: tuple[int, ...]
    steps: tuple[TraceStep, ...]


@dataclass(frozen=True)
class ClaimFiveTrace:
    """Move-sequence demonstration that the wedge coefficients are constant.

    Each step carries two d-subsets differing by one graph edge; the scalar
    attached to the first wedge therefore equals the scalar attached to the
    second, and the sequences reach every d-subset from the base one.
    """

    degree: int
    base: tuple[int, ...]
    sequences: tuple[TraceSequence, ...]


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    space_dim: int
    commutant_dim: int
    verdict: str
    claim4_checked: int
    claim4_exhaustive: bool
    claim4_ok: bool
    claim5_trace: Optional[ClaimFiveTrace] = None
    witness: Optional[Subspace] = None


@dataclass(frozen=True)
class Conclusion:
    status: str  # TheoremVerified | HypothesisFailed | CertificationFailed
    reason: Optional[str] = None
    witness_subspace: Optional[Subspace] = None
    witness_pairs: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class TheoremReport:
    hypothesis: HypothesisReport
    claim1_connected: Optional[bool] = None
    claim2_spanning: Optional[bool] = None
    n_le_k: Optional[bool] = None
    claim3_subset: Optional[tuple[int, ...]] = None
    per_degree: tuple[DegreeReport, ...] = ()
    pairwise_hom: Optional[tuple[tuple[int, ...], ...]] = None
    dim_filter_ok: Optional[bool] = None
    conclusion: Conclusion = field(default_factory=lambda: Conclusion("CertificationFailed"))
    classical_mode: bool = False

    @property
    def verified(self) -> bool:
        return self.conclusion.status == "TheoremVerified"


def _is_involution(g: Matrix) -> bool:
    return g @ g == Matrix.identity(g.rows)


def check_hypotheses(rep: Representation) -> HypothesisReport:
    """Run conditions 1-4; failures are values, never exceptions.

    Condition 2 (the group is generated by the inputs) is definitional for
    this artifact and recorded as assumed.
    """
    refls: list[Optional[ReflectionData]] = []
    failures: list[tuple[int, str]] = []
    for i, g in enumerate(rep.generators, start=1):
        try:
            refls.append(recognize_reflection(g))
        except (NotRankOne, NotDiagonalizable, SingularMatrix) as exc:
            refls.append(None)
            failures.append((i, f"{type(exc).__name__}: {exc}"))
    if failures:
        return HypothesisReport(
            reflections=tuple(refls),
            condition1_failures=tuple(failures),
            generation_assumed=True,
            v_simple=None,
            condition4_evaluated=False,
            condition4_violations=(),
            graph=None,
        )

    k = len(rep.generators)
    violations: list[tuple[int, int]] = []
    edges: list[tuple[int, int]] = []
    for i, j in itertools.combinations(range(1, k + 1), 2):
        moves_ij = not fixes_vector(refls[i - 1], refls[j - 1].alpha)
        moves_ji = not fixes_vector(refls[j - 1], refls[i - 1].alpha)
        if moves_ij != moves_ji:
            violations.append((i, j) if moves_ij else (j, i))
        elif moves_ij:
            edges.append((i, j))

    remarks: list[str] = []
    for i, j in violations:
        if _is_involution(rep.generators[i - 1]) and _is_involution(rep.generators[j - 1]):
            remarks.append(
                f"generators {i} and {j} are involutions with asymmetric fixing; "
                "the order of their product is then forced infinite (not machine-checked)"
            )

    graph = Graph.on_range(k, edges) if not violations else None
    v_simple = simplicity(rep)
    return HypothesisReport(
        reflections=tuple(refls),
        condition1_failures=(),
        generation_assumed=True,
        v_simple=v_simple,
        condition4_evaluated=True,
        condition4_violations=tuple(violations),
        graph=graph,
        remarks=tuple(remarks),
    )


def connected_basis_subset(alphas: Sequence[Vector], graph: Graph) -> tuple[int, ...]:
    """Indices I with {alpha_i : i in I} a basis and the induced subgraph connected.

    Constructive: while the current vectors are dependent, pick a dependency
    with all-nonzero coefficients on its support, apply the deletion lemma to
    the support inside the current subgraph, and drop the returned vertex.
    """
    n = len(alphas[0])
    if rank(Matrix.from_rows([list(a) for a in alphas])) != n:
        raise NotSpanning("reflection vectors do not span the space")
    if not is_connected(graph):
        raise NotConnected("non-fixing graph must be connected")
    if len(alphas) != graph.vertex_count:
        raise ValueError("one vertex per vector expected")

    current = list(graph.vertices)
    while True:
        stacked = Matrix.from_rows([list(alphas[i - 1]) for i in current])
        if rank(stacked) == len(current):
            break
        dependency = _full_support_dependency(stacked)
        support = [current[pos] for pos, c in enumerate(dependency) if c]
        subgraph = induced(graph, current)
        drop = deletable_vertex(subgraph, support)
        current.remove(drop)
    return tuple(current)


def _full_support_dependency(stacked: Matrix) -> Vector:
    """A nonzero kernel vector of the transposed stack: coefficients of a dependency."""
    dep_space = kernel(stacked.transpose())
    assert dep_space.dim > 0
    return dep_space.basis.row(0)


def _component_of(graph: Graph, start: int) -> set[int]:
    adj = graph.adjacency()
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _claim4_check(
    refls: Sequence[ReflectionData],
    subset: Sequence[int],
    d: int,
    n: int,
    rng: random.Random,
) -> tuple[int, bool, bool]:
    """Sample (or enumerate) d-subsets of the certified index set and verify that
    the intersection of their minus-eigenspaces is the line on the matching wedge."""
    if d == 0:
        return 0, True, True
    all_subsets = list(itertools.combinations(sorted(subset), d))
    exhaustive = len(all_subsets) <= CLAIM4_EXHAUSTIVE_LIMIT
    chosen = all_subsets if exhaustive else rng.sample(all_subsets, CLAIM4_EXHAUSTIVE_LIMIT)
    ambient = comb(n, d)
    for t_set in chosen:
        picked = [refls[i - 1] for i in t_set]
        space = minus_intersection(picked, d)
        expected = Subspace.span([wedge([r.alpha for r in picked])], ambient)
        if space.dim != 1 or space != expected:
            return len(chosen), exhaustive, False
    return len(chosen), exhaustive, True


def _claim5_trace(graph: Graph, subset: Sequence[int], d: int) -> ClaimFiveTrace:
    """Cover every d-subset of the certified set by explicit move sequences from a base."""
    members = sorted(subset)
    sub_graph = induced(graph, members)
    subsets = list(itertools.combinations(members, d))
    base = subsets[0]
    sequences: list[TraceSequence] = []
    for target in subsets[1:]:
        raw = move_sequence(sub_graph, base, target)
        cur = set(base)
        steps: list[TraceStep] = []
        for st in raw:
            before = tuple(sorted(cur))
            cur.remove(st.removed)
            cur.add(st.added)
            steps.append(TraceStep(st.removed, st.added, before, tuple(sorted(cur))))
        sequences.append(TraceSequence(target=target, steps=tuple(steps)))
    return ClaimFiveTrace(degree=d, base=base, sequences=tuple(sequences))


def _hypothesis_failure(hyp: HypothesisReport, classical: bool) -> TheoremReport:
    if not hyp.condition1_ok:
        indices = ", ".join(f"{i} ({why})" for i, why in hyp.condition1_failures)
        return TheoremReport(
            hypothesis=hyp,
            conclusion=Conclusion("HypothesisFailed", f"condition1: generator(s) {indices}"),
            classical_mode=classical,
        )
    if not hyp.condition4_holds:
        return TheoremReport(
            hypothesis=hyp,
            conclusion=Conclusion(
                "HypothesisFailed",
                "condition4: asymmetric fixing of reflection vectors",
                witness_pairs=hyp.condition4_violations,
            ),
            classical_mode=classical,
        )
    raise AssertionError("not a hypothesis failure")


def verify_theorem(
    rep: Representation,
    *,
    trace: bool = False,
    degrees: Sequence[int] | None = None,
    _preset_subset: tuple[int, ...] | None = None,
    _classical: bool = False,
    _hyp: HypothesisReport | None = None,
) -> TheoremReport:
    """Full pipeline; every failure mode is a structured conclusion, never an
    exception (malformed requests like out-of-range degrees still raise)."""
    n = rep.dim
    k = len(rep.generators)
    if degrees is not None:
        for d in degrees:
            if d < 0 or d > n:
                raise BadDegree(f"degree {d} outside 0..{n}")
    hyp = _hyp if _hyp is not None else check_hypotheses(rep)
    if not hyp.condition1_ok or not hyp.condition4_holds:
        return _hypothesis_failure(hyp, _classical)

    assert hyp.v_simple is not None and hyp.graph is not None
    if hyp.v_simple.status == "Reducible":
        return TheoremReport(
            hypothesis=hyp,
            conclusion=Conclusion(
                "HypothesisFailed",
                "condition3: base representation is reducible",
                witness_subspace=hyp.v_simple.witness,
            ),
            classical_mode=_classical,
        )

    refls = [r for r in hyp.reflections if r is not None]
    alphas = [r.alpha for r in refls]

    claim1 = is_connected(hyp.graph)
    if not claim1:
        component = sorted(_component_of(hyp.graph, hyp.graph.vertices[0]))
        witness = Subspace.span([alphas[i - 1] for i in component], n)
        return TheoremReport(
            hypothesis=hyp,
            claim1_connected=False,
            conclusion=Conclusion(
                "HypothesisFailed",
                "condition3: non-fixing graph is disconnected, the reflection vectors "
                f"of component {component} span a proper invariant subspace",
                witness_subspace=witness,
            ),
            classical_mode=_classical,
        )

    if hyp.v_simple.status != "Simple":
        return TheoremReport(
            hypothesis=hyp,
            claim1_connected=claim1,
            conclusion=Conclusion(
                "HypothesisFailed",
                "condition3: irreducibility of the base representation could not be certified",
            ),
            classical_mode=_classical,
        )

    claim2 = rank(Matrix.from_rows([list(a) for a in alphas])) == n
    if not claim2:
        witness = Subspace.span(alphas, n)
        return TheoremReport(
            hypothesis=hyp,
            claim1_connected=claim1,
            claim2_spanning=False,
            conclusion=Conclusion(
                "HypothesisFailed",
                "condition3: reflection vectors span a proper invariant subspace",
                witness_subspace=witness,
            ),
            classical_mode=_classical,
        )

    if _preset_subset is not None:
        subset = _preset_subset
    else:
        subset = connected_basis_subset(alphas, hyp.graph)

    rng = random.Random(20240814)
    degree_list = sorted(set(degrees)) if degrees is not None else list(range(n + 1))
    ext_cache = {d: exterior_rep(rep, d) for d in range(n + 1)}
    per_degree: list[DegreeReport] = []
    failures: list[str] = []
    failure_witness: Optional[Subspace] = None
    for d in degree_list:
        ext = ext_cache[d]
        verdict = simplicity(ext, semisimple_premise="FromSimpleBase")
        checked, exhaustive, ok = _claim4_check(refls, subset, d, n, rng)
        claim5 = _claim5_trace(hyp.graph, subset, d) if trace else None
        per_degree.append(
            DegreeReport(
                degree=d,
                space_dim=comb(n, d),
                commutant_dim=verdict.commutant_dim,
                verdict=verdict.status,
                claim4_checked=checked,
                claim4_exhaustive=exhaustive,
                claim4_ok=ok,
                claim5_trace=claim5,
                witness=verdict.witness,
            )
        )
        if verdict.status != "Simple":
            failures.append(
                f"exterior power d={d}: commutant dimension {verdict.commutant_dim}"
            )
            failure_witness = failure_witness or verdict.witness
        if not ok:
            failures.append(f"claim4 failed at d={d}")

    size = n + 1
    hom_matrix = [[0] * size for _ in range(size)]
    for d in range(size):
        hom_matrix[d][d] = hom_dim(ext_cache[d], ext_cache[d])
    dim_filter_ok = True
    for a, b in itertools.combinations(range(size), 2):
        if comb(n, a) == comb(n, b) and comb(n - 1, a) == comb(n - 1, b):
            dim_filter_ok = False  # would only happen for a == b; defensive
        value = hom_dim(ext_cache[a], ext_cache[b])
        hom_matrix[a][b] = hom_matrix[b][a] = value
        if value != 0:
            failures.append(f"hom space between degrees {a} and {b} has dimension {value}")

    if failures:
        conclusion = Conclusion(
            "CertificationFailed", "; ".join(failures), witness_subspace=failure_witness
        )
    else:
        conclusion = Conclusion("TheoremVerified")
    return TheoremReport(
        hypothesis=hyp,
        claim1_connected=claim1,
        claim2_spanning=True,
        n_le_k=n <= k,
        claim3_subset=subset,
        per_degree=tuple(per_degree),
        pairwise_hom=tuple(tuple(row) for row in hom_matrix),
        dim_filter_ok=dim_filter_ok,
        conclusion=conclusion,
        classical_mode=_classical,
    )


def steinberg_mode(
    rep: Representation, *, trace: bool = False, degrees: Sequence[int] | None = None
) -> TheoremReport:
    """Classical setting: reflections along a basis; the connected basis subset is all of S."""
    n = rep.dim
    k = len(rep.generators)
    if k != n:
        raise AlphasNotABasis(f"classical mode needs k = n, got k = {k}, n = {n}")
    hyp = check_hypotheses(rep)
    if not hyp.condition1_ok:
        return _hypothesis_failure(hyp, True)
    alphas = hyp.alphas()
    if rank(Matrix.from_rows([list(a) for a in alphas])) != n:
        raise AlphasNotABasis("reflection vectors do not form a basis")
    return verify_theorem(
        rep,
        trace=trace,
        degrees=degrees,
        _preset_subset=tuple(range(1, n + 1)),
        _classical=True,
        _hyp=hyp,
    )
