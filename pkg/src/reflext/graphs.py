"""Finite simple graphs, connectivity, subset moves, and connectivity-preserving deletion.

A move replaces a vertex r of a subset I by an outside neighbor t along the
edge {r, t}; move_sequence constructs an explicit chain of moves carrying one
subset to another inside a connected graph, and deletable_vertex picks a vertex
whose removal keeps the graph connected (eccentricity argument).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import HypothesisViolated, NotConnected, SizeMismatch, SubsetTooSmall


@dataclass(frozen=True)
class Graph:
    """Undirected graph on explicit integer vertex labels; no loops, no multi-edges."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]] = ()):
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        normalized = set()
        for e in edges:
            a, b = e
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if a not in vset or b not in vset:
                raise ValueError(f"edge {e} uses unknown vertex")
            normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def on_range(cls, k: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        return cls(range(1, k + 1), edges)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class MoveStep:
    """One move: vertex `removed` leaves the subset, neighbor `added` enters, along `edge`."""

    removed: int
    added: int

    @property
    def edge(self) -> tuple[int, int]:
        return (min(self.removed, self.added), max(self.removed, self.added))


def induced(graph: Graph, subset: Iterable[int]) -> Graph:
    """Subgraph spanned by the subset, keeping original labels."""
    sub = set(subset)
    if not sub <= set(graph.vertices):
        raise ValueError("subset contains unknown vertices")
    return Graph(sub, [e for e in graph.edges if e[0] in sub and e[1] in sub])


def is_connected(graph: Graph) -> bool:
    """BFS verdict; empty and one-vertex graphs count as connected."""
    if graph.vertex_count <= 1:
        return True
    adj = graph.adjacency()
    start = graph.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == graph.vertex_count


def shortest_path(graph: Graph, source: int, target: int) -> list[int] | None:
    """BFS shortest path (list of vertices, source first), or None if disconnected."""
    if source == target:
        return [source]
    adj = graph.adjacency()
    prev: dict[int, int] = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in prev:
                prev[w] = v
                if w == target:
                    path = [w]
                    while path[-1] != source:
                        path.append(prev[path[-1]])
                    return path[::-1]
                queue.append(w)
    return None


def distances_from(graph: Graph, source: int) -> dict[int, int]:
    adj = graph.adjacency()
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def apply_moves(subset: Iterable[int], steps: Sequence[MoveStep], graph: Graph) -> set[int]:
    """Replay a move sequence, validating every step; returns the final subset."""
    current = set(subset)
    for step in steps:
        if step.removed not in current:
            raise ValueError(f"step removes {step.removed} which is not in the subset")
        if step.added in current:
            raise ValueError(f"step adds {step.added} which is already in the subset")
        if not graph.has_edge(step.removed, step.added):
            raise ValueError(f"step uses missing edge {step.edge}")
        current.remove(step.removed)
        current.add(step.added)
    return current


def move_sequence(graph: Graph, start: Iterable[int], goal: Iterable[int]) -> list[MoveStep]:
    """A chain of legal moves carrying `start` to `goal` in a connected graph.

    Constructive induction on the overlap: pick r in start minus goal and
    t in goal minus start, walk a shortest path from r to t shifting the
    start-vertices sitting on it one slot toward t, then recurse.
    """
    current = set(start)
    target = set(goal)
    vset = set(graph.vertices)
    if not current <= vset or not target <= vset:
        raise ValueError("subsets must consist of graph vertices")
    if len(current) != len(target):
        raise SizeMismatch(f"|I| = {len(current)} but |J| = {len(target)}")
    if not is_connected(graph):
        raise NotConnected("move sequences need a connected graph")

    steps: list[MoveStep] = []
    while current != target:
        r = min(current - target)
        t = min(target - current)
        path = shortest_path(graph, r, t)
        assert path is not None
        # indices of current-subset vertices on the path (t itself is outside)
        inside = [i for i in range(len(path) - 1) if path[i] in current]
        # shift the deepest one to t, then each earlier one to its successor
        for pos, i in enumerate(reversed(inside)):
            stop = len(path) - 1 if pos == 0 else inside[len(inside) - pos]
            walker = path[i]
            for j in range(i + 1, stop + 1):
                steps.append(MoveStep(removed=walker, added=path[j]))
                current.remove(walker)
                current.add(path[j])
                walker = path[j]
    assert apply_moves(set(start), steps, graph) == target
    return steps


def deletable_vertex(graph: Graph, subset: Iterable[int]) -> int:
    """A vertex s of the subset whose deletion keeps the whole graph connected.

    Hypothesis (validated): every vertex outside the subset has either zero or
    at least two neighbors inside.  The choice follows the eccentricity
    argument: take s from a subset pair at maximal graph distance, smallest
    label first; the result is BFS-verified before returning.
    """
    sub = sorted(set(subset))
    if not set(sub) <= set(graph.vertices):
        raise ValueError("subset contains unknown vertices")
    if not is_connected(graph):
        raise NotConnected("deletion lemma needs a connected graph")
    if len(sub) < 2:
        raise SubsetTooSmall("deletion lemma needs |I| >= 2")
    inside = set(sub)
    for t in graph.vertices:
        if t in inside:
            continue
        deg_in = len(graph.neighbors(t) & inside)
        if deg_in == 1:
            raise HypothesisViolated(
                f"vertex {t} outside the subset has exactly one neighbor inside"
            )

    best: tuple[int, int, int] | None = None  # (-distance, s, s')
    for s in sub:
        dist = distances_from(graph, s)
        for s2 in sub:
            key = (-dist[s2], s, s2)
            if best is None or key < best:
                best = key
    assert best is not None
    chosen = best[1]
    remaining = [v for v in graph.vertices if v != chosen]
    if not is_connected(induced(graph, remaining)):
        raise AssertionError("eccentricity choice failed to preserve connectivity")
    return chosen
