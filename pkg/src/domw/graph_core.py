"""Core graph types and the predicates every solver and oracle is judged by.

A function f: V -> N w-dominates a vertex u when f summed over the closed
neighborhood N(u) reaches the weight w(u).  A set is dispersed when all
pairwise distances are at least 3 (vertices in different components count).
A certificate couples a w-dominating function with a dispersed set of equal
total value; by weak duality it proves both are optimal.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DisconnectedSubtree,
    EmptySubtree,
    UnknownVertex,
)

Vertex = int


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph on vertices 0..n-1 with positive integer weights."""

    weights: tuple[int, ...]  # weights[v] >= 1
    adjacency: tuple[frozenset[Vertex], ...]  # open neighborhoods, symmetric

    def __post_init__(self):
        n = len(self.weights)
        if len(self.adjacency) != n:
            raise ValueError("adjacency and weights disagree on vertex count")
        for v, w in enumerate(self.weights):
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of vertex {v} must be a positive integer")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not 0 <= u < n:
                    raise UnknownVertex(f"vertex {u} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, weights: Sequence[int], edges: Iterable[tuple[Vertex, Vertex]]) -> "WeightedGraph":
        n = len(weights)
        nbrs: list[set[Vertex]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertex(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(weights), tuple(frozenset(s) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class DominationFunction:
    """A function V -> N stored by its nonzero values."""

    values: dict[Vertex, int] = field(default_factory=dict)

    def __post_init__(self):
        for v, x in self.values.items():
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"value at vertex {v} must be a nonnegative integer")
        # canonical form: drop zeros so equality is value equality
        object.__setattr__(self, "values", {v: x for v, x in self.values.items() if x > 0})

    def __call__(self, v: Vertex) -> int:
        return self.values.get(v, 0)

    @property
    def size(self) -> int:
        return sum(self.values.values())

    @property
    def support(self) -> frozenset[Vertex]:
        return frozenset(self.values)

    def items(self) -> Iterator[tuple[Vertex, int]]:
        return iter(sorted(self.values.items()))

    @classmethod
    def zero(cls) -> "DominationFunction":
        return cls({})


@dataclass(frozen=True)
class Certificate:
    """A w-dominating function and a dispersed set of matching total value."""

    dominating: DominationFunction
    dispersed: frozenset[Vertex]
    value: int


NOT_DOMINATING = "NotDominating"
NOT_DISPERSED = "NotDispersed"
VALUE_MISMATCH = "ValueMismatch"


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of verify_certificate; falsy when the certificate fails."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class HostTree:
    """A tree on vertices 0..n-1, the host for subtree intersection graphs."""

    n: int
    edges: tuple[tuple[Vertex, Vertex], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("host tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise ValueError("a tree on n vertices has exactly n-1 edges")
        seen: set[frozenset[Vertex]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise UnknownVertex(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        # edge count plus connectivity makes it a tree
        if self.n > 1:
            adj = self.adjacency()
            reached = {0}
            queue = deque([0])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in reached:
                        reached.add(y)
                        queue.append(y)
            if len(reached) != self.n:
                raise ValueError("host tree is not connected")

    def adjacency(self) -> list[set[Vertex]]:
        adj: list[set[Vertex]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def _check_vertex(g: WeightedGraph, v: Vertex) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise UnknownVertex(f"vertex {v} out of range 0..{g.n - 1}")


def closed_neighborhood(g: WeightedGraph, v: Vertex) -> frozenset[Vertex]:
    """N(v): the vertex itself together with its neighbors."""
    _check_vertex(g, v)
    return g.adjacency[v] | {v}


def distance(g: WeightedGraph, u: Vertex, v: Vertex) -> int | float:
    """Number of edges on a shortest u-v path, math.inf when disconnected."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return math.inf


def is_dispersed(g: WeightedGraph, s: Iterable[Vertex]) -> bool:
    """True when all pairwise distances in s are at least 3.

    Vertices in different components are infinitely far apart and qualify.
    """
    members = sorted(set(s))
    for v in members:
        _check_vertex(g, v)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if distance(g, u, v) < 3:
                return False
    return True


def set_sum(f: DominationFunction, a: Iterable[Vertex]) -> int:
    """f summed over a set of vertices; vertices outside the support add 0."""
    return sum(f(v) for v in set(a))


def is_w_dominating(g: WeightedGraph, f: DominationFunction, u: Iterable[Vertex] | None = None) -> bool:
    """Does f satisfy f[N(v)] >= w(v) for every v in u (default: all of V)?"""
    targets = g.vertices if u is None else sorted(set(u))
    for v in targets:
        _check_vertex(g, v)
        if set_sum(f, closed_neighborhood(g, v)) < g.weights[v]:
            return False
    return True


def verify_certificate(g: WeightedGraph, cert: Certificate) -> CertificateCheck:
    """Re-check a certificate from scratch; never trusts the producer."""
    for v in cert.dominating.support:
        _check_vertex(g, v)
    if not is_w_dominating(g, cert.dominating):
        return CertificateCheck(False, NOT_DOMINATING)
    if not is_dispersed(g, cert.dispersed):
        return CertificateCheck(False, NOT_DISPERSED)
    weight_of_dispersed = sum(g.weights[v] for v in cert.dispersed)
    if not (cert.dominating.size == cert.value == weight_of_dispersed):
        return CertificateCheck(False, VALUE_MISMATCH)
    return CertificateCheck(True)


def build_intersection_graph(
    host: HostTree,
    subtrees: Sequence[Iterable[Vertex]],
    weights: Sequence[int],
) -> WeightedGraph:
    """Intersection graph of connected vertex sets of the host tree.

    One graph vertex per subtree, in input order; two are adjacent when the
    subtrees share a host vertex.
    """
    if len(subtrees) != len(weights):
        raise ValueError("one weight per subtree is required")
    adj = host.adjacency()
    sets: list[frozenset[Vertex]] = []
    for i, raw in enumerate(subtrees):
        s = frozenset(raw)
        if not s:
            raise EmptySubtree(f"subtree {i} is empty")
        for v in s:
            if not 0 <= v < host.n:
                raise UnknownVertex(f"subtree {i} uses vertex {v} outside the host tree")
        start = next(iter(s))
        reached = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in s and y not in reached:
                    reached.add(y)
                    queue.append(y)
        if reached != s:
            raise DisconnectedSubtree(f"subtree {i} is not connected in the host tree")
        sets.append(s)
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if sets[i] & sets[j]
    ]
    return WeightedGraph.from_edges(list(weights), edges)
