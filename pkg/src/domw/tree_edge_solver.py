"""Exact weighted domination and dispersion on line graphs of tree edge sets.

The instance is a subset F of the edges of a host tree; the graph to dominate
is the intersection graph of F (edges are adjacent when they share a tree
vertex).  Dropping the unused tree edges splits the host into components on
which F is the full edge set, so each component is processed as a rooted tree:
a bottom-up pass charges every edge with the worst deficit among its sons, a
root adjustment closes the remaining gap, and a top-down peeling collects a
dispersed set of edges whose weight matches the function size exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import EmptyEdgeSet, TheoremViolation, UnknownVertex
from .graph_core import (
    Certificate,
    DominationFunction,
    HostTree,
    WeightedGraph,
    build_intersection_graph,
    verify_certificate,
)

# an F entry: (endpoint, endpoint, weight); its position is the edge id
FEdge = tuple[int, int, int]


@dataclass(frozen=True)
class RootedEdgeTree:
    """One component of the selected edges, oriented away from its root."""

    root: int
    vertices: frozenset[int]
    edge_ids: tuple[int, ...]  # ids into the original F sequence
    ends: Mapping[int, tuple[int, int]]  # edge id -> (parent side, child side)
    weight: Mapping[int, int]
    out_edges: Mapping[int, tuple[int, ...]]  # A(v), sorted by edge id
    in_edge: Mapping[int, int | None]  # edge ending at v, None at the root
    height: Mapping[int, int]  # longest edge path below the child end
    depth: Mapping[int, int]  # edges between the root and the parent end


@dataclass(frozen=True)
class DeletionLayers:
    """Per-layer record of the peeling: chosen edges and everything deleted."""

    chosen: tuple[frozenset[int], ...]
    deleted: tuple[frozenset[int], ...]


def _build_rooted(
    root: int,
    vertices: frozenset[int],
    edges: Sequence[tuple[int, int, int, int]],  # (eid, u, v, w)
) -> RootedEdgeTree:
    touching: dict[int, list[tuple[int, int, int]]] = {v: [] for v in vertices}
    for eid, u, v, w in edges:
        touching[u].append((eid, v, w))
        touching[v].append((eid, u, w))
    ends: dict[int, tuple[int, int]] = {}
    weight: dict[int, int] = {}
    out_edges: dict[int, list[int]] = {v: [] for v in vertices}
    in_edge: dict[int, int | None] = {v: None for v in vertices}
    depth: dict[int, int] = {}
    vertex_depth = {root: 0}
    stack = [root]
    while stack:
        u = stack.pop()
        for eid, v, w in touching[u]:
            if eid in ends:
                continue
            ends[eid] = (u, v)
            weight[eid] = w
            out_edges[u].append(eid)
            in_edge[v] = eid
            depth[eid] = vertex_depth[u]
            vertex_depth[v] = vertex_depth[u] + 1
            stack.append(v)
    height: dict[int, int] = {}
    for eid in sorted(ends, key=lambda e: -vertex_depth[ends[e][1]]):
        child = ends[eid][1]
        below = [height[e2] for e2 in out_edges[child]]
        height[eid] = 1 + max(below) if below else 0
    return RootedEdgeTree(
        root=root,
        vertices=vertices,
        edge_ids=tuple(sorted(ends)),
        ends=ends,
        weight=weight,
        out_edges={v: tuple(sorted(es)) for v, es in out_edges.items()},
        in_edge=in_edge,
        height=height,
        depth=depth,
    )


def choose_root(t: RootedEdgeTree) -> int:
    """The canonical root: the smallest vertex id of the component."""
    return min(t.vertices)


def rooted_at(t: RootedEdgeTree, root: int) -> RootedEdgeTree:
    """The same component re-oriented away from another root."""
    if root not in t.vertices:
        raise UnknownVertex(f"vertex {root} is not in this component")
    edges = [(eid, *t.ends[eid], t.weight[eid]) for eid in t.edge_ids]
    return _build_rooted(root, t.vertices, edges)


def _validate_edge_subset(host: HostTree, subset: Sequence[FEdge]) -> None:
    if not subset:
        raise EmptyEdgeSet("the selected edge set is empty")
    tree_edges = {frozenset(e) for e in host.edges}
    seen: set[frozenset[int]] = set()
    for u, v, w in subset:
        key = frozenset((u, v))
        if key not in tree_edges:
            raise ValueError(f"({u}, {v}) is not an edge of the host tree")
        if key in seen:
            raise ValueError(f"edge ({u}, {v}) selected twice")
        seen.add(key)
        if w < 1:
            raise ValueError(f"edge ({u}, {v}) must have positive weight")


def reduce_to_full_tree(host: HostTree, subset: Sequence[FEdge]) -> tuple[RootedEdgeTree, ...]:
    """Drop unselected host edges and return each component, canonically rooted."""
    _validate_edge_subset(host, subset)
    adj: dict[int, list[tuple[int, int, int]]] = {}
    for eid, (u, v, w) in enumerate(subset):
        adj.setdefault(u, []).append((eid, v, w))
        adj.setdefault(v, []).append((eid, u, w))
    unvisited = set(adj)
    components: list[RootedEdgeTree] = []
    while unvisited:
        start = min(unvisited)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for _, y, _ in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        unvisited -= comp
        edge_rows = []
        seen_eids = set()
        for u in sorted(comp):
            for eid, v, w in adj[u]:
                if eid not in seen_eids:
                    seen_eids.add(eid)
                    edge_rows.append((eid, u, v, w))
        edge_rows.sort()
        components.append(_build_rooted(min(comp), frozenset(comp), edge_rows))
    return tuple(components)


def bottom_up_f(t: RootedEdgeTree) -> DominationFunction:
    """Charge each edge with the worst remaining deficit among its sons.

    Processing by ascending height, an edge e = (u, v) receives
    max over sons e' = (v, x) of (w(e') - f[A(v)] - f[A(x)])^+, which makes
    f cover every edge except possibly those at the root.
    """
    values: dict[int, int] = {}

    def over(eids: Iterable[int]) -> int:
        return sum(values.get(e, 0) for e in eids)

    for eid in sorted(t.edge_ids, key=lambda e: (t.height[e], e)):
        child = t.ends[eid][1]
        sons = t.out_edges[child]
        if not sons:
            continue
        covered = over(sons)
        worst = 0
        for son in sons:
            grandchild = t.ends[son][1]
            deficit = t.weight[son] - covered - over(t.out_edges[grandchild])
            worst = max(worst, deficit)
        if worst > 0:
            values[eid] = worst
    return DominationFunction(values)


def root_adjust(t: RootedEdgeTree, f: DominationFunction) -> tuple[DominationFunction, int, int | None]:
    """Close the gap d left at the root edges; returns (g, d, chosen edge).

    When d <= 0 the bottom-up function already dominates everything and is
    returned unchanged with no chosen edge.
    """
    root_edges = t.out_edges[t.root]
    at_root = sum(f(e) for e in root_edges)
    d = None
    e0 = None
    for eid in root_edges:
        child = t.ends[eid][1]
        gap = t.weight[eid] - at_root - sum(f(e) for e in t.out_edges[child])
        if d is None or gap > d:
            d = gap
            e0 = eid
    assert d is not None  # a component always has at least one root edge
    if d <= 0:
        return f, d, None
    bumped = dict(f.values)
    bumped[e0] = bumped.get(e0, 0) + d
    return DominationFunction(bumped), d, e0


def extract_dispersed_tree(
    t: RootedEdgeTree,
    g: DominationFunction,
    d: int,
    e0: int | None,
) -> tuple[frozenset[int], DeletionLayers]:
    """Peel the tree layer by layer, collecting a dispersed edge set.

    Within each not-yet-deleted subtree, every positive root edge elects one
    of its sons whose weight is paid exactly by g on the son's remaining
    neighborhood; the son, its neighbors, and the zero root edges are deleted.
    Per layer the deleted mass equals the weight of the elected edges, so the
    final set pays for all of g.
    """
    incident: dict[int, set[int]] = {v: set() for v in t.vertices}
    for eid in t.edge_ids:
        u, v = t.ends[eid]
        incident[u].add(eid)
        incident[v].add(eid)

    def restricted_neighborhood(eid: int, remaining: set[int]) -> set[int]:
        u, v = t.ends[eid]
        return (incident[u] | incident[v]) & remaining

    remaining = set(t.edge_ids)
    chosen_layers: list[frozenset[int]] = []
    deleted_layers: list[frozenset[int]] = []
    first = True
    while remaining:
        roots = sorted(
            v
            for v in t.vertices
            if (t.in_edge[v] is None or t.in_edge[v] not in remaining)
            and any(e in remaining for e in t.out_edges[v])
        )
        chosen: list[int] = []
        if first and d > 0:
            assert e0 is not None
            chosen.append(e0)
        else:
            for v_s in roots:
                for eid in t.out_edges[v_s]:
                    if eid not in remaining or g(eid) == 0:
                        continue
                    child = t.ends[eid][1]
                    candidates = [
                        son
                        for son in t.out_edges[child]
                        if son in remaining
                        and sum(g(e) for e in restricted_neighborhood(son, remaining))
                        == t.weight[son]
                    ]
                    if not candidates:
                        raise TheoremViolation(
                            f"no candidate son pays for root edge {eid} exactly"
                        )
                    candidates.sort(key=lambda e: (-g(e), e))
                    chosen.append(candidates[0])
        deleted: set[int] = set()
        for eid in chosen:
            deleted |= restricted_neighborhood(eid, remaining)
        for v_s in roots:
            for eid in t.out_edges[v_s]:
                if eid in remaining and g(eid) == 0:
                    deleted.add(eid)
        if sum(g(e) for e in deleted) != sum(t.weight[e] for e in chosen):
            raise TheoremViolation("layer accounting failed: deleted mass != chosen weight")
        remaining -= deleted
        chosen_layers.append(frozenset(chosen))
        deleted_layers.append(frozenset(deleted))
        first = False

    dispersed = frozenset().union(*chosen_layers) if chosen_layers else frozenset()
    if sum(t.weight[e] for e in dispersed) != sum(g(e) for e in t.edge_ids):
        raise TheoremViolation("dispersed weight does not match the function size")
    return dispersed, DeletionLayers(tuple(chosen_layers), tuple(deleted_layers))


def solve_rooted(t: RootedEdgeTree) -> tuple[DominationFunction, frozenset[int], DeletionLayers]:
    """Full pipeline on one rooted component."""
    f = bottom_up_f(t)
    g, d, e0 = root_adjust(t, f)
    dispersed, layers = extract_dispersed_tree(t, g, d, e0)
    return g, dispersed, layers


def edge_line_graph(host: HostTree, subset: Sequence[FEdge]) -> WeightedGraph:
    """The intersection graph of the selected edges, ids in subset order."""
    _validate_edge_subset(host, subset)
    return build_intersection_graph(
        host, [{u, v} for u, v, _ in subset], [w for _, _, w in subset]
    )


def solve_tree(host: HostTree, subset: Sequence[FEdge]) -> Certificate:
    """Certificate with gamma_w = rho_w on the line graph of the edge subset."""
    components = reduce_to_full_tree(host, subset)
    values: dict[int, int] = {}
    dispersed: set[int] = set()
    for comp in components:
        g, chosen, _ = solve_rooted(comp)
        values.update(g.values)
        dispersed |= chosen
    total = DominationFunction(values)
    cert = Certificate(total, frozenset(dispersed), total.size)
    check = verify_certificate(edge_line_graph(host, subset), cert)
    if not check:
        raise TheoremViolation(f"certificate failed re-verification: {check.reason}")
    return cert
