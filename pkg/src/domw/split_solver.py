"""Exact weighted domination on split graphs, where it equals the
independent-domination value.

On a split graph (clique A, independent set B) the minimum w-dominating
function is either an exact minimum cover of the demands in B supported on A,
or, when the heaviest clique vertex costs more than that cover, the cover
topped up on that vertex.  Either way an independent set certifies the value:
B itself, or the heaviest clique vertex alone.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import IsolatedBVertex, NotAClique, NotAPartition, NotIndependent
from .graph_core import DominationFunction, WeightedGraph


@dataclass(frozen=True)
class SplitInstance:
    """A graph with a vertex partition into a clique and an independent set.

    Build through validate_split, which checks the partition is genuine.
    """

    graph: WeightedGraph
    clique: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class SplitResult:
    value: int  # gamma_w = gamma_i_w
    dominating: DominationFunction
    witness_independent: frozenset[int]
    witness_cost: int  # minimum size of a function dominating the witness


def validate_split(graph: WeightedGraph, clique: frozenset[int], independent: frozenset[int]) -> SplitInstance:
    """Check the claimed split partition and wrap it up."""
    if clique & independent or (clique | independent) != set(graph.vertices):
        raise NotAPartition("clique and independent set must partition the vertices")
    a_sorted = sorted(clique)
    for i, u in enumerate(a_sorted):
        for v in a_sorted[i + 1:]:
            if v not in graph.adjacency[u]:
                raise NotAClique(f"clique vertices {u} and {v} are not adjacent")
    for u in sorted(independent):
        for v in graph.adjacency[u]:
            if v in independent and u < v:
                raise NotIndependent(f"independent vertices {u} and {v} are adjacent")
    return SplitInstance(graph, frozenset(clique), frozenset(independent))


def min_cover_B(inst: SplitInstance) -> DominationFunction:
    """Exact minimum function supported on the clique that dominates B.

    Depth-first branch and bound over the clique values, capped by the
    largest demand; the incumbent starts from a greedy cover.  Mass on a B
    vertex can always be shifted onto a clique neighbor, so restricting the
    support loses nothing as long as no B vertex is isolated.
    """
    graph = inst.graph
    w = graph.weights
    demands = sorted(inst.independent)
    suppliers_of: dict[int, list[int]] = {}
    for b in demands:
        sup = sorted(graph.adjacency[b] & inst.clique)
        if not sup:
            raise IsolatedBVertex(f"vertex {b} has positive weight and no clique neighbor")
        suppliers_of[b] = sup
    if not demands:
        return DominationFunction.zero()

    b_nbrs: dict[int, list[int]] = {}
    for b in demands:
        for a in suppliers_of[b]:
            b_nbrs.setdefault(a, []).append(b)
    variables = sorted(b_nbrs, key=lambda a: (-len(b_nbrs[a]), a))
    var_index = {a: i for i, a in enumerate(variables)}
    supplier_indices = {b: sorted(var_index[a] for a in suppliers_of[b]) for b in demands}
    cap = max(w[b] for b in demands)

    # greedy incumbent: a covering subset of A, each member paying its worst demand
    chosen: list[int] = []
    for b in demands:
        if not any(a in chosen for a in suppliers_of[b]):
            chosen.append(max(suppliers_of[b], key=lambda a: (len(b_nbrs[a]), -a)))
    seed = {a: max(w[b] for b in b_nbrs[a]) for a in chosen}
    best_size = sum(seed.values())
    best_values = dict(seed)

    placed = {b: 0 for b in demands}
    assign: dict[int, int] = {}

    def remaining_suppliers(b: int, idx: int) -> int:
        return len(supplier_indices[b]) - bisect_left(supplier_indices[b], idx)

    def dfs(idx: int, size: int) -> None:
        nonlocal best_size, best_values
        if size >= best_size:
            return
        deficits = [w[b] - placed[b] for b in demands if placed[b] < w[b]]
        if not deficits:
            best_size = size
            best_values = {a: x for a, x in assign.items() if x > 0}
            return
        if idx == len(variables):
            return
        if size + max(deficits) >= best_size:
            return
        for b in demands:
            if placed[b] < w[b] and remaining_suppliers(b, idx) == 0:
                return
        a = variables[idx]
        local = [b for b in b_nbrs[a] if placed[b] < w[b]]
        top = min(cap, max((w[b] - placed[b] for b in local), default=0))
        forced = max(
            (w[b] - placed[b] for b in local if remaining_suppliers(b, idx) == 1),
            default=0,
        )
        for val in range(forced, top + 1):
            assign[a] = val
            for b in b_nbrs[a]:
                placed[b] += val
            dfs(idx + 1, size + val)
            for b in b_nbrs[a]:
                placed[b] -= val
        assign.pop(a, None)

    dfs(0, 0)
    return DominationFunction(best_values)


def solve_split(inst: SplitInstance) -> SplitResult:
    """gamma_w of a split graph with an independent witness of the same cost."""
    graph = inst.graph
    w = graph.weights
    if not inst.clique:
        # pure independent set: every vertex must pay for itself
        values = {b: w[b] for b in inst.independent}
        f = DominationFunction(values)
        return SplitResult(f.size, f, inst.independent, f.size)
    cover = min_cover_B(inst)
    heaviest = max(w[a] for a in inst.clique)
    if cover.size >= heaviest:
        return SplitResult(cover.size, cover, inst.independent, cover.size)
    a_star = min(a for a in inst.clique if w[a] == heaviest)
    values = dict(cover.values)
    values[a_star] = values.get(a_star, 0) + heaviest - cover.size
    return SplitResult(heaviest, DominationFunction(values), frozenset({a_star}), heaviest)
