"""Independent ground-truth oracles: brute force, exact rational LP, matrix tests.

Everything here is deliberately separate from the structured solvers so the
two routes can disagree loudly in tests.  All arithmetic is exact: integer
branch and bound, Fraction simplex, fraction-free determinants.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import BadPermutation, InstanceTooLarge, LPInternalError
from .graph_core import (
    DominationFunction,
    WeightedGraph,
    closed_neighborhood,
    is_w_dominating,
)

DEFAULT_CAP = 10


def _check_cap(g: WeightedGraph, cap: int) -> None:
    if g.n > cap:
        raise InstanceTooLarge(f"{g.n} vertices exceeds the cap of {cap}")


def _closed_masks(g: WeightedGraph) -> list[int]:
    return [(1 << v) | sum(1 << u for u in g.adjacency[v]) for v in g.vertices]


def _min_dominating(
    g: WeightedGraph,
    demands: Iterable[int],
    suppliers: Iterable[int] | None = None,
) -> tuple[int, DominationFunction]:
    """Exact minimum size of a function with f[N(u)] >= w(u) for u in demands.

    Depth-first branch and bound.  Values on a vertex are capped by the worst
    remaining deficit in its neighborhood (anything above is reducible), the
    lower bound packs demands with disjoint neighborhoods, and the incumbent
    starts from w itself improved by a greedy cover.
    """
    w = g.weights
    nmask = _closed_masks(g)
    demand_list = sorted(set(demands))
    if not demand_list:
        return 0, DominationFunction.zero()
    useful = 0
    for u in demand_list:
        useful |= nmask[u]
    if suppliers is None:
        pool = [v for v in g.vertices if useful >> v & 1]
    else:
        pool = [v for v in sorted(set(suppliers)) if useful >> v & 1]
    variables = sorted(pool, key=lambda v: (-g.degree(v), v))
    var_index = {v: i for i, v in enumerate(variables)}
    covers: dict[int, list[int]] = {v: [] for v in variables}
    supplier_indices: dict[int, list[int]] = {}
    for u in demand_list:
        idxs = sorted(var_index[v] for v in variables if nmask[u] >> v & 1)
        if not idxs:
            raise ValueError(f"demand at vertex {u} has no available supplier")
        supplier_indices[u] = idxs
        for i in idxs:
            covers[variables[i]].append(u)
    cap = max(w[u] for u in demand_list)

    placed = {u: 0 for u in demand_list}

    def greedy_seed() -> dict[int, int]:
        values: dict[int, int] = {}
        got = {u: 0 for u in demand_list}
        while True:
            unmet = [u for u in demand_list if got[u] < w[u]]
            if not unmet:
                return values
            u_star = max(unmet, key=lambda u: (w[u] - got[u], -u))
            options = [variables[i] for i in supplier_indices[u_star]]
            v_star = max(
                options, key=lambda v: (sum(1 for x in covers[v] if got[x] < w[x]), -v)
            )
            add = w[u_star] - got[u_star]
            values[v_star] = values.get(v_star, 0) + add
            for x in covers[v_star]:
                got[x] += add

    seed = greedy_seed()
    trivial = {u: w[u] for u in demand_list} if suppliers is None else None
    best_values = seed
    if trivial is not None and sum(trivial.values()) < sum(seed.values()):
        best_values = trivial
    best_size = sum(best_values.values())
    assign: dict[int, int] = {}

    def remaining(u: int, idx: int) -> int:
        return len(supplier_indices[u]) - bisect_left(supplier_indices[u], idx)

    def packing_bound(unmet: list[int]) -> int:
        # demands with disjoint closed neighborhoods need disjoint mass
        bound = 0
        taken = 0
        for u in sorted(unmet, key=lambda u: (placed[u] - w[u], u)):
            if nmask[u] & taken == 0:
                bound += w[u] - placed[u]
                taken |= nmask[u]
        return bound

    def dfs(idx: int, size: int) -> None:
        nonlocal best_size, best_values
        if size >= best_size:
            return
        unmet = [u for u in demand_list if placed[u] < w[u]]
        if not unmet:
            best_size = size
            best_values = {v: x for v, x in assign.items() if x > 0}
            return
        if idx == len(variables):
            return
        if size + packing_bound(unmet) >= best_size:
            return
        for u in unmet:
            if remaining(u, idx) == 0:
                return
        v = variables[idx]
        local = [u for u in covers[v] if placed[u] < w[u]]
        top = min(cap, max((w[u] - placed[u] for u in local), default=0))
        forced = max(
            (w[u] - placed[u] for u in local if remaining(u, idx) == 1),
            default=0,
        )
        for val in range(forced, top + 1):
            assign[v] = val
            for u in covers[v]:
                placed[u] += val
            dfs(idx + 1, size + val)
            for u in covers[v]:
                placed[u] -= val
        assign.pop(v, None)

    dfs(0, 0)
    result = DominationFunction(best_values)
    assert is_w_dominating(g, result, demand_list)
    return best_size, result


def brute_gamma(g: WeightedGraph, cap: int = DEFAULT_CAP) -> tuple[int, DominationFunction]:
    """Exact gamma_w by branch and bound."""
    _check_cap(g, cap)
    return _min_dominating(g, g.vertices)


def _near2_masks(g: WeightedGraph) -> list[int]:
    adj = [sum(1 << u for u in g.adjacency[v]) for v in g.vertices]
    out = []
    for v in g.vertices:
        m = adj[v]
        for u in g.adjacency[v]:
            m |= adj[u]
        out.append(m & ~(1 << v))
    return out


def _mask_members(mask: int) -> frozenset[int]:
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def brute_rho(g: WeightedGraph, cap: int = DEFAULT_CAP) -> tuple[int, frozenset[int]]:
    """Exact rho_w: maximum-weight set with pairwise distance at least 3.

    Dispersed sets are exactly the independent sets of the distance-<=2
    graph, enumerated over bitmasks.
    """
    _check_cap(g, cap)
    near2 = _near2_masks(g)
    size = 1 << g.n
    valid = bytearray(size)
    weight = [0] * size
    valid[0] = 1
    best_val, best_mask = 0, 0
    for m in range(1, size):
        v = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        if valid[rest] and not (near2[v] & rest):
            valid[m] = 1
            weight[m] = weight[rest] + g.weights[v]
            if weight[m] > best_val:
                best_val, best_mask = weight[m], m
    return best_val, _mask_members(best_mask)


def brute_gamma_i(
    g: WeightedGraph, cap: int = DEFAULT_CAP
) -> tuple[int, frozenset[int], DominationFunction]:
    """Exact gamma_i_w: the costliest-to-dominate independent set.

    Domination cost is monotone in the demand set, so only maximal
    independent sets need to be priced.
    """
    _check_cap(g, cap)
    adj = [sum(1 << u for u in g.adjacency[v]) for v in g.vertices]
    size = 1 << g.n
    valid = bytearray(size)
    valid[0] = 1
    best: tuple[int, frozenset[int], DominationFunction] | None = None
    for m in range(size):
        if m:
            v = (m & -m).bit_length() - 1
            rest = m & (m - 1)
            if not (valid[rest] and not (adj[v] & rest)):
                continue
            valid[m] = 1
        maximal = all(m >> v & 1 or adj[v] & m for v in g.vertices)
        if not maximal:
            continue
        members = _mask_members(m)
        cost, func = _min_dominating(g, members)
        if best is None or cost > best[0]:
            best = (cost, members, func)
    assert best is not None  # the empty set is maximal only in the empty graph
    return best


# ---------------------------------------------------------------------------
# exact rational linear programming


@dataclass(frozen=True)
class FractionalSolution:
    """Optimal values and vectors of the packing LP and its dual."""

    gamma_star: Fraction  # optimum of (D): min |f|, f[N(v)] >= w(v), f >= 0
    rho_star: Fraction  # optimum of (P): max sum w(v) g(v), g[N(v)] <= 1, g >= 0
    dual: Mapping[int, Fraction]  # f attaining gamma_star
    primal: Mapping[int, Fraction]  # g attaining rho_star


def _pivot(tableau: list[list[Fraction]], cost: list[Fraction], basis: list[int], row: int, col: int) -> None:
    pivot = tableau[row][col]
    tableau[row] = [x / pivot for x in tableau[row]]
    for i in range(len(tableau)):
        if i != row and tableau[i][col] != 0:
            coef = tableau[i][col]
            tableau[i] = [x - coef * y for x, y in zip(tableau[i], tableau[row])]
    if cost[col] != 0:
        coef = cost[col]
        cost[:] = [x - coef * y for x, y in zip(cost, tableau[row])]
    basis[row] = col


def _run_simplex(
    tableau: list[list[Fraction]],
    cost: list[Fraction],
    basis: list[int],
    allowed: Sequence[bool],
) -> None:
    """Minimize with Bland's anti-cycling rule until no improving column."""
    while True:
        enter = None
        for j in range(len(allowed)):
            if allowed[j] and cost[j] < 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best_ratio: Fraction | None = None
        for i, row in enumerate(tableau):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise LPInternalError("unbounded linear program")
        _pivot(tableau, cost, basis, leave, enter)


def _solve_lp(
    objective: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    senses: Sequence[str],
    rhs: Sequence[Fraction],
    maximize: bool,
) -> tuple[Fraction, list[Fraction]]:
    """Two-phase exact simplex for A x (<=|>=) b, x >= 0, b >= 0."""
    n = len(objective)
    m = len(rows)
    c = [Fraction(-x) if maximize else Fraction(x) for x in objective]
    num_artificial = sum(1 for s in senses if s == ">=")
    width = n + m + num_artificial
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    art_at = 0
    for i in range(m):
        if rhs[i] < 0:
            raise LPInternalError("negative right-hand side")
        row = [Fraction(x) for x in rows[i]] + [Fraction(0)] * (m + num_artificial) + [Fraction(rhs[i])]
        if senses[i] == "<=":
            row[n + i] = Fraction(1)
            basis.append(n + i)
        elif senses[i] == ">=":
            row[n + i] = Fraction(-1)
            col = n + m + art_at
            art_at += 1
            row[col] = Fraction(1)
            art_cols.append(col)
            basis.append(col)
        else:
            raise LPInternalError(f"unsupported sense {senses[i]}")
        tableau.append(row)

    if art_cols:
        cost1 = [Fraction(0)] * width + [Fraction(0)]
        for col in art_cols:
            cost1[col] = Fraction(1)
        for i, b in enumerate(basis):
            if cost1[b] != 0:
                cost1 = [x - y for x, y in zip(cost1, tableau[i])]
        allowed = [True] * width
        _run_simplex(tableau, cost1, basis, allowed)
        if -cost1[-1] != 0:
            raise LPInternalError("phase one ended infeasible")
        # drive leftover artificials out of the basis
        for i in range(m):
            if basis[i] in art_cols:
                swap = next(
                    (j for j in range(width) if j not in art_cols and tableau[i][j] != 0),
                    None,
                )
                if swap is not None:
                    _pivot(tableau, cost1, basis, i, swap)

    cost2 = c + [Fraction(0)] * (m + num_artificial) + [Fraction(0)]
    for i, b in enumerate(basis):
        if b < len(cost2) - 1 and cost2[b] != 0:
            cost2 = [x - y for x, y in zip(cost2, tableau[i])]
    allowed = [j not in art_cols for j in range(width)]
    _run_simplex(tableau, cost2, basis, allowed)
    value = -cost2[-1]
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tableau[i][-1]
    return (-value if maximize else value), x


def solve_fractional(g: WeightedGraph, cap: int = DEFAULT_CAP) -> FractionalSolution:
    """Solve the packing LP and its covering dual exactly and independently.

    (P)  max sum_v w(v) g(v)  s.t.  g[N(v)] <= 1,  g >= 0
    (D)  min sum_v f(v)       s.t.  f[N(v)] >= w(v),  f >= 0

    The two optima must agree; any gap is an internal error, not a result.
    """
    _check_cap(g, cap)
    n = g.n
    if n == 0:
        zero = Fraction(0)
        return FractionalSolution(zero, zero, {}, {})
    nbhds = [closed_neighborhood(g, v) for v in g.vertices]
    matrix = [
        [Fraction(1) if u in nbhds[v] else Fraction(0) for u in g.vertices]
        for v in g.vertices
    ]
    ones = [Fraction(1)] * n
    weights = [Fraction(w) for w in g.weights]

    rho_star, primal = _solve_lp(weights, matrix, ["<="] * n, ones, maximize=True)
    gamma_star, dual = _solve_lp(ones, matrix, [">="] * n, weights, maximize=False)

    for v in g.vertices:
        if primal[v] < 0 or sum(primal[u] for u in nbhds[v]) > 1:
            raise LPInternalError("primal solution infeasible")
        if dual[v] < 0 or sum(dual[u] for u in nbhds[v]) < g.weights[v]:
            raise LPInternalError("dual solution infeasible")
    if sum(weights[v] * primal[v] for v in g.vertices) != rho_star:
        raise LPInternalError("primal objective mismatch")
    if sum(dual) != gamma_star:
        raise LPInternalError("dual objective mismatch")
    if gamma_star != rho_star:
        raise LPInternalError(f"duality gap: {gamma_star} != {rho_star}")
    return FractionalSolution(
        gamma_star,
        rho_star,
        {v: dual[v] for v in g.vertices},
        {v: primal[v] for v in g.vertices},
    )


# ---------------------------------------------------------------------------
# neighborhood matrices


@dataclass(frozen=True)
class NeighborhoodMatrix:
    """0/1 closed-neighborhood matrix under a chosen vertex order."""

    rows: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]


def neighborhood_matrix(g: WeightedGraph, order: Sequence[int] | None = None) -> NeighborhoodMatrix:
    """Entry (i, j) is 1 exactly when order[j] lies in N(order[i])."""
    chosen = tuple(order) if order is not None else tuple(g.vertices)
    if sorted(chosen) != list(g.vertices):
        raise BadPermutation("order must be a permutation of the vertex set")
    nbhds = [closed_neighborhood(g, v) for v in g.vertices]
    rows = tuple(
        tuple(1 if u in nbhds[v] else 0 for u in chosen) for v in chosen
    )
    return NeighborhoodMatrix(rows, chosen)


def det(matrix: NeighborhoodMatrix | Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    raw = matrix.rows if isinstance(matrix, NeighborhoodMatrix) else matrix
    rows = [list(r) for r in raw]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def has_consecutive_ones(matrix: NeighborhoodMatrix | Sequence[Sequence[int]]) -> bool:
    """Do the ones of every row form one contiguous run?"""
    raw = matrix.rows if isinstance(matrix, NeighborhoodMatrix) else matrix
    for row in raw:
        positions = [j for j, x in enumerate(row) if x]
        if positions and positions[-1] - positions[0] + 1 != len(positions):
            return False
    return True
