"""Exact nu_k with optimality certificates.

The solver runs an ascending sequence of decision searches: starting
from a greedy incumbent L and a cheap upper bound U, it repeatedly asks
"is there a proper partial k-coloring with at least L+1 colored edges?"
until one refutation closes the gap.  Successes are cheap; only the
final refutation is exhaustive.

The decision search processes edges in a fixed order (descending
endpoint degree sum, ties by id), breaks color symmetry (a new color
must be exactly one more than the maximum used so far), canonicalizes
parallel twins (colored twins form an id-prefix of their group), prunes
on a per-vertex capacity bound, and memoizes refuted frontier states so
that structurally repeated subproblems are refuted once.

Before searching, each component is reduced: pendant edges are forced
into an optimum one at a time (each consuming a color slot at its inner
endpoint), and residual components whose cycle rank is at most 1 are
routed to the polynomial solver.  Capacities below k thread through the
whole pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import networkx as nx

from . import poly
from .errors import NotABridge, NotCubic
from .graph import MultiGraph
from .matching import max_matching


@dataclass(frozen=True)
class ColorClasses:
    """A proper partial edge coloring: colors 1..k, one per colored edge."""

    k: int
    assignment: dict[int, int] = field(default_factory=dict)

    @property
    def colored_count(self) -> int:
        return len(self.assignment)

    def classes(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for eid, c in self.assignment.items():
            out[c - 1].add(eid)
        return tuple(frozenset(s) for s in out)

    def is_proper(self, g: MultiGraph) -> bool:
        seen: dict[tuple[int, int], bool] = {}
        for eid, c in self.assignment.items():
            if not (1 <= c <= self.k):
                return False
            for v in g.endpoints(eid):
                if (v, c) in seen:
                    return False
                seen[(v, c)] = True
        return True


@dataclass(frozen=True)
class NuResult:
    value: int
    certificate: ColorClasses
    node_count: int


# ---------------------------------------------------------------------------
# decision search


def _static_order(h: MultiGraph) -> list[int]:
    """Connected processing order: prefer edges closing into the visited
    region (constraints bite immediately and the memo frontier stays
    narrow), then heavier endpoint degree sums, then lower id."""
    deg = h.degrees()
    remaining = set(range(h.m))
    visited: set[int] = set()
    order: list[int] = []
    while remaining:
        best = max(
            remaining,
            key=lambda e: (
                sum(1 for x in h.edges[e] if x in visited),
                deg[h.edges[e][0]] + deg[h.edges[e][1]],
                -e,
            ),
        )
        order.append(best)
        remaining.remove(best)
        visited.update(h.edges[best])
    return order


def _decide(
    h: MultiGraph,
    cap: Sequence[int],
    k: int,
    target: int,
    counter: list[int],
) -> Optional[dict[int, int]]:
    """A proper partial k-coloring of h with >= target colored edges
    respecting per-vertex capacities, or None if impossible."""
    m = h.m
    budget = m - target
    if budget < 0:
        return None
    order = _static_order(h)
    pos_of = {e: i for i, e in enumerate(order)}

    # parallel-twin groups: colored twins must be an id-prefix
    group_of: dict[int, int] = {}
    groups: dict[tuple[int, int], int] = {}
    for eid in range(m):
        e = h.edges[eid]
        if h.multiplicity(*e) > 1:
            group_of[eid] = groups.setdefault(e, len(groups))
    group_skips = [0] * len(groups)

    # frontier: vertices with both decided and undecided incident edges
    first_pos = [m] * h.n
    last_pos = [-1] * h.n
    for eid in range(m):
        i = pos_of[eid]
        for v in h.edges[eid]:
            first_pos[v] = min(first_pos[v], i)
            last_pos[v] = max(last_pos[v], i)
    frontier = [
        tuple(v for v in range(h.n) if first_pos[v] < i <= last_pos[v])
        for i in range(m + 1)
    ]

    used = [0] * h.n  # bitmask of colors at each vertex
    ndeg = [0] * h.n  # colored-degree
    rem = list(h.degrees())
    assign: dict[int, int] = {}
    failed: set = set()

    def rec(i: int, colored: int, skips: int, maxc: int) -> bool:
        counter[0] += 1
        if colored >= target:
            return True
        if i == m:
            return False
        s = 0
        for v in range(h.n):
            if rem[v]:
                s += min(cap[v] - ndeg[v], rem[v])
        if colored + (s >> 1) < target:
            return False
        key = (i, skips, maxc, tuple(used[v] for v in frontier[i]))
        if key in failed:
            return False
        eid = order[i]
        u, v = h.edges[eid]
        gid = group_of.get(eid)
        rem[u] -= 1
        rem[v] -= 1
        if (
            ndeg[u] < cap[u]
            and ndeg[v] < cap[v]
            and (gid is None or group_skips[gid] == 0)
        ):
            taken = used[u] | used[v]
            for c in range(1, min(k, maxc + 1) + 1):
                bit = 1 << c
                if taken & bit:
                    continue
                used[u] |= bit
                used[v] |= bit
                ndeg[u] += 1
                ndeg[v] += 1
                assign[eid] = c
                if rec(i + 1, colored + 1, skips, max(maxc, c)):
                    return True
                del assign[eid]
                used[u] &= ~bit
                used[v] &= ~bit
                ndeg[u] -= 1
                ndeg[v] -= 1
        if skips < budget:
            if gid is not None:
                group_skips[gid] += 1
            if rec(i + 1, colored, skips + 1, maxc):
                return True
            if gid is not None:
                group_skips[gid] -= 1
        rem[u] += 1
        rem[v] += 1
        failed.add(key)
        return False

    if rec(0, 0, 0, 0):
        return dict(assign)
    return None


def _greedy_peel(h: MultiGraph, cap: Sequence[int], k: int) -> dict[int, int]:
    """Incumbent: k passes of maximum matching on the still-free graph."""
    free = list(cap)
    unused: set[int] = set(range(h.m))
    assign: dict[int, int] = {}
    for c in range(1, k + 1):
        gx = nx.Graph()
        pair_ids: dict[tuple[int, int], list[int]] = {}
        for eid in sorted(unused):
            u, v = h.edges[eid]
            if free[u] > 0 and free[v] > 0:
                gx.add_edge(u, v)
                pair_ids.setdefault((u, v), []).append(eid)
        if gx.number_of_edges() == 0:
            break
        for u, v in nx.max_weight_matching(gx, maxcardinality=True):
            eid = pair_ids[(min(u, v), max(u, v))][0]
            assign[eid] = c
            unused.discard(eid)
            free[u] -= 1
            free[v] -= 1
    return assign


def _capacity_bound(h: MultiGraph, cap: Sequence[int], k: int) -> int:
    deg = h.degrees()
    return sum(min(cap[v], deg[v]) for v in range(h.n)) // 2


def _matching_bound(h: MultiGraph, cap: Sequence[int], k: int) -> int:
    ok = [eid for eid, (u, v) in enumerate(h.edges) if cap[u] > 0 and cap[v] > 0]
    if len(ok) < h.m:
        h = h.without_edges(set(range(h.m)) - set(ok))
    return k * len(max_matching(h))


def _solve_bb(
    h: MultiGraph, cap: Sequence[int], k: int
) -> tuple[int, dict[int, int], int]:
    """Exact capped optimum on one residual component via ascending
    decision searches."""
    upper = min(h.m, _capacity_bound(h, cap, k), _matching_bound(h, cap, k))
    best = _greedy_peel(h, cap, k)
    low = len(best)
    counter = [0]
    while low < upper:
        found = _decide(h, cap, k, low + 1, counter)
        if found is None:
            upper = low
        else:
            low = len(found)
            best = found
    return low, best, counter[0]


# ---------------------------------------------------------------------------
# reductions


def reduce_pendant(g: MultiGraph, k: int) -> set[int]:
    """Maximal iteratively forced pendant edge set: each forced edge can
    be assumed colored in some optimum, consuming one color slot at its
    inner endpoint."""
    forced, _, _ = _pendant_reduce(g, [k] * g.n)
    return set(forced)


def _pendant_reduce(
    g: MultiGraph, cap: list[int]
) -> tuple[list[int], set[int], list[int]]:
    """Strip degree-1 vertices.  Returns (forced edge ids in forcing
    order, dropped edge ids, surviving edge ids); mutates cap."""
    deg = list(g.degrees())
    alive = [True] * g.m
    forced: list[int] = []
    dropped: set[int] = set()
    queue = [v for v in range(g.n) if deg[v] == 1]
    while queue:
        v = queue.pop()
        if deg[v] != 1:
            continue
        eid = next(e for e, _ in g.incident(v) if alive[e])
        a, b = g.endpoints(eid)
        w = b if v == a else a
        alive[eid] = False
        deg[v] -= 1
        deg[w] -= 1
        if cap[v] >= 1 and cap[w] >= 1:
            forced.append(eid)
            cap[v] -= 1
            cap[w] -= 1
        else:
            dropped.add(eid)
        if deg[w] == 1:
            queue.append(w)
    survivors = [e for e in range(g.m) if alive[e]]
    return forced, dropped, survivors


def _color_forced(
    g: MultiGraph, forced: Sequence[int], k: int, assign: dict[int, int]
) -> None:
    """Color forced pendant edges, newest first; a free color always
    exists by the capacity accounting of the forcing pass."""
    used: list[set[int]] = [set() for _ in range(g.n)]
    for eid, c in assign.items():
        for v in g.endpoints(eid):
            used[v].add(c)
    for eid in reversed(list(forced)):
        u, v = g.endpoints(eid)
        c = next(c for c in range(1, k + 1) if c not in used[u] and c not in used[v])
        assign[eid] = c
        used[u].add(c)
        used[v].add(c)


# ---------------------------------------------------------------------------
# main entry points


def _solve_component(
    sub: MultiGraph, k: int, use_poly: bool
) -> tuple[int, dict[int, int], int]:
    cap = [k] * sub.n
    forced, _dropped, survivors = _pendant_reduce(sub, cap)
    assign: dict[int, int] = {}
    value = len(forced)
    nodes = 0
    if survivors:
        res = MultiGraph(sub.n, [sub.edges[e] for e in survivors])
        back = dict(enumerate(survivors))
        if use_poly and not poly._has_rank2_component(res):
            opt = poly.best_degree_bounded(res, k, cap)
            res_assign = poly.color_sparse_subgraph(res, opt.chosen_edges, k)
            value += opt.value
        else:
            res_assign = {}
            for comp in res.components():
                vs = set(comp)
                ids = [e for e, (u, _) in enumerate(res.edges) if u in vs]
                if not ids:
                    continue
                idx = {v: i for i, v in enumerate(comp)}
                cs = MultiGraph(
                    len(comp), [(idx[u], idx[v]) for u, v in (res.edges[e] for e in ids)]
                )
                ccap = [cap[v] for v in comp]
                cval, cassign, cnodes = _solve_bb(cs, ccap, k)
                value += cval
                nodes += cnodes
                for ce, c in cassign.items():
                    res_assign[ids[ce]] = c
        assign.update({back[e]: c for e, c in res_assign.items()})
    _color_forced(sub, forced, k, assign)
    return value, assign, nodes


def nu_k(g: MultiGraph, k: int, use_poly: bool = True) -> NuResult:
    """Exact nu_k(g) with a verifying certificate."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.m == 0:
        return NuResult(0, ColorClasses(k), 0)
    cubic = g.n > 0 and all(d == 3 for d in g.degrees())
    simple = len(set(g.edges)) == g.m
    if (cubic and k >= 4) or (simple and k >= g.max_degree() + 1):
        counter = [0]
        full = _decide(g, [k] * g.n, k, g.m, counter)
        assert full is not None
        return NuResult(g.m, ColorClasses(k, full), counter[0])

    total = 0
    assign: dict[int, int] = {}
    nodes = 0
    for comp in g.components():
        vs = set(comp)
        ids = [e for e, (u, _) in enumerate(g.edges) if u in vs]
        if not ids:
            continue
        idx = {v: i for i, v in enumerate(comp)}
        sub = MultiGraph(
            len(comp), [(idx[u], idx[v]) for u, v in (g.edges[e] for e in ids)]
        )
        cval, cassign, cnodes = _solve_component(sub, k, use_poly)
        total += cval
        nodes += cnodes
        assign.update({ids[e]: c for e, c in cassign.items()})
    return NuResult(total, ColorClasses(k, assign), nodes)


def resistance_r3(g: MultiGraph) -> int:
    """r3(g) = |E| - nu_3(g) for cubic g."""
    if g.n == 0 or any(d != 3 for d in g.degrees()):
        raise NotCubic("resistance is defined for cubic graphs")
    return g.m - nu_k(g, 3).value


def upper_bound(g: MultiGraph, k: int, partial: Optional[ColorClasses] = None) -> int:
    """Admissible bound on the best completion of a proper partial
    coloring: capacity and matching bounds, adjusted for colored edges."""
    if partial is None:
        partial = ColorClasses(k)
    colored = partial.colored_count
    cdeg = [0] * g.n
    for eid in partial.assignment:
        for v in g.endpoints(eid):
            cdeg[v] += 1
    udeg = [0] * g.n
    for eid in range(g.m):
        if eid not in partial.assignment:
            for v in g.endpoints(eid):
                udeg[v] += 1
    s = sum(min(k - cdeg[v], udeg[v]) for v in range(g.n))
    cap_bound = colored + min(g.m - colored, s // 2)
    match_bound = k * len(max_matching(g))
    return min(cap_bound, match_bound)


def decompose_bridge(g: MultiGraph, eid: int, k: int) -> int:
    """nu_k via splitting at a bridge:
    max(nu_k(G1)+nu_k(G2), nu_k(G1e)+nu_k(G2e)-1), where Gie re-attaches
    the bridge as a pendant edge."""
    if eid not in g.bridges():
        raise NotABridge(f"edge {eid} is not a bridge")
    u, v = g.endpoints(eid)
    h = g.without_edges([eid])
    comps = h.components()
    side_a = next(c for c in comps if u in c)
    side_b = next(c for c in comps if v in c)

    def pieces(side: list[int], attach: int) -> tuple[MultiGraph, MultiGraph]:
        idx = {w: i for i, w in enumerate(side)}
        edges = [
            (idx[a], idx[b])
            for i, (a, b) in enumerate(g.edges)
            if i != eid and a in idx and b in idx
        ]
        plain = MultiGraph(len(side), edges)
        pend = MultiGraph(len(side) + 1, edges + [(idx[attach], len(side))])
        return plain, pend

    g1, g1e = pieces(side_a, u)
    g2, g2e = pieces(side_b, v)
    without = nu_k(g1, k).value + nu_k(g2, k).value
    with_e = nu_k(g1e, k).value + nu_k(g2e, k).value - 1
    # components not touching the bridge contribute independently
    rest = sum(
        nu_k(g.induced(c), k).value
        for c in comps
        if c is not side_a and c is not side_b
    )
    return max(without, with_e) + rest
