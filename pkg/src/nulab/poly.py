"""Exact nu_k for forests and unicyclic graphs in polynomial time.

The workhorse is a two-state tree DP computing a maximum subgraph with
per-vertex degree caps.  For a forest with max degree <= k the chosen
subgraph is always k-edge-colorable; for a unicyclic graph the only
obstruction is a fully chosen odd cycle at k = 2, which is handled by
splitting on whether some cycle edge is excluded.

Capacities below k (used by the branch-and-bound front end when pendant
edges have been forced) are supported throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DeficiencyUndefined, NotAForest, NotUnicyclic
from .graph import MultiGraph

_NEG = float("-inf")


@dataclass(frozen=True)
class CycleDeficiency:
    k: int
    x_k: int


@dataclass(frozen=True)
class DegreeBoundedOptimum:
    value: int
    chosen_edges: frozenset[int]


def _forest_dp(
    g: MultiGraph, active: set[int], cap: Sequence[int]
) -> tuple[int, set[int]]:
    """Maximum subgraph of the active (forest) edges with deg(v) <= cap[v].

    Returns (size, chosen edge ids).  Ties prefer excluding an edge.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in active:
        u, v = g.endpoints(eid)
        adj[u].append((eid, v))
        adj[v].append((eid, u))

    f = {}  # (v, parent_edge_taken) -> (value, chosen child edges)
    seen = [False] * g.n
    total = 0
    chosen_all: set[int] = set()

    for root in range(g.n):
        if seen[root]:
            continue
        # iterative postorder
        order = []
        stack = [(root, -1)]
        seen[root] = True
        children: dict[int, list[tuple[int, int]]] = {}
        while stack:
            v, pe = stack.pop()
            order.append((v, pe))
            children[v] = []
            for eid, w in adj[v]:
                if eid != pe and not seen[w]:
                    seen[w] = True
                    children[v].append((eid, w))
                    stack.append((w, eid))
        for v, pe in reversed(order):
            base = 0
            gains = []
            for eid, w in adj[v]:
                if eid == pe:
                    continue
                g0 = f[(w, 0)][0]
                g1 = f[(w, 1)][0] if cap[w] >= 1 else _NEG
                base += g0
                gain = (1 + g1) - g0 if g1 != _NEG else _NEG
                if gain > 0:
                    gains.append((gain, eid))
            gains.sort(key=lambda t: (-t[0], t[1]))
            for b in (0, 1):
                c = cap[v] - b
                if c < 0:
                    f[(v, b)] = (_NEG, [])
                    continue
                take = gains[:c]
                f[(v, b)] = (base + sum(t[0] for t in take), [t[1] for t in take])
        value, _ = f[(root, 0)]
        total += value
        # reconstruct: descend into every child, taken edges with state 1
        stack2 = [(root, 0)]
        while stack2:
            v, b = stack2.pop()
            take = set(f[(v, b)][1])
            for eid, w in children[v]:
                if eid in take:
                    chosen_all.add(eid)
                    stack2.append((w, 1))
                else:
                    stack2.append((w, 0))
    return total, chosen_all


def find_cycle(g: MultiGraph) -> tuple[list[int], list[int]]:
    """Cycle edges and cycle vertices of a graph whose every component
    has cycle rank <= 1, via iterated pendant stripping.  Handles the
    2-cycle formed by a parallel pair."""
    deg = list(g.degrees())
    alive_e = [True] * g.m
    alive_v = [True] * g.n
    queue = [v for v in range(g.n) if deg[v] == 1]
    inc = [list(g.incident(v)) for v in range(g.n)]
    while queue:
        v = queue.pop()
        if not alive_v[v] or deg[v] != 1:
            continue
        alive_v[v] = False
        for eid, w in inc[v]:
            if alive_e[eid]:
                alive_e[eid] = False
                deg[v] -= 1
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    cyc_edges = [eid for eid in range(g.m) if alive_e[eid]]
    cyc_vertices = sorted({u for eid in cyc_edges for u in g.endpoints(eid)})
    return cyc_edges, cyc_vertices


def best_degree_bounded(
    g: MultiGraph, k: int, cap: Optional[Sequence[int]] = None
) -> DegreeBoundedOptimum:
    """Maximum k-edge-colorable subgraph of a graph whose components all
    have cycle rank <= 1, with optional per-vertex caps (<= k)."""
    if k < 1:
        raise ValueError("k must be positive")
    if cap is None:
        cap = [k] * g.n
    if _has_rank2_component(g):
        raise NotUnicyclic("a component contains more than one cycle")

    cyc_edges, cyc_vertices = find_cycle(g)
    all_edges = set(range(g.m))
    if not cyc_edges:
        value, chosen = _forest_dp(g, all_edges, cap)
        return DegreeBoundedOptimum(value, frozenset(chosen))

    # group cycle edges by component
    comp_of = [0] * g.n
    for ci, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = ci
    by_comp: dict[int, list[int]] = {}
    for eid in cyc_edges:
        by_comp.setdefault(comp_of[g.endpoints(eid)[0]], []).append(eid)

    # exclusion candidates: for each cyclic component, dropping one cycle
    # edge makes everything a forest.  Evaluate the product space greedily:
    # components are independent, so optimize each separately.
    value = 0
    chosen: set[int] = set()
    handled_edges: set[int] = set()
    for ci, comp in enumerate(g.components()):
        comp_vs = set(comp)
        comp_edges = {
            eid
            for eid in all_edges
            if g.endpoints(eid)[0] in comp_vs
        }
        handled_edges |= comp_edges
        comp_cyc = by_comp.get(ci, [])
        if not comp_cyc:
            v0, ch = _forest_dp(g, comp_edges, cap)
            value += v0
            chosen |= ch
            continue
        best_v, best_ch = _NEG, set()
        for e in comp_cyc:
            v0, ch = _forest_dp(g, comp_edges - {e}, cap)
            if v0 > best_v:
                best_v, best_ch = v0, ch
        l = len(comp_cyc)
        odd = l % 2 == 1
        if k >= 3 or (k == 2 and not odd):
            cvs = {u for eid in comp_cyc for u in g.endpoints(eid)}
            if all(cap[v] >= 2 for v in cvs):
                cap2 = list(cap)
                for v in cvs:
                    cap2[v] -= 2
                v0, ch = _forest_dp(g, comp_edges - set(comp_cyc), cap2)
                if l + v0 > best_v:
                    best_v, best_ch = l + v0, ch | set(comp_cyc)
        value += best_v
        chosen |= best_ch
    return DegreeBoundedOptimum(int(value), frozenset(chosen))


def _has_rank2_component(g: MultiGraph) -> bool:
    for comp in g.components():
        vs = set(comp)
        m = sum(1 for (u, v) in g.edges if u in vs)
        if m - len(comp) + 1 > 1:
            return True
    return False


def nu_k_tree(t: MultiGraph, k: int) -> int:
    """Exact nu_k of a forest."""
    if t.cycle_rank() != 0:
        raise NotAForest("graph contains a cycle")
    return best_degree_bounded(t, k).value


def nu_k_unicyclic(g: MultiGraph, k: int) -> int:
    """Exact nu_k of a connected graph with exactly one cycle."""
    if not (g.is_connected() and g.cycle_rank() == 1):
        raise NotUnicyclic("graph is not connected with cycle rank 1")
    return best_degree_bounded(g, k).value


def cycle_deficiency(g: MultiGraph, k: int) -> CycleDeficiency:
    """x_k: minimum number of cycle edges whose removal leaves the whole
    remaining graph k-edge-colorable.  Raises DeficiencyUndefined when no
    removal works (some non-cycle degree already exceeds k)."""
    if not (g.is_connected() and g.cycle_rank() == 1):
        raise NotUnicyclic("graph is not connected with cycle rank 1")
    cyc_edges, cyc_vertices = find_cycle(g)
    l = len(cyc_edges)
    deg = g.degrees()
    on_cycle = set(cyc_vertices)
    for v in range(g.n):
        need = deg[v] - (2 if v in on_cycle else 0)
        if need > k:
            raise DeficiencyUndefined(
                f"vertex {v} keeps degree {need} > k even with all cycle edges removed"
            )
    # demands: vertex v on C needs at least deg[v] - k incident cycle edges removed
    order = _cycle_vertex_order(g, cyc_edges)
    demand = [max(0, deg[v] - k) for v in order]
    x = _min_cycle_cover(demand)
    if x == 0 and k == 2 and g.m == g.n and l % 2 == 1 and l == g.m:
        # the graph is itself an odd cycle: 2 colors need one removal
        x = 1
    return CycleDeficiency(k, x)


def _cycle_vertex_order(g: MultiGraph, cyc_edges: list[int]) -> list[int]:
    """Cycle vertices in traversal order, aligned so that vertex i sits
    between returned edge order positions i-1 and i."""
    if len(cyc_edges) == 2:  # parallel pair
        return list(g.endpoints(cyc_edges[0]))
    inc: dict[int, list[int]] = {}
    for eid in cyc_edges:
        for v in g.endpoints(eid):
            inc.setdefault(v, []).append(eid)
    start_e = cyc_edges[0]
    v = g.endpoints(start_e)[0]
    order = []
    eid = start_e
    used = set()
    while eid not in used:
        used.add(eid)
        order.append(v)
        a, b = g.endpoints(eid)
        v = b if v == a else a
        eid = next(f for f in inc[v] if f not in used) if len(used) < len(cyc_edges) else start_e
    return order


def _min_cycle_cover(demand: list[int]) -> int:
    """Minimum subset of cycle edges such that each vertex i has at least
    demand[i] chosen incident edges (edges i-1..i and i..i+1, cyclically)."""
    l = len(demand)
    if all(d == 0 for d in demand):
        return 0
    best = l + 1
    # edge i connects vertex i and vertex i+1 (mod l)
    for first in (0, 1):
        # dp over edges 1..l-1; state: previous edge chosen?
        dp = {first: first}
        ok = True
        for i in range(1, l):
            ndp: dict[int, int] = {}
            for prev, cost in dp.items():
                for cur in (0, 1):
                    # vertex i is incident to edges i-1 and i
                    if prev + cur < demand[i]:
                        continue
                    ndp[cur] = min(ndp.get(cur, l + 1), cost + cur)
            dp = ndp
            if not dp:
                ok = False
                break
        if not ok:
            continue
        for last, cost in dp.items():
            # vertex 0 is incident to edges l-1 and 0
            if last + first >= demand[0]:
                best = min(best, cost)
    if best > l:
        raise DeficiencyUndefined("cycle demands cannot be met")
    return best


def color_sparse_subgraph(
    g: MultiGraph, chosen: frozenset[int] | set[int], k: int
) -> dict[int, int]:
    """Proper k-edge-coloring (colors 1..k) of a chosen edge set whose
    components each have at most one cycle, max degree <= k, and no odd
    cycle component when k == 2."""
    sub_inc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in chosen:
        u, v = g.endpoints(eid)
        sub_inc[u].append((eid, v))
        sub_inc[v].append((eid, u))
    colors: dict[int, int] = {}
    used: list[set[int]] = [set() for _ in range(g.n)]

    sub = MultiGraph(g.n, [g.endpoints(e) for e in sorted(chosen)])
    id_map = dict(enumerate(sorted(chosen)))
    cyc_sub, _ = find_cycle(sub)
    cyc_edges = [id_map[e] for e in cyc_sub]

    # group cycle edges per component and color them first
    comp_of = {}
    for ci, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = ci
    cyc_by_comp: dict[int, list[int]] = {}
    for eid in cyc_edges:
        cyc_by_comp.setdefault(comp_of[g.endpoints(eid)[0]], []).append(eid)
    for comp_cyc in cyc_by_comp.values():
        ordered = _order_cycle_edges(g, comp_cyc)
        l = len(ordered)
        for i, eid in enumerate(ordered):
            if i == l - 1 and l % 2 == 1:
                c = 3
            else:
                c = 1 + (i % 2)
            colors[eid] = c
            u, v = g.endpoints(eid)
            used[u].add(c)
            used[v].add(c)

    # BFS outward, assigning the smallest free color at the parent side
    seen = [False] * g.n
    roots = sorted({u for eid in colors for u in g.endpoints(eid)})
    queue = list(roots) + [v for v in range(g.n) if sub_inc[v]]
    for start in queue:
        if seen[start]:
            continue
        seen[start] = True
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for eid, w in sub_inc[v]:
                if eid in colors:
                    if not seen[w]:
                        seen[w] = True
                        frontier.append(w)
                    continue
                c = next(
                    c for c in range(1, k + 1) if c not in used[v] and c not in used[w]
                )
                colors[eid] = c
                used[v].add(c)
                used[w].add(c)
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
    return colors


def _order_cycle_edges(g: MultiGraph, cyc: list[int]) -> list[int]:
    if len(cyc) == 2:
        return list(cyc)
    inc: dict[int, list[int]] = {}
    for eid in cyc:
        for v in g.endpoints(eid):
            inc.setdefault(v, []).append(eid)
    out = [cyc[0]]
    v = g.endpoints(cyc[0])[1]
    while len(out) < len(cyc):
        nxt = next(f for f in inc[v] if f not in out)
        out.append(nxt)
        a, b = g.endpoints(nxt)
        v = b if v == a else a
    return out
