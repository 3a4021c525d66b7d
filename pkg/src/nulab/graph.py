"""Immutable loopless multigraph with structural queries.

Vertices are dense integers 0..n-1, edges are unordered pairs with dense
stable identifiers 0..m-1 in construction order.  Parallel edges are
first-class; loops are rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, LoopRejected


@dataclass(frozen=True)
class StructureFlags:
    connected: bool
    cubic: bool
    bridgeless: bool
    max_degree: int
    cycle_rank: int
    is_tree: bool
    is_unicyclic: bool


class MultiGraph:
    """Loopless undirected multigraph.  Immutable after construction."""

    __slots__ = ("n", "edges", "_adj", "_degrees")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise IndexOutOfRange("vertex_count must be non-negative")
        edge_list = []
        adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for eid, (u, v) in enumerate(edges):
            if u == v:
                raise LoopRejected(f"edge {eid} is a loop at vertex {u}")
            if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
                raise IndexOutOfRange(
                    f"edge {eid} endpoint out of range for n={vertex_count}"
                )
            if u > v:
                u, v = v, u
            edge_list.append((u, v))
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        object.__setattr__(self, "n", vertex_count)
        object.__setattr__(self, "edges", tuple(edge_list))
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_degrees", tuple(len(a) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("MultiGraph is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(edge_id, other_endpoint) pairs at v, in edge order."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> set[int]:
        return {w for _, w in self.incident(v)}

    def endpoints(self, eid: int) -> tuple[int, int]:
        if not (0 <= eid < len(self.edges)):
            raise IndexOutOfRange(f"edge id {eid} out of range")
        return self.edges[eid]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in set(self.edges)  # small graphs only

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return sum(1 for e in self.edges if e == (u, v))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IndexOutOfRange(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    # -- structure -----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for _, w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def component_count(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.component_count() <= 1

    def cycle_rank(self) -> int:
        return self.m - self.n + self.component_count()

    def bridges(self) -> set[int]:
        """Edge ids whose removal increases the component count.

        Iterative depth-first low-link pass.  An edge traversed into the
        DFS tree may not be re-used as its own back edge, but a parallel
        twin may be, which is exactly what keeps doubled edges off the
        bridge list; a final multiplicity check enforces that invariant
        explicitly.
        """
        disc = [-1] * self.n
        low = [0] * self.n
        result: set[int] = set()
        counter = 0
        for root in range(self.n):
            if disc[root] != -1:
                continue
            # stack entries: (vertex, incoming edge id, iterator index)
            stack = [(root, -1, 0)]
            disc[root] = low[root] = counter
            counter += 1
            while stack:
                v, in_edge, i = stack[-1]
                if i < len(self._adj[v]):
                    stack[-1] = (v, in_edge, i + 1)
                    eid, w = self._adj[v][i]
                    if eid == in_edge:
                        continue
                    if disc[w] == -1:
                        disc[w] = low[w] = counter
                        counter += 1
                        stack.append((w, eid, 0))
                    else:
                        low[v] = min(low[v], disc[w])
                else:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            result.add(in_edge)
        # parallel twins are never bridges
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return {e for e in result if mult[self.edges[e]] == 1}

    def structure_flags(self) -> StructureFlags:
        connected = self.is_connected()
        rank = self.cycle_rank()
        return StructureFlags(
            connected=connected,
            cubic=self.n > 0 and all(d == 3 for d in self._degrees),
            bridgeless=not self.bridges(),
            max_degree=self.max_degree(),
            cycle_rank=rank,
            is_tree=connected and rank == 0,
            is_unicyclic=connected and rank == 1,
        )

    # -- derived graphs ------------------------------------------------

    def without_edges(self, drop: Iterable[int]) -> "MultiGraph":
        """Same vertex set, listed edges removed (edge ids renumbered)."""
        dropped = set(drop)
        return MultiGraph(
            self.n, [e for i, e in enumerate(self.edges) if i not in dropped]
        )

    def without_vertex(self, v: int) -> "MultiGraph":
        """Delete v and its edges; remaining vertices are relabeled densely."""
        self._check_vertex(v)
        relabel = {}
        for w in range(self.n):
            if w != v:
                relabel[w] = len(relabel)
        kept = [
            (relabel[a], relabel[b]) for (a, b) in self.edges if v not in (a, b)
        ]
        return MultiGraph(self.n - 1, kept)

    def induced(self, vertices: Sequence[int]) -> "MultiGraph":
        keep = {v: i for i, v in enumerate(vertices)}
        kept = [
            (keep[a], keep[b]) for (a, b) in self.edges if a in keep and b in keep
        ]
        return MultiGraph(len(keep), kept)


def build(vertex_count: int, edges: Iterable[tuple[int, int]]) -> MultiGraph:
    """Construct an immutable multigraph, rejecting loops and bad endpoints."""
    return MultiGraph(vertex_count, edges)
