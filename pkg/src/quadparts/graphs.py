"""Core graph types and connectivity primitives.

Vertices are dense integer indices ``0..n-1``.  :class:`SimpleGraph` is the
immutable world of inputs and outputs; :class:`Multigraph` allows parallel
edges with stable edge ids and is the mutable state of the reduction engine.
All algorithms here are written for desk-scale graphs (tens to a few
thousand vertices); clarity wins over asymptotics.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


def norm_edge(u: int, v: int) -> tuple[int, int]:
    """Return the canonically ordered endpoint pair of an undirected edge."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph: no loops, no parallel edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge {(u, v)} is not canonically ordered")
            if not 0 <= u < self.n or not v < self.n:
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{self.n - 1}")

    @staticmethod
    def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return SimpleGraph(n, frozenset(norm_edge(u, v) for u, v in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def adj(self) -> list[list[int]]:
        """Adjacency lists, each sorted ascending."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
            out[v].append(u)
        for row in out:
            row.sort()
        return out

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


class Multigraph:
    """Mutable multigraph over an explicit vertex set.

    Parallel edges are allowed; self-loops are not.  Edge ids are unique and
    stable across mutations, which the reduction engine relies on for
    deterministic scanning and provenance.
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        self._vertices: set[int] = set(vertices)
        self._edges: dict[int, tuple[int, int]] = {}
        self._next_eid = 0
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u not in self._vertices or v not in self._vertices:
            raise ValueError(f"edge {(u, v)} references a missing vertex")
        eid = self._next_eid
        self._next_eid += 1
        self._edges[eid] = (u, v)
        return eid

    def remove_edge(self, eid: int) -> None:
        del self._edges[eid]

    def remove_vertex(self, v: int) -> None:
        if any(v in ends for ends in self._edges.values()):
            raise ValueError(f"vertex {v} still has incident edges")
        self._vertices.remove(v)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._edges[eid]

    def edge_tuples(self) -> list[tuple[int, int, int]]:
        """All edges as (eid, u, v), sorted by edge id."""
        return [(eid, u, v) for eid, (u, v) in sorted(self._edges.items())]

    def incident(self, v: int) -> list[int]:
        return sorted(eid for eid, ends in self._edges.items() if v in ends)

    def degree(self, v: int) -> int:
        return sum(1 for ends in self._edges.values() if v in ends)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self._edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {eid}")

    def copy(self) -> "Multigraph":
        mg = Multigraph(self._vertices)
        mg._edges = dict(self._edges)
        mg._next_eid = self._next_eid
        return mg

    def to_simple(self) -> SimpleGraph:
        """Collapse to a simple graph on 0..max-vertex (used for cut search)."""
        if not self._vertices:
            return SimpleGraph(0, frozenset())
        n = max(self._vertices) + 1
        return SimpleGraph(n, frozenset(norm_edge(u, v) for u, v in self._edges.values()))


def _vertex_edge_lists(g: SimpleGraph | Multigraph) -> tuple[list[int], list[tuple[int, int, int]]]:
    if isinstance(g, SimpleGraph):
        return list(range(g.n)), [(i, u, v) for i, (u, v) in enumerate(sorted(g.edges))]
    return sorted(g.vertices), g.edge_tuples()


def is_biconnected(g: SimpleGraph | Multigraph) -> bool:
    """True iff g is connected, has at least 2 vertices and no cutvertex.

    A two-vertex graph with at least one edge counts as biconnected.  For
    multigraphs, a parallel edge to the DFS parent acts as a back edge (only
    the tree edge itself, identified by edge id, is skipped).
    """
    verts, edges = _vertex_edge_lists(g)
    if len(verts) < 2:
        return False
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in verts}
    for eid, u, v in edges:
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    for lst in adj.values():
        lst.sort()

    root = verts[0]
    disc = {root: 0}
    low = {root: 0}
    entry = {root: -1}
    iters = {root: iter(adj[root])}
    stack = [root]
    time = 1
    root_children = 0
    while stack:
        v = stack[-1]
        nxt = None
        for w, eid in iters[v]:
            if eid == entry[v]:
                continue
            if w in disc:
                low[v] = min(low[v], disc[w])
            else:
                nxt = (w, eid)
                break
        if nxt is None:
            stack.pop()
            if stack:
                p = stack[-1]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    return False
            continue
        w, eid = nxt
        if v == root:
            root_children += 1
        disc[w] = time
        low[w] = time
        time += 1
        entry[w] = eid
        iters[w] = iter(adj[w])
        stack.append(w)
    if len(disc) != len(verts):
        return False
    return root_children < 2


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        return True
    return len(_components_of(g.adj(), set(range(g.n)))) <= 1


def _components_of(adj: list[list[int]], alive: set[int]) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by `alive`, sorted by (size, min vertex)."""
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = {s}
        dq = deque([s])
        seen.add(s)
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if y in alive and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    dq.append(y)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (len(c), min(c)))
    return comps


def connected_components(g: SimpleGraph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    alive = set(range(g.n)) - set(removed)
    return _components_of(g.adj(), alive)


def induced_is_connected(g: SimpleGraph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    adj = g.adj()
    start = min(vs)
    seen = {start}
    dq = deque([start])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y in vs and y not in seen:
                seen.add(y)
                dq.append(y)
    return seen == vs


def smallest_2cut_component(g: SimpleGraph) -> tuple[tuple[int, int], frozenset[int]] | None:
    """A 2-cut {u,v} minimizing the order of the smallest component of g - {u,v}.

    Returns None when g is 3-connected (or too small to have a 2-cut).
    Raises ValueError when g is not 2-connected.  Deterministic: pairs are
    scanned in lexicographic order and only strictly smaller components
    replace the incumbent.
    """
    if not is_biconnected(g):
        raise ValueError("graph is not 2-connected")
    if g.n < 4:
        return None
    adj = g.adj()
    best: tuple[tuple[int, int], frozenset[int]] | None = None
    for u, v in combinations(range(g.n), 2):
        alive = set(range(g.n)) - {u, v}
        comps = _components_of(adj, alive)
        if len(comps) >= 2:
            c = comps[0]
            if best is None or len(c) < len(best[1]):
                best = ((u, v), c)
    return best


def bfs_distances(g: SimpleGraph, source: int, limit: int | None = None) -> dict[int, int]:
    adj = g.adj()
    dist = {source: 0}
    dq = deque([source])
    while dq:
        x = dq.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                dq.append(y)
    return dist


def graph_power(g: SimpleGraph, k: int) -> SimpleGraph:
    """Graph on the same vertices joining pairs at distance between 1 and k."""
    if k < 1:
        raise ValueError("power must be at least 1")
    edges: set[tuple[int, int]] = set()
    for s in range(g.n):
        for t in bfs_distances(g, s, limit=k):
            if t > s:
                edges.add((s, t))
    return SimpleGraph(g.n, frozenset(edges))


def diameter(g: SimpleGraph) -> int:
    """Largest finite distance; raises on disconnected input."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if len(dist) != g.n:
            raise ValueError("graph is disconnected")
        best = max(best, max(dist.values()))
    return best
