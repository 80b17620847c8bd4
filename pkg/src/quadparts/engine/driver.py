"""Reduction driver: repeatedly rewrite the labeled block until one edge
remains, then realize the accumulated gadget cascade into a verified
partition of the original vertices into nearly connected 4-sets.

Reduction priority is fixed (parallel pair, then degree-2 contraction, then
a zero-weight strip at a removable vertex, then an absorbable edge, then a
removable vertex), scanning lowest ids first, so runs are reproducible.
After every step the driver asserts the two structural invariants: total
weight plus order stays divisible by 4, and the graph remains a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..graphs import SimpleGraph, is_biconnected
from ..labels import CATALOG, TreeSet
from ..oracle import Part, Partition, is_nearly_connected
from .model import (
    EdgeView,
    EngineBug,
    Gadget,
    LabeledEdge,
    LabeledMultigraph,
    Realization,
    Split,
    Subdivide,
    leaf_gadget,
)
from .parallel import build_parallel_gadget
from .reducible import (
    build_deg3_general,
    build_deg3_pair_config,
    build_deg3_sum9_a,
    build_deg3_sum9_b,
    build_deg3_sum9_c,
    build_deg3_sum10,
    build_deg4plus_heavy,
    build_deg4plus_light,
    build_edge_absorb,
    eliminate_with_fixed_splits,
)
from .series import build_series_gadget

S0, S1, S2, S3 = TreeSet.S0, TreeSet.S1, TreeSet.S2, TreeSet.S3
S3P = TreeSet.S3P


# ---------------------------------------------------------------------------
# Reduction choices


@dataclass(frozen=True)
class Base:
    pass


@dataclass(frozen=True)
class Parallel:
    e1: int
    e2: int


@dataclass(frozen=True)
class Series:
    v: int


@dataclass(frozen=True)
class ReducibleEdge:
    e1: int
    e2: int
    v: int


@dataclass(frozen=True)
class ReducibleVertex:
    v: int


ReductionChoice = Base | Parallel | Series | ReducibleEdge | ReducibleVertex


@dataclass(frozen=True)
class TraceStep:
    index: int
    kind: str
    detail: str
    mod4_ok: bool
    block_ok: bool
    edges_after: int
    vertices_after: int

    def format(self) -> str:
        return (f"step={self.index} kind={self.kind} detail={self.detail} "
                f"mod4={int(self.mod4_ok)} block={int(self.block_ok)} "
                f"edges={self.edges_after} vertices={self.vertices_after}")


# ---------------------------------------------------------------------------
# Setup


def init_labeled(g: SimpleGraph) -> LabeledMultigraph:
    """Label every edge of a 2-connected order-4k graph with the empty label."""
    if g.n % 4 != 0:
        raise ValueError(f"graph order {g.n} is not divisible by 4")
    if not is_biconnected(g):
        raise ValueError("graph is not 2-connected")
    lg = LabeledMultigraph(g)
    l0 = CATALOG["L0"]
    for u, v in g.sorted_edges():
        lg.add_labeled(u, v, l0, leaf_gadget(l0, u, v))
    if not lg.invariant_ok():
        raise EngineBug("weight/order invariant broken at initialization")
    return lg


# ---------------------------------------------------------------------------
# Reduction search


def _components_multi(lg: LabeledMultigraph, removed: set[int]) -> list[frozenset[int]]:
    alive = set(lg.vertices) - removed
    adj: dict[int, set[int]] = {x: set() for x in alive}
    for _, a, b in lg.graph.edge_tuples():
        if a in alive and b in alive:
            adj[a].add(b)
            adj[b].add(a)
    comps: list[frozenset[int]] = []
    seen: set[int] = set()
    for s in sorted(alive):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (len(c), min(c)))
    return comps


def _smallest_cut_side(lg: LabeledMultigraph) -> tuple[tuple[int, int], frozenset[int]] | None:
    """2-cut of the current block minimizing the small side; None if 3-connected."""
    verts = sorted(lg.vertices)
    if len(verts) < 4:
        return None
    best: tuple[tuple[int, int], frozenset[int]] | None = None
    for u, v in combinations(verts, 2):
        comps = _components_multi(lg, {u, v})
        if len(comps) >= 2:
            c = comps[0]
            if best is None or len(c) < len(best[1]):
                best = ((u, v), c)
    return best


def _without_vertex_is_block(lg: LabeledMultigraph, v: int) -> bool:
    mg = lg.graph.copy()
    for eid in mg.incident(v):
        mg.remove_edge(eid)
    mg.remove_vertex(v)
    return is_biconnected(mg)


def _without_edge_is_block(lg: LabeledMultigraph, eid: int) -> bool:
    mg = lg.graph.copy()
    mg.remove_edge(eid)
    return is_biconnected(mg)


def _is_reducible_vertex(lg: LabeledMultigraph, v: int) -> bool:
    if lg.degree(v) < 3:
        return False
    outward_l31 = sum(1 for eid in lg.incident(v) if lg.view(eid, v).label.name == "L31")
    if outward_l31 > 1:
        return False
    return _without_vertex_is_block(lg, v)


def find_reduction(lg: LabeledMultigraph) -> ReductionChoice:
    """Next reduction under the fixed priority order; traps if none exists."""
    eids = lg.edge_ids()
    if len(eids) == 1:
        return Base()
    seen_pairs: dict[tuple[int, int], int] = {}
    for eid in eids:
        le = lg.edges[eid]
        key = (min(le.u, le.v), max(le.u, le.v))
        if key in seen_pairs:
            return Parallel(seen_pairs[key], eid)
        seen_pairs[key] = eid
    for v in sorted(lg.vertices):
        if lg.degree(v) == 2:
            return Series(v)
    cut = _smallest_cut_side(lg)
    if cut is None:
        vertex_pool = sorted(lg.vertices)
        host_pool = vertex_pool
    else:
        (cu, cv), comp = cut
        vertex_pool = sorted(comp)
        host_pool = sorted(set(comp) | {cu, cv})
    reducible = [v for v in vertex_pool if _is_reducible_vertex(lg, v)]
    for v in reducible:
        if any(lg.edges[eid].weight() == 0 for eid in lg.incident(v)):
            return ReducibleVertex(v)
    for y in host_pool:
        for eid in lg.incident(y):
            if lg.view(eid, y).label.name != "L32":
                continue
            if not _without_edge_is_block(lg, eid):
                continue
            for eid2 in lg.incident(y):
                if eid2 != eid and lg.view(eid2, y).label.name in ("L32", "L30"):
                    return ReducibleEdge(eid, eid2, y)
    if reducible:
        return ReducibleVertex(reducible[0])
    raise EngineBug("no reduction applies; the block analysis promises one")


# ---------------------------------------------------------------------------
# Reduction application


def reduce_parallel(lg: LabeledMultigraph, eid1: int, eid2: int) -> str:
    a, b = lg.edges[eid1], lg.edges[eid2]
    u = min(a.u, a.v)
    v = max(a.u, a.v)
    va, vb = EdgeView(a, u), EdgeView(b, u)
    e1, e2 = sorted((va, vb), key=lambda e: (e.weight(), e.eid))
    if e1.weight() == 0:
        real = e1.request(Split(S0, S0))
        lg.emit(real.parts)
        lg.remove_labeled(e1.eid)
        return f"drop[{e1.label.name}] eid={e1.eid}"
    if e1.label.name == "L30" and e2.label.name != "L30":
        e1, e2 = e2, e1
    tag = f"parallel[{e1.label.name}+{e2.label.name}]@({u},{v})"
    label, gadget = build_parallel_gadget(e1, e2, u, v, tag)
    lg.remove_labeled(eid1)
    lg.remove_labeled(eid2)
    lg.add_labeled(u, v, label, gadget)
    return tag


def reduce_series(lg: LabeledMultigraph, v: int) -> str:
    ea, eb = lg.incident(v)
    na, nb = lg.other_end(ea, v), lg.other_end(eb, v)
    if (lg.edges[ea].weight(), ea) <= (lg.edges[eb].weight(), eb):
        e1, e2, v1, v2 = lg.view(ea, na), lg.view(eb, v), na, nb
    else:
        e1, e2, v1, v2 = lg.view(eb, nb), lg.view(ea, v), nb, na
    tag = f"series[{e1.label.name}+{e2.label.name}]@{v}"
    label, gadget = build_series_gadget(e1, e2, v, v1, v2, tag)
    lg.remove_labeled(ea)
    lg.remove_labeled(eb)
    lg.remove_vertex(v)
    lg.add_labeled(v1, v2, label, gadget)
    return tag


def reduce_edge(lg: LabeledMultigraph, eid1: int, eid2: int, v: int) -> str:
    e1, e2 = lg.view(eid1, v), lg.view(eid2, v)
    v2 = e2.head
    tag = f"absorb[{e1.label.name}->{e2.label.name}]@{v}"
    label, gadget = build_edge_absorb(e1, e2, v, v2, tag)
    lg.remove_labeled(eid1)
    lg.remove_labeled(eid2)
    lg.add_labeled(v, v2, label, gadget)
    return tag


def _strip_weight0(lg: LabeledMultigraph, v: int) -> str:
    eid = min(e for e in lg.incident(v) if lg.edges[e].weight() == 0)
    view = lg.view(eid, v)
    real = view.request(Split(S0, S0))
    lg.emit(real.parts)
    lg.remove_labeled(eid)
    return f"strip[{view.label.name}] eid={eid}@{v}"


def reduce_vertex(lg: LabeledMultigraph, v: int) -> str:
    views = [lg.view(eid, v) for eid in lg.incident(v)]
    if any(e.weight() == 0 for e in views):
        raise EngineBug(f"vertex {v} still carries a weight-0 edge", "reduce_vertex")
    d = len(views)
    if d == 3:
        return _reduce_vertex_deg3(lg, v, views)
    return _reduce_vertex_deg4plus(lg, v, views)


def _remove_star(lg: LabeledMultigraph, v: int, views: list[EdgeView]) -> None:
    for e in views:
        lg.remove_labeled(e.eid)
    lg.remove_vertex(v)


def _reduce_vertex_deg3(lg: LabeledMultigraph, v: int, views: list[EdgeView]) -> str:
    a, b, c = sorted(views, key=lambda e: (-e.weight(), e.eid))
    i, j, k = a.weight(), b.weight(), c.weight()
    s = i + j + k + 1
    names = f"{a.label.name}/{b.label.name}/{c.label.name}"
    if s == 4:
        parts = eliminate_with_fixed_splits([(a, (S1, S0)), (b, (S1, S0)), (c, (S1, S0))],
                                            v, True, f"vertex3[{names}]@{v}")
        lg.emit(parts)
        _remove_star(lg, v, views)
        return f"vertex3-flat[{names}]@{v}"
    if s == 8:
        if j == 2:
            ops = [(a, (S3, S0)), (b, (S2, S0)), (c, (S2, S0))]
        else:
            ops = [(a, (S3, S0)), (b, (S3, S0)), (c, (S1, S0))]
        parts = eliminate_with_fixed_splits(ops, v, True, f"vertex3[{names}]@{v}")
        lg.emit(parts)
        _remove_star(lg, v, views)
        return f"vertex3-flat[{names}]@{v}"
    tag = f"vertex3[{names}]@{v}"
    if 5 <= s <= 7:
        if k == 1 and b.label.name == "L21" and a.label.name in ("L21", "L32"):
            label, gadget, ends = build_deg3_pair_config(a, b, c, v, tag)
        else:
            label, gadget, ends = build_deg3_general(a, b, c, v, tag)
    elif s == 9:
        if b.label.name == "L31":
            a, b = b, a
        if a.label.name == "L31" and b.label.name == "L30" and c.label.name in ("L2", "L20"):
            label, gadget, ends = build_deg3_sum9_a(a, b, c, v, tag)
        elif a.label.name == "L31" and b.label.name == "L32" and c.label.name in ("L2", "L20"):
            label, gadget, ends = build_deg3_sum9_b(a, b, c, v, tag)
        else:
            label, gadget, ends = build_deg3_sum9_c(a, b, c, v, tag)
    elif s == 10:
        heavies = sorted(views, key=lambda e: (e.label.name != "L31", e.eid))
        a, b, c = heavies[0], heavies[1], heavies[2]
        if b.label.name != "L30" or c.label.name != "L30":
            raise EngineBug(f"unabsorbed asymmetric weight-3 edge at {v} ({names})", tag)
        label, gadget, ends = build_deg3_sum10(a, b, c, v, tag)
    else:
        raise EngineBug(f"impossible combined weight {s} at vertex {v}", tag)
    _remove_star(lg, v, views)
    lg.add_labeled(ends[0], ends[1], label, gadget)
    return tag


def _reduce_vertex_deg4plus(lg: LabeledMultigraph, v: int, views: list[EdgeView]) -> str:
    d = len(views)
    names = "/".join(e.label.name for e in views)
    plain = {1: S1, 2: S2, 3: S3}
    for ei, ej in combinations(sorted(views, key=lambda e: e.eid), 2):
        if ei.weight() + ej.weight() == 4:
            ops = [(ei, (plain[ei.weight()], S0)), (ej, (plain[ej.weight()], S0))]
            parts = eliminate_with_fixed_splits(ops, v, False, f"vertex4+pair[{names}]@{v}")
            lg.emit(parts)
            lg.remove_labeled(ei.eid)
            lg.remove_labeled(ej.eid)
            return f"vertex4-pair[{ei.label.name}+{ej.label.name}]@{v}"
    weights = sorted(e.weight() for e in views)
    if weights[-1] < 3:
        ordered = sorted(views, key=lambda e: (-e.weight(), e.eid))
        if d >= 6:
            tail = ordered[-4:]
            parts = eliminate_with_fixed_splits([(e, (S1, S0)) for e in tail], v, False,
                                                f"vertex4+flat[{names}]@{v}")
            lg.emit(parts)
            for e in tail:
                lg.remove_labeled(e.eid)
            return f"vertex4-flat[{names}]@{v}"
        if d == 5 and ordered[0].weight() == 2:
            chosen = [(ordered[0], (S2, S0)), (ordered[-2], (S1, S0)), (ordered[-1], (S1, S0))]
            parts = eliminate_with_fixed_splits(chosen, v, False, f"vertex4+flat[{names}]@{v}")
            lg.emit(parts)
            for e, _ in chosen:
                lg.remove_labeled(e.eid)
            return f"vertex4-flat[{names}]@{v}"
        e1, e2 = ordered[0], ordered[1]
        singles = ordered[2:]
        tag = f"vertex4-light[{names}]@{v}"
        label, gadget, ends = build_deg4plus_light(e1, e2, singles, v, tag)
        _remove_star(lg, v, views)
        lg.add_labeled(ends[0], ends[1], label, gadget)
        return tag
    if 1 in weights:
        raise EngineBug(f"mixed unit and weight-3 edges survived pair elimination at {v}", names)
    plain_heavy = sorted((e for e in views if e.label.name == "L30"), key=lambda e: e.eid)
    if len(plain_heavy) < 2:
        raise EngineBug(f"expected two plain weight-3 edges at {v}, got {names}", names)
    e3, e4 = plain_heavy[0], plain_heavy[1]
    tag = f"vertex4-heavy[{e3.label.name}+{e4.label.name}]@{v}"
    label, gadget, ends = build_deg4plus_heavy(e3, e4, v, tag)
    lg.remove_labeled(e3.eid)
    lg.remove_labeled(e4.eid)
    lg.add_labeled(ends[0], ends[1], label, gadget)
    return tag


def apply_reduction(lg: LabeledMultigraph, choice: ReductionChoice) -> tuple[str, str]:
    if isinstance(choice, Parallel):
        return "parallel", reduce_parallel(lg, choice.e1, choice.e2)
    if isinstance(choice, Series):
        return "series", reduce_series(lg, choice.v)
    if isinstance(choice, ReducibleEdge):
        return "absorb", reduce_edge(lg, choice.e1, choice.e2, choice.v)
    if isinstance(choice, ReducibleVertex):
        if any(lg.edges[eid].weight() == 0 for eid in lg.incident(choice.v)):
            return "strip", _strip_weight0(lg, choice.v)
        return "vertex", reduce_vertex(lg, choice.v)
    raise EngineBug(f"cannot apply reduction choice {choice}")


# ---------------------------------------------------------------------------
# Base case and the full pipeline


def solve_base(lg: LabeledMultigraph) -> tuple[frozenset[int], ...]:
    """Realize the final single edge; its weight is forced to 2."""
    eids = lg.edge_ids()
    if len(eids) != 1:
        raise EngineBug(f"base case reached with {len(eids)} edges")
    le = lg.edges[eids[0]]
    if le.weight() != 2:
        raise EngineBug(f"final edge has weight {le.weight()}, the invariant forces 2")
    if le.label.name == "L2":
        real = le.gadget.realize(Subdivide(2))
        path_part = frozenset({le.u, *real.subdiv, le.v})
        return real.parts + (path_part,)
    if le.label.name in ("L20", "L21"):
        real = le.gadget.realize(Split(S3, S3P))
        return real.parts + (frozenset(real.p_tree.actives), frozenset(real.q_tree.actives))
    raise EngineBug(f"final edge carries unexpected label {le.label}")


def run_reduction(g: SimpleGraph) -> tuple[tuple[frozenset[int], ...], list[TraceStep]]:
    """Reduce to a single edge and realize; returns raw parts and the trace."""
    lg = init_labeled(g)
    trace: list[TraceStep] = []
    step = 0
    budget = g.m + g.n + 8
    while len(lg.edges) > 1:
        if step > budget:
            raise EngineBug("reduction failed to terminate within the edge budget")
        choice = find_reduction(lg)
        kind, detail = apply_reduction(lg, choice)
        mod4 = lg.invariant_ok()
        block = lg.is_block()
        trace.append(TraceStep(step, kind, detail, mod4, block,
                               len(lg.edges), len(lg.vertices)))
        if not mod4:
            raise EngineBug(f"weight/order invariant broken after {detail}")
        if not block:
            raise EngineBug(f"graph stopped being a block after {detail}")
        step += 1
    parts = solve_base(lg) + tuple(lg.emitted)
    return parts, trace


def partition_2connected(g: SimpleGraph) -> Partition:
    """Partition V(g) into nearly connected 4-sets (g 2-connected, 4 | n).

    Deterministic, and self-checking: coverage, disjointness and
    near-connectedness of every part are verified against g before returning.
    """
    parts, trace = run_reduction(g)
    return _verified(g, parts, trace)


def partition_with_trace(g: SimpleGraph) -> tuple[Partition, list[TraceStep]]:
    parts, trace = run_reduction(g)
    return _verified(g, parts, trace), trace


def _verified(g: SimpleGraph, parts: tuple[frozenset[int], ...],
              trace: list[TraceStep]) -> Partition:
    seen: set[int] = set()
    for p in parts:
        if len(p) != 4:
            raise EngineBug(f"emitted part {sorted(p)} does not have 4 vertices")
        if p & seen:
            raise EngineBug(f"emitted parts overlap on {sorted(p & seen)}")
        seen |= p
    if seen != set(range(g.n)):
        raise EngineBug(f"parts cover {len(seen)} of {g.n} vertices")
    out = []
    for p in sorted(parts, key=lambda s: min(s)):
        witness = is_nearly_connected(g, p)
        if witness is None:
            raise EngineBug(f"emitted part {sorted(p)} is not nearly connected in the input")
        out.append(Part(p, witness))
    return Partition(tuple(out))
