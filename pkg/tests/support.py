"""Synthetic gadgets for driving the case tables directly.

A StubGadget realizes any admitted operation with canonical tree shapes over
freshly allocated vertex ids, so a lift table can be exercised for every
label combination without constructing a graph that actually reaches it.
Stub realizations do not balance a vertex ledger, so tests using them turn
off Gadget validation.
"""

from __future__ import annotations

import itertools

from quadparts.graphs import norm_edge
from quadparts.labels import Label, admits, canonical_member
from quadparts.engine.model import (
    BoundTree,
    EngineBug,
    LabeledEdge,
    Realization,
    Split,
    Subdivide,
)

_counter = itertools.count(10_000)


def fresh() -> int:
    return next(_counter)


def bind_shape(ts, root: int) -> BoundTree:
    """Canonical member of the set bound to fresh ids below the given root."""
    shape = canonical_member(ts)
    ids = {shape.root: root}
    for slot in range(shape.order):
        if slot != shape.root:
            ids[slot] = fresh()
    edges = tuple(
        (ids[a], ids[parent]) for a, parent in enumerate(shape.parent) if parent is not None
    )
    dummies = frozenset(ids[d] for d in shape.dummies)
    return BoundTree(root, edges, dummies)


class StubGadget:
    """Duck-typed gadget: canonical realizations, empty part stream."""

    def __init__(self, label: Label, u: int, v: int):
        self.label = label
        self.u = u
        self.v = v
        self.scope = frozenset()
        self.provenance = f"stub({label.name})"

    def realize(self, op):
        if isinstance(op, Subdivide):
            if not self.label.subdividable or op.k != self.label.weight:
                raise EngineBug(f"stub {self.label} cannot {op}")
            ids = [fresh() for _ in range(op.k)]
            path = [self.u, *ids, self.v]
            frag = frozenset(norm_edge(a, b) for a, b in zip(path, path[1:]))
            return Realization(subdiv=tuple(ids), fragment=frag)
        witness = admits(self.label, op.p, op.q)
        if witness is None:
            raise EngineBug(f"stub {self.label} does not admit {op}")
        p = bind_shape(witness[0], self.u)
        q = bind_shape(witness[1], self.v)
        frag = frozenset(norm_edge(a, b) for t in (p, q) for a, b in t.edges)
        return Realization(p_tree=p, q_tree=q, fragment=frag)


def stub_edge(label: Label, u: int, v: int, eid: int = 0) -> LabeledEdge:
    return LabeledEdge(eid, u, v, label, StubGadget(label, u, v))


def all_ops(label: Label):
    """Every operation the label allows: each catalog pair plus subdivision."""
    ops = [Split(p, q) for p, q in label.pairs]
    if label.subdividable:
        ops.append(Subdivide(label.weight))
    return ops
