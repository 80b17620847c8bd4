"""Local partition search used while composing gadget realizations.

When a rewrite finalizes the vertices gathered around an eliminated vertex,
the exact grouping into nearly connected 4-sets depends on the shapes the
child realizations happened to produce.  Rather than hard-coding one grouping
per case, the lifts hand the materialized local fragment (real graph edges)
to a tiny exact search.  A failure here means a case table was transcribed
wrongly, so it traps loudly instead of returning None.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

from .model import EngineBug


class Fragment:
    """A small scratch graph of real edges materialized by child realizations."""

    def __init__(self, edges: Iterable[tuple[int, int]], extra_vertices: Iterable[int] = ()):
        self.adj: dict[int, set[int]] = {}
        for v in extra_vertices:
            self.adj.setdefault(v, set())
        for a, b in edges:
            self.adj.setdefault(a, set()).add(b)
            self.adj.setdefault(b, set()).add(a)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def connected(self, vs: frozenset[int]) -> bool:
        if not vs:
            return False
        start = min(vs)
        if start not in self.adj:
            return False
        seen = {start}
        dq = deque([start])
        while dq:
            x = dq.popleft()
            for y in self.adj.get(x, ()):
                if y in vs and y not in seen:
                    seen.add(y)
                    dq.append(y)
        return seen == set(vs)

    def witness_for(self, part: frozenset[int]) -> frozenset[int] | None:
        """Connected superset of `part` within the fragment, at most one extra vertex."""
        if part - set(self.adj):
            return None
        if self.connected(part):
            return part
        for x in self.vertices:
            if x in part:
                continue
            cand = part | {x}
            if self.connected(cand):
                return cand
        return None


def finalize(fragment: Fragment, finalize_set: Iterable[int], provenance: str) -> tuple[frozenset[int], ...]:
    """Partition `finalize_set` into nearly connected 4-sets within the fragment.

    Canonical backtracking (each part is seeded with the lowest unplaced
    vertex, candidate triples in lexicographic order) makes the outcome
    deterministic.  Traps when no grouping exists.
    """
    todo = sorted(set(finalize_set))
    if len(todo) % 4 != 0:
        raise EngineBug(f"finalize set {todo} has size {len(todo)}, not a multiple of 4", provenance)
    chosen: list[frozenset[int]] = []

    def solve(pool: list[int]) -> bool:
        if not pool:
            return True
        seed, rest = pool[0], pool[1:]
        for combo in combinations(rest, 3):
            part = frozenset((seed, *combo))
            if fragment.witness_for(part) is None:
                continue
            chosen.append(part)
            if solve([v for v in rest if v not in part]):
                return True
            chosen.pop()
        return False

    if not solve(todo):
        raise EngineBug(f"no nearly connected grouping of {todo} in the local fragment", provenance)
    return tuple(chosen)


def try_finalize(fragment: Fragment, finalize_set: Iterable[int]) -> tuple[frozenset[int], ...] | None:
    """Like :func:`finalize` but returns None instead of trapping; used by
    lifts that search over several vertex allocations."""
    try:
        return finalize(fragment, finalize_set, "probe")
    except EngineBug:
        return None


def assert_part(fragment: Fragment, part: Iterable[int], provenance: str) -> frozenset[int]:
    """Validate one explicitly constructed 4-set against the fragment."""
    p = frozenset(part)
    if len(p) != 4:
        raise EngineBug(f"constructed part {sorted(p)} does not have 4 vertices", provenance)
    if fragment.witness_for(p) is None:
        raise EngineBug(f"constructed part {sorted(p)} is not nearly connected locally", provenance)
    return p


