"""Small shared vocabulary for the case lifts."""

from __future__ import annotations

from ..labels import Pair, TreeSet
from .model import EngineBug, Realization, merge_fragments, merge_parts

PLAIN = {0: TreeSet.S0, 1: TreeSet.S1, 2: TreeSet.S2, 3: TreeSet.S3}
PLUS = {1: TreeSet.S1P, 2: TreeSet.S2P, 3: TreeSet.S3P}

_KIND = {
    TreeSet.S0: ("plain", 0), TreeSet.S1: ("plain", 1),
    TreeSet.S2: ("plain", 2), TreeSet.S3: ("plain", 3),
    TreeSet.S1P: ("plus", 1), TreeSet.S2P: ("plus", 2), TreeSet.S3P: ("plus", 3),
    TreeSet.S2M: ("minus", 2), TreeSet.S3M: ("minus", 3), TreeSet.S5M: ("minus", 5),
}


def pair_shape(pair: Pair) -> tuple[str, int, int]:
    """Classify a plain/plus pair: ('plain'|'plus_right'|'plus_left', x, y)."""
    (ka, x), (kb, y) = _KIND[pair[0]], _KIND[pair[1]]
    if ka == "plain" and kb == "plain":
        return "plain", x, y
    if ka == "plain" and kb == "plus":
        return "plus_right", x, y
    if ka == "plus" and kb == "plain":
        return "plus_left", x, y
    raise EngineBug(f"pair {pair} is not a plain/plus combination")


def collect(*reals: Realization):
    """Fragment edges and cascaded parts of several child realizations."""
    return merge_fragments(*reals), merge_parts(*reals)
