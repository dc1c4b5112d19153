"""Exhaustive one-per-isomorphism-class generation of small graphs.

Level construction: every connected graph on k+1 vertices arises from a
connected graph on k vertices by adding one vertex joined to a nonempty
neighbor set (delete any spanning-tree leaf to see this), so extending
each class representative by every nonempty subset and deduplicating by
canonical form covers the connected classes exactly. Levels are cached
per process; predicates (biconnected, anything else over connected
graphs) filter the cached stream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .canon import canonical_form
from .errors import OrderLimitError
from .graphs import Graph, graph_from_graph6

ENUMERATION_LIMIT = 9

_level_cache: dict[int, tuple[str, ...]] = {}


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Order plus canonical graph6 string; equal codes mean isomorphic."""

    n: int
    code: str

    @classmethod
    def of(cls, g: Graph) -> "CanonicalCode":
        return cls(n=g.n, code=canonical_form(g))


def _connected_codes(n: int, rng: random.Random | None = None) -> tuple[str, ...]:
    """Canonical codes of all connected isomorphism classes of order n."""
    if n in _level_cache:
        return _level_cache[n]
    if n == 1:
        codes: tuple[str, ...] = (canonical_form(Graph(1, frozenset())),)
        _level_cache[1] = codes
        return codes
    base = list(_connected_codes(n - 1, rng))
    if rng is not None:
        rng.shuffle(base)
    out: set[str] = set()
    k = n - 1
    masks = list(range(1, 1 << k))
    for code in base:
        g = graph_from_graph6(code)
        if rng is not None:
            rng.shuffle(masks)
        for mask in masks:
            pairs = list(g.edges)
            for u in range(k):
                if mask >> u & 1:
                    pairs.append((u, k))
            out.add(canonical_form(Graph(n, frozenset(pairs))))
    codes = tuple(sorted(out))
    if rng is None:
        _level_cache[n] = codes
    return codes


def enumerate_graphs(
    n: int,
    predicate: Callable[[Graph], bool],
    rng: random.Random | None = None,
) -> Iterator[Graph]:
    """Yield one canonical representative per connected class passing the
    predicate, in canonical-code order.

    The predicate is applied within the connected classes; disconnected
    graphs are never produced. Passing an rng permutes internal branching
    order (a robustness knob for tests); the emitted set is unchanged.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise OrderLimitError(
            f"enumeration is supported for 1 <= n <= {ENUMERATION_LIMIT}, got n = {n}"
        )
    for code in _connected_codes(n, rng):
        g = graph_from_graph6(code)
        if predicate(g):
            yield g


def count_classes(n: int, predicate: Callable[[Graph], bool]) -> int:
    return sum(1 for _ in enumerate_graphs(n, predicate))


def write_graph6_stream(graphs, out) -> int:
    """Dump graphs one graph6 line at a time; returns how many were written."""
    count = 0
    for g in graphs:
        out.write(g.to_graph6() + "\n")
        count += 1
    return count
