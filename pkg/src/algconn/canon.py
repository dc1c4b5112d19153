"""Canonical forms and isomorphism testing for graphs up to 12 vertices.

The canonical form is the graph6 string of the relabeling that minimizes
the adjacency bit string lexicographically over all n! permutations, found
exactly by branch-and-bound (see _kernels.canon_min_bits). Two graphs are
isomorphic iff their canonical forms are equal.
"""

from __future__ import annotations

import numpy as np

from ._kernels import canon_min_bits
from .errors import OrderLimitError
from .graphs import Graph, _g6_size_bytes

ORDER_LIMIT = 12


def canonical_form(g: Graph) -> str:
    """graph6 string of the lexicographically minimal relabeling of g."""
    if g.n > ORDER_LIMIT:
        raise OrderLimitError(
            f"canonical form is exhaustive and capped at n = {ORDER_LIMIT}, got n = {g.n}"
        )
    bits = canon_min_bits(g.adjacency_matrix())
    out = bytearray(_g6_size_bytes(g.n))
    acc = 0
    nacc = 0
    for b in bits:
        acc = acc << 1 | int(b)
        nacc += 1
        if nacc == 6:
            out.append(acc + 63)
            acc = 0
            nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return out.decode("ascii")


def degree_profile(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees()))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test; cheap invariants first, canonical forms last."""
    if a.n != b.n or a.m != b.m:
        return False
    if degree_profile(a) != degree_profile(b):
        return False
    if _triangle_count(a) != _triangle_count(b):
        return False
    return canonical_form(a) == canonical_form(b)


def _triangle_count(g: Graph) -> int:
    adj = g.adjacency_matrix()
    cube = adj @ adj @ adj
    return int(np.trace(cube)) // 6
