"""Hot numeric kernels, JIT-compiled with numba when available.

Every kernel is written as plain Python over numpy arrays so the same
source runs two ways:

* default: compiled with ``numba.njit(cache=True)``;
* fallback: interpreted, selected by setting ``ALGCONN_DISABLE_NUMBA=1``
  in the environment before import (or automatically if numba is absent).

The fallback is slow. Integer kernels agree with the compiled path
exactly; floating-point results agree to roundoff (the compiler may
contract multiply-adds, so the last bits can differ). Each mode is
bit-deterministic on its own. ``benchmarks/bench_kernels.py`` compares
the two modes.
"""

from __future__ import annotations

import math
import os

import numpy as np


def _numba_disabled() -> bool:
    flag = os.environ.get("ALGCONN_DISABLE_NUMBA", "")
    return flag.strip().lower() in ("1", "true", "yes", "on")


USING_NUMBA = False

if not _numba_disabled():
    try:
        from numba import njit as _njit

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USING_NUMBA = False

if USING_NUMBA:

    def njit(func):
        return _njit(cache=True)(func)

else:

    def njit(func):
        return func


_EPS = np.finfo(np.float64).eps


# ---------------------------------------------------------------------------
# Symmetric eigensolver: Householder reduction + implicit-shift QL.
# Deterministic rotation schedule, no randomized initialization.
# ---------------------------------------------------------------------------


@njit
def _tridiagonalize(z, d, e):
    """Reduce symmetric z to tridiagonal form, accumulating the transform.

    On exit d holds the diagonal, e[1:] the subdiagonal, and z the
    orthogonal matrix Q with Q^T A Q tridiagonal.
    """
    n = z.shape[0]
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = 0.0
            for k in range(l + 1):
                scale += abs(z[i, k])
            if scale == 0.0:
                e[i] = z[i, l]
            else:
                for k in range(l + 1):
                    z[i, k] /= scale
                    h += z[i, k] * z[i, k]
                f = z[i, l]
                g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
                e[i] = scale * g
                h -= f * g
                z[i, l] = f - g
                f = 0.0
                for j in range(l + 1):
                    z[j, i] = z[i, j] / h
                    g = 0.0
                    for k in range(j + 1):
                        g += z[j, k] * z[i, k]
                    for k in range(j + 1, l + 1):
                        g += z[k, j] * z[i, k]
                    e[j] = g / h
                    f += e[j] * z[i, j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = z[i, j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        z[j, k] -= f * e[k] + g * z[i, k]
        else:
            e[i] = z[i, l]
        d[i] = h
    d[0] = 0.0
    e[0] = 0.0
    for i in range(n):
        if d[i] != 0.0:
            for j in range(i):
                g = 0.0
                for k in range(i):
                    g += z[i, k] * z[k, j]
                for k in range(i):
                    z[k, j] -= g * z[k, i]
        d[i] = z[i, i]
        z[i, i] = 1.0
        for j in range(i):
            z[j, i] = 0.0
            z[i, j] = 0.0


@njit
def _ql_implicit(d, e, z, max_iter):
    """Implicit-shift QL sweeps on a tridiagonal system, rotating z along.

    Returns (status, worst_iter): status 0 on success, or 1 + the index of
    the eigenvalue that failed to settle within max_iter iterations.
    """
    n = d.shape[0]
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    worst = 0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd or abs(e[m]) < 1e-300:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                return l + 1, it
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (abs(r) if g >= 0.0 else -abs(r)))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                for k in range(n):
                    f = z[k, i + 1]
                    z[k, i + 1] = s * z[k, i] + c * f
                    z[k, i] = c * z[k, i] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
        if it > worst:
            worst = it
    return 0, worst


@njit
def symmetric_eigensystem(a, max_iter):
    """Full eigensystem of a symmetric matrix, eigenvalues ascending.

    Returns (values, vectors, status, iters); columns of vectors align with
    values. status is 0 on success (see _ql_implicit).
    """
    n = a.shape[0]
    z = a.copy()
    d = np.zeros(n)
    e = np.zeros(n)
    if n == 1:
        d[0] = a[0, 0]
        z[0, 0] = 1.0
        return d, z, 0, 0
    _tridiagonalize(z, d, e)
    status, iters = _ql_implicit(d, e, z, max_iter)
    if status != 0:
        return d, z, status, iters
    # stable insertion sort keeps tied eigenvalues in sweep order
    order = np.arange(n)
    for i in range(1, n):
        j = i
        while j > 0 and d[order[j - 1]] > d[order[j]]:
            tmp = order[j - 1]
            order[j - 1] = order[j]
            order[j] = tmp
            j -= 1
    values = np.empty(n)
    vectors = np.empty((n, n))
    for k in range(n):
        src = order[k]
        values[k] = d[src]
        for r in range(n):
            vectors[r, k] = z[r, src]
    return values, vectors, status, iters


# ---------------------------------------------------------------------------
# Canonical labeling: exact lexicographic minimum of the adjacency bit
# string over all vertex permutations, found by prefix branch-and-bound.
# Bit order matches graph6: for j = 1..n-1, bits adj(0,j), .., adj(j-1,j).
# ---------------------------------------------------------------------------

_EQUAL = 0
_LESS = 1


@njit
def canon_min_bits(adj):
    """Lexicographically minimal upper-triangle bit string over relabelings."""
    n = adj.shape[0]
    nbits = n * (n - 1) // 2
    best = np.zeros(nbits, dtype=np.uint8)
    if n <= 1:
        return best
    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        s = 0
        for u in range(n):
            s += adj[v, u]
        deg[v] = s
    # static candidate order, low degree first: cheap heuristic that tends
    # to reach small codes early so pruning bites sooner
    cand = np.arange(n)
    for i in range(1, n):
        j = i
        while j > 0 and (
            deg[cand[j - 1]] > deg[cand[j]]
            or (deg[cand[j - 1]] == deg[cand[j]] and cand[j - 1] > cand[j])
        ):
            tmp = cand[j - 1]
            cand[j - 1] = cand[j]
            cand[j] = tmp
            j -= 1

    perm = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.uint8)
    choice = np.zeros(n + 1, dtype=np.int64)
    state = np.zeros(n + 1, dtype=np.uint8)
    cur = np.zeros(nbits, dtype=np.uint8)
    have_best = False
    depth = 0
    choice[0] = 0
    while depth >= 0:
        if depth == n:
            if not have_best or state[n] == _LESS:
                for t in range(nbits):
                    best[t] = cur[t]
                have_best = True
                # the winning path is now the best prefix at every depth
                for t in range(n + 1):
                    state[t] = _EQUAL
            depth -= 1
            used[perm[depth]] = 0
            choice[depth] += 1
            continue
        placed = False
        while choice[depth] < n:
            v = cand[choice[depth]]
            if used[v] == 1:
                choice[depth] += 1
                continue
            off = depth * (depth - 1) // 2
            newstate = state[depth]
            ok = True
            for i in range(depth):
                b = adj[perm[i], v]
                cur[off + i] = b
                if have_best and newstate == _EQUAL:
                    bb = best[off + i]
                    if b > bb:
                        ok = False
                        break
                    if b < bb:
                        newstate = _LESS
            if not ok:
                choice[depth] += 1
                continue
            perm[depth] = v
            used[v] = 1
            depth += 1
            state[depth] = newstate
            choice[depth] = 0
            placed = True
            break
        if not placed:
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = 0
                choice[depth] += 1
    return best


# ---------------------------------------------------------------------------
# Hamiltonian cycle backtracking with degree-ordered branching.
# ---------------------------------------------------------------------------


@njit
def hamiltonian_search(adj, nbrs, deg):
    """First spanning cycle through vertex 0, or an empty array.

    nbrs[v, :deg[v]] lists neighbors of v in fixed branching order; the
    first cycle found under that order is returned, so output is
    deterministic.
    """
    n = adj.shape[0]
    path = np.zeros(n, dtype=np.int64)
    ptr = np.zeros(n + 1, dtype=np.int64)
    visited = np.zeros(n, dtype=np.uint8)
    if n < 3:
        return path[:0]
    for v in range(n):
        if deg[v] < 2:
            return path[:0]
    visited[0] = 1
    depth = 1
    ptr[1] = 0
    while True:
        if depth == n:
            if adj[path[n - 1], 0] == 1:
                return path.copy()
            depth -= 1
            visited[path[depth]] = 0
            ptr[depth] += 1
            continue
        prev = path[depth - 1]
        placed = False
        while ptr[depth] < deg[prev]:
            v = nbrs[prev, ptr[depth]]
            if visited[v] == 0:
                path[depth] = v
                visited[v] = 1
                depth += 1
                ptr[depth] = 0
                placed = True
                break
            ptr[depth] += 1
        if not placed:
            if depth == 1:
                return path[:0]
            depth -= 1
            visited[path[depth]] = 0
            ptr[depth] += 1
