"""Brute-force reference implementations.

Deliberately naive and independent of the package's search code: colors are
recomputed from raw numpy arrays, games are replayed on fresh array copies,
cycles come from permutations, components from transitive closure.
"""

from itertools import permutations

import numpy as np


def colmax(vals, x):
    col = np.delete(vals[:, x], x)
    return int(col.max())


def is_blue(vals, x, y):
    return x != y and int(vals[y, x]) == colmax(vals, x)


def game_paths(vals, start, limit):
    """All game paths from ``start`` up to the first step whose twin is blue.

    Returns ``(agents, boundary)`` tuples; ``boundary`` is ``None`` for paths
    cut at ``limit`` steps.
    """
    vals = np.array(vals, dtype=np.int64)
    n = vals.shape[0]
    out = []

    def rec(v, agents):
        x = agents[-1]
        if len(agents) - 1 == limit:
            out.append((tuple(agents), None))
            return
        for y in range(n):
            if not is_blue(v, x, y):
                continue
            if is_blue(v, y, x):
                out.append((tuple(agents + [y]), len(agents) - 1))
                continue
            w = v.copy()
            w[x, y] += 1  # row x, column y: cell (y, x)
            rec(w, agents + [y])

    rec(vals, [start])
    return out


def stability_pairs(vals, start, limit=10_000):
    return {frozenset(a[b : b + 2]) for a, b in game_paths(vals, start, limit)}


def all_stability_pairs(vals):
    n = np.asarray(vals).shape[0]
    out = set()
    for s in range(n):
        out |= stability_pairs(vals, s)
    return out


def blue_edges(vals):
    vals = np.asarray(vals)
    n = vals.shape[0]
    return {(x, y) for x in range(n) for y in range(n) if is_blue(vals, x, y)}


def simple_cycles(n, edges):
    """Every vertex-distinct closed walk, rotated to start at its least vertex."""
    found = set()
    for k in range(2, n + 1):
        for perm in permutations(range(n), k):
            if perm[0] != min(perm):
                continue
            if all((perm[i], perm[(i + 1) % k]) in edges for i in range(k)):
                found.add(perm)
    return sorted(found)


def closure(n, edges):
    r = np.eye(n, dtype=bool)
    for x, y in edges:
        r[x, y] = True
    for _ in range(n):
        r = r | ((r.astype(int) @ r.astype(int)) > 0)
    return r


def components(n, edges):
    r = closure(n, edges)
    mutual = r & r.T
    return sorted({tuple(np.flatnonzero(mutual[i])) for i in range(n)})
