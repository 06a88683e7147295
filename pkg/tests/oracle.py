"""Reference computations that share no code with the package.

Everything here works on plain tuples: vertex-level edge enumeration,
full product enumeration of count vectors, and symmetry orbits built by
brute force.
"""

from __future__ import annotations

import itertools
from math import comb


def vertices(sizes, rows):
    """Labeled vertices as (class, color) pairs."""
    out = []
    for i, row in enumerate(rows):
        for color, x in enumerate(row):
            out.extend([(i, color)] * x)
    assert len(out) == sum(sizes)
    return out


def mono_edges(sizes, e, rows):
    """Count monochromatic edges by listing every e-subset of labeled vertices."""
    vs = vertices(sizes, rows)
    count = 0
    for edge in itertools.combinations(range(len(vs)), e):
        classes = {vs[v][0] for v in edge}
        colors = {vs[v][1] for v in edge}
        if len(classes) > 1 and len(colors) == 1:
            count += 1
    return count


def formula(e, rows):
    total = 0
    for col in zip(*rows):
        total += comb(sum(col), e) - sum(comb(x, e) for x in col)
    return total


def row_choices(n, m):
    return [t for t in itertools.product(range(n + 1), repeat=m) if sum(t) == n]


def all_colorings(sizes, m):
    yield from itertools.product(*(row_choices(n, m) for n in sizes))


def orbit(sizes, rows):
    """All colorings reachable by relabeling colors and exchanging equal-size classes."""
    m = len(rows[0])
    k = len(sizes)
    class_perms = [p for p in itertools.permutations(range(k)) if all(sizes[p[i]] == sizes[i] for i in range(k))]
    out = set()
    for cp in itertools.permutations(range(m)):
        for kp in class_perms:
            out.add(tuple(tuple(rows[kp[i]][cp[l]] for l in range(m)) for i in range(k)))
    return out


def orbit_key(sizes, rows):
    return min(orbit(sizes, rows))


def brute_min(sizes, e, m, totals=None):
    """Minimum by full enumeration; returns (value, set of orbit keys)."""
    best, keys = None, set()
    for rows in all_colorings(sizes, m):
        if totals is not None and tuple(map(sum, zip(*rows))) != tuple(totals):
            continue
        v = formula(e, rows)
        if best is None or v < best:
            best, keys = v, {orbit_key(sizes, rows)}
        elif v == best:
            keys.add(orbit_key(sizes, rows))
    return best, keys
