"""Closed-form minimum colorings for every regime with a known answer."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from hypercolor.combinatorics import balanced_parts, binomial
from hypercolor.counting import mono_count
from hypercolor.errors import UnsupportedRegimeError, ValidationError
from hypercolor.model import CanonicalKey, ColorCounts, HypergraphSpec, canonicalize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionResult:
    """Extremal colorings produced in closed form.

    ``complete`` says whether ``colorings`` lists every minimizer up to
    symmetry (the uniqueness claims) or is just one representative of a
    regime with many optimal colorings.
    """

    spec: HypergraphSpec
    colorings: tuple[ColorCounts, ...]
    value: int
    regime: str
    complete: bool = True

    def keys(self) -> set[CanonicalKey]:
        return {canonicalize(self.spec, c) for c in self.colorings}

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "regime": self.regime,
            "value": str(self.value),
            "complete": self.complete,
            "colorings": [c.to_json() for c in self.colorings],
        }


def _result(spec: HypergraphSpec, colorings: Iterable[ColorCounts], regime: str, complete: bool = True) -> ConstructionResult:
    colorings = tuple(colorings)
    values = {mono_count(spec, c) for c in colorings}
    if len(values) != 1:
        raise AssertionError(f"{regime}: constructed colorings disagree on value: {values}")
    keys = [canonicalize(spec, c) for c in colorings]
    if len(set(keys)) != len(keys):
        raise AssertionError(f"{regime}: constructed colorings are not pairwise inequivalent")
    return ConstructionResult(spec, colorings, values.pop(), regime, complete)


def _monochromatic_blocks(n: int, block_counts: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """Rows for ``block_counts[l]`` consecutive classes entirely of color l."""
    rows = []
    for color, count in enumerate(block_counts):
        row = tuple(n if l == color else 0 for l in range(m))
        rows.extend([row] * count)
    return rows


def construct_balanced_2color(n: int, k: int, e: int) -> ConstructionResult:
    """Half the classes red, half blue, and an odd class split as evenly as possible.

    The middle class gets ceil(n/2) red vertices.
    """
    if not (n >= e >= 3 and k >= 2):
        raise UnsupportedRegimeError(
            f"balanced 2-coloring construction needs n >= e >= 3 and k >= 2 (got n={n}, k={k}, e={e})"
        )
    spec = HypergraphSpec.balanced(n, k, e, 2)
    half = k // 2
    rows = [(n, 0)] * half
    if k % 2:
        rows.append(((n + 1) // 2, n // 2))
    rows += [(0, n)] * half
    return _result(spec, [ColorCounts(tuple(rows))], "balanced-2color")


def x_prime(n1: int, n3: int, N: int) -> int:
    """Ceiling of (N^2 - 3N - n1^2 - 2 n1 n3 + 3 n1 + 4 n3) / (2 (N - n1)).

    In the F8 family (class 3 red, class 2 blue, class 1 partly red) a
    further red vertex in class 1 lowers the count exactly while the red
    total is below this value.
    """
    if N <= n1:
        raise ValidationError(f"x_prime needs N > n1 (got n1={n1}, N={N})")
    num = N * N - 3 * N - n1 * n1 - 2 * n1 * n3 + 3 * n1 + 4 * n3
    den = 2 * (N - n1)
    return -(-num // den)


def construct_tripartite_2color(n1: int, n2: int, n3: int) -> ConstructionResult:
    """Minimum 2-colorings of the complete tripartite 3-uniform hypergraph with sizes n1 <= n2 <= n3."""
    if not (1 <= n1 <= n2 <= n3):
        raise ValidationError(f"class sizes must satisfy 1 <= n1 <= n2 <= n3, got ({n1}, {n2}, {n3})")
    if n3 < 3:
        raise UnsupportedRegimeError(
            f"largest class must have at least 3 vertices (got {n3}); use the degenerate construction"
        )
    spec = HypergraphSpec((n1, n2, n3), 3, 2)

    def col(*reds: int) -> ColorCounts:
        return ColorCounts.two_color(spec, reds)

    if n2 < 3:
        # both small classes hold no edge of their own; color class 3 red and the rest blue
        small = f"{n1}-{n2}"
        colorings = [col(0, 0, n3)]
        if small == "2-2" and n3 == 3:
            colorings.append(col(1, 0, 3))
        return _result(spec, colorings, f"tripartite/small-{small}")

    suffix = "/small-n1" if n1 < 3 else ""
    if n1 + n2 <= n3:
        return _result(spec, [col(n1, n2, 0)], "tripartite/type-A" + suffix)

    N = n1 + n2 + n3
    red = x_prime(n1, n3, N)
    regime = "tripartite/type-B" + suffix
    if red < n3:
        # the formula assumes at least n3 red vertices; the best coloring of this shape is then x1 = 0
        log.info("x_prime=%d below n3=%d for %s; using n3", red, n3, (n1, n2, n3))
        red = n3
        regime += "/clamped"
    colorings = [col(red - n3, 0, n3)]
    if n1 == 2 and n3 == n2 + 1:
        colorings.append(col(1, 0, n3))
        regime += "/pair"
    return _result(spec, colorings, regime)


def construct_balanced_3color(n: int, k: int, e: int) -> ConstructionResult:
    """k//3 monochromatic classes per color; for k = 1 (mod 3) one extra class split evenly."""
    if k % 3 == 2:
        raise UnsupportedRegimeError(
            f"minimum 3-coloring for k = {k} = 2 (mod 3) is an open problem; no construction is known"
        )
    if not (n >= e >= 3 and k >= 3):
        raise UnsupportedRegimeError(
            f"balanced 3-coloring construction needs n >= e >= 3 and k >= 3 (got n={n}, k={k}, e={e})"
        )
    spec = HypergraphSpec.balanced(n, k, e, 3)
    third = k // 3
    rows = _monochromatic_blocks(n, (third, third, third), 3)
    if k % 3 == 1:
        rows.append(balanced_parts(n, 3))
    return _result(spec, [ColorCounts(tuple(rows))], "balanced-3color")


def construct_degenerate(spec: HypergraphSpec) -> ConstructionResult:
    """Trivial regimes: classes smaller than an edge, fewer classes than colors,
    or a balanced spec whose class count is a multiple of the color count."""
    n_max, e, m, k = max(spec.class_sizes), spec.edge_size, spec.num_colors, spec.k
    if n_max < e:
        # no edge sits inside a class, so only the color totals matter
        quota = list(balanced_parts(spec.N, m))
        rows = []
        color = 0
        for size in spec.class_sizes:
            row = [0] * m
            left = size
            while left:
                while quota[color] == 0:
                    color += 1
                take = min(left, quota[color])
                row[color] += take
                quota[color] -= take
                left -= take
            rows.append(tuple(row))
        return _result(spec, [ColorCounts(tuple(rows))], "degenerate/small-classes", complete=False)
    if k < m:
        rows = [tuple(n if l == i else 0 for l in range(m)) for i, n in enumerate(spec.class_sizes)]
        return _result(spec, [ColorCounts(tuple(rows))], "degenerate/few-classes", complete=False)
    if spec.is_balanced and k % m == 0:
        n = spec.class_sizes[0]
        c = ColorCounts(tuple(_monochromatic_blocks(n, (k // m,) * m, m)))
        result = _result(spec, [c], "degenerate/divisible")
        expected = m * binomial(k * n // m, e) - k * binomial(n, e)
        assert result.value == expected
        return result
    raise UnsupportedRegimeError(f"{spec.describe()} is not a degenerate regime")


def construct(spec: HypergraphSpec) -> ConstructionResult:
    """Pick the construction that applies to ``spec``."""
    n_max, e, m, k = max(spec.class_sizes), spec.edge_size, spec.num_colors, spec.k
    if n_max < e or k < m:
        return construct_degenerate(spec)
    n = spec.class_sizes[0]
    if spec.is_balanced and m == 2 and e >= 3 and k >= 2:
        return construct_balanced_2color(n, k, e)
    if m == 2 and k == 3 and e == 3:
        return construct_tripartite_2color(*spec.class_sizes)
    if spec.is_balanced and m == 3 and e >= 3:
        return construct_balanced_3color(n, k, e)
    if spec.is_balanced and k % m == 0:
        return construct_degenerate(spec)
    if m == 2 and k == 3:
        raise UnsupportedRegimeError(
            f"unbalanced tripartite construction is only known for 3-uniform edges (got e={e})"
        )
    raise UnsupportedRegimeError(f"no closed-form minimum coloring is known for {spec.describe()}")
