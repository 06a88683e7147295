"""Monochromatic-edge counts and the closed-form change under recolor, swap and total swap.

``e`` is the edge size throughout. Every change formula counts the edges
through the moved vertices, so its binomials use lower index ``e - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from hypercolor.combinatorics import binomial
from hypercolor.errors import IllegalMoveError, ValidationError
from hypercolor.model import ColorCounts, HypergraphSpec, validate

RECOLOR = "recolor"
SWAP = "swap"
TOTAL_SWAP = "total_swap"
MOVE_KINDS = (RECOLOR, SWAP, TOTAL_SWAP)


@dataclass(frozen=True)
class Move:
    """A local change of a coloring.

    In ``class_i`` vertices go ``color_from -> color_to``; for swaps the same
    number of vertices in ``class_i2`` go the other way. A swap moves one
    vertex on each side, a total swap moves every ``color_from`` vertex of
    ``class_i``.
    """

    kind: str
    class_i: int
    color_from: int
    color_to: int
    class_i2: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in MOVE_KINDS:
            raise IllegalMoveError(f"unknown move kind {self.kind!r}")
        if self.color_from == self.color_to:
            raise IllegalMoveError("a move needs two distinct colors")
        if self.kind == RECOLOR:
            if self.class_i2 is not None:
                raise IllegalMoveError("a recolor touches a single class")
        elif self.class_i2 is None or self.class_i2 == self.class_i:
            raise IllegalMoveError(f"a {self.kind} needs two distinct classes")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "class_i": self.class_i,
               "color_from": self.color_from, "color_to": self.color_to}
        if self.class_i2 is not None:
            out["class_i2"] = self.class_i2
        return out


def _mono(e: int, rows: tuple[tuple[int, ...], ...]) -> int:
    total = 0
    for col in zip(*rows):
        total += binomial(sum(col), e)
        for x in col:
            total -= binomial(x, e)
    return total


def mono_count(spec: HypergraphSpec, c: ColorCounts) -> int:
    """Number of monochromatic edges: sum over colors of C(X_l, e) - sum_i C(x_li, e)."""
    validate(spec, c)
    return _mono(spec.edge_size, c.counts)


def _check_range(spec: HypergraphSpec, *, classes=(), colors=()) -> None:
    for i in classes:
        if not 0 <= i < spec.k:
            raise IllegalMoveError(f"class index {i} out of range for {spec.k} classes")
    for l in colors:
        if not 0 <= l < spec.num_colors:
            raise IllegalMoveError(f"color index {l} out of range for {spec.num_colors} colors")


def delta_recolor(spec: HypergraphSpec, c: ColorCounts, class_i: int, color_from: int, color_to: int) -> int:
    """Change in the count when one vertex of ``class_i`` is recolored."""
    validate(spec, c)
    _check_range(spec, classes=(class_i,), colors=(color_from, color_to))
    if color_from == color_to:
        raise IllegalMoveError("recolor needs two distinct colors")
    row = c.counts[class_i]
    if row[color_from] < 1:
        raise IllegalMoveError(f"class {class_i + 1} has no vertex of color {color_from}")
    totals = c.totals
    r = spec.edge_size - 1
    value = (binomial(totals[color_to], r) - binomial(row[color_to], r)) - (
        binomial(totals[color_from] - 1, r) - binomial(row[color_from] - 1, r)
    )
    assert value == _difference(spec, c, Move(RECOLOR, class_i, color_from, color_to))
    return value


def delta_swap(
    spec: HypergraphSpec, c: ColorCounts, class_i: int, class_i2: int, color_a: int, color_b: int
) -> int:
    """Change when a ``color_b`` vertex of ``class_i`` becomes ``color_a`` and a
    ``color_a`` vertex of ``class_i2`` becomes ``color_b``.

    Color totals are unchanged. Swap the class arguments for the opposite direction.
    """
    validate(spec, c)
    _check_range(spec, classes=(class_i, class_i2), colors=(color_a, color_b))
    if class_i == class_i2 or color_a == color_b:
        raise IllegalMoveError("swap needs two distinct classes and two distinct colors")
    ri, ri2 = c.counts[class_i], c.counts[class_i2]
    if ri[color_b] < 1:
        raise IllegalMoveError(f"class {class_i + 1} has no vertex of color {color_b} to promote")
    if ri2[color_a] < 1:
        raise IllegalMoveError(f"class {class_i2 + 1} has no vertex of color {color_a} to demote")
    r = spec.edge_size - 1
    value = (binomial(ri2[color_a] - 1, r) + binomial(ri[color_b] - 1, r)) - (
        binomial(ri[color_a], r) + binomial(ri2[color_b], r)
    )
    assert value == _difference(spec, c, Move(SWAP, class_i, color_b, color_a, class_i2))
    return value


def delta_total_swap(
    spec: HypergraphSpec, c: ColorCounts, class_i: int, class_i2: int, color_a: int, color_b: int
) -> int:
    """Change when every ``color_a`` vertex of ``class_i`` becomes ``color_b`` and
    as many ``color_b`` vertices of ``class_i2`` become ``color_a``.

    Requires ``1 <= counts[class_i][color_a] <= counts[class_i2][color_b]``.
    """
    validate(spec, c)
    _check_range(spec, classes=(class_i, class_i2), colors=(color_a, color_b))
    if class_i == class_i2 or color_a == color_b:
        raise IllegalMoveError("total swap needs two distinct classes and two distinct colors")
    a_i, b_i = c.counts[class_i][color_a], c.counts[class_i][color_b]
    a_i2, b_i2 = c.counts[class_i2][color_a], c.counts[class_i2][color_b]
    if a_i < 1:
        raise IllegalMoveError(f"class {class_i + 1} has no vertex of color {color_a}")
    if b_i2 < a_i:
        raise IllegalMoveError(
            f"class {class_i2 + 1} has {b_i2} vertices of color {color_b}, needs {a_i}"
        )
    r = spec.edge_size - 1
    value = 0
    for t in range(a_i):
        value += binomial(a_i - 1 - t, r) + binomial(b_i2 - 1 - t, r)
        value -= binomial(b_i + t, r) + binomial(a_i2 + t, r)
    assert value == _difference(spec, c, Move(TOTAL_SWAP, class_i, color_a, color_b, class_i2))
    return value


def delta(spec: HypergraphSpec, c: ColorCounts, move: Move) -> int:
    """Closed-form change in the count for ``move``."""
    if move.kind == RECOLOR:
        return delta_recolor(spec, c, move.class_i, move.color_from, move.color_to)
    assert move.class_i2 is not None
    if move.kind == SWAP:
        return delta_swap(spec, c, move.class_i, move.class_i2, move.color_to, move.color_from)
    return delta_total_swap(spec, c, move.class_i, move.class_i2, move.color_from, move.color_to)


def _moved(c: ColorCounts, move: Move) -> ColorCounts:
    i, f, t = move.class_i, move.color_from, move.color_to
    if move.kind == RECOLOR:
        return c.adjusted({(i, f): -1, (i, t): 1})
    amount = 1 if move.kind == SWAP else c.counts[i][f]
    j = move.class_i2
    return c.adjusted({(i, f): -amount, (i, t): amount, (j, t): -amount, (j, f): amount})


def apply_move(spec: HypergraphSpec, c: ColorCounts, move: Move) -> ColorCounts:
    """The coloring after ``move``; raises if the move is not legal on ``c``."""
    delta(spec, c, move)
    return _moved(c, move)


def is_legal(spec: HypergraphSpec, c: ColorCounts, move: Move) -> bool:
    row = c.counts[move.class_i]
    if row[move.color_from] < 1:
        return False
    if move.kind == RECOLOR:
        return True
    other = c.counts[move.class_i2][move.color_to]
    need = 1 if move.kind == SWAP else row[move.color_from]
    return other >= need


def _difference(spec: HypergraphSpec, c: ColorCounts, move: Move) -> int:
    e = spec.edge_size
    return _mono(e, _moved(c, move).counts) - _mono(e, c.counts)


def s_term(spec: HypergraphSpec, c: ColorCounts) -> int:
    """The part of the 2-color count that varies at a fixed red total.

    ``sum_i sum_{x < x_i} [C(x, e-1) - C(n_i - x - 1, e-1)]`` with ``x_i`` the
    red count of class i. At fixed red total the count equals a constant
    minus this value, so maximizing it minimizes monochromatic edges.
    """
    if spec.num_colors != 2:
        raise ValidationError(f"s_term is defined for 2 colors, spec has {spec.num_colors}")
    validate(spec, c)
    r = spec.edge_size - 1
    total = 0
    for (xi, _), n in zip(c.counts, spec.class_sizes):
        for x in range(xi):
            total += binomial(x, r) - binomial(n - x - 1, r)
    return total


def s_constant(spec: HypergraphSpec, red_total: int) -> int:
    """The fixed-total part: mono_count = s_constant(X) - s_term for 2-colorings with X red."""
    e, N = spec.edge_size, spec.N
    base = binomial(N, e) - sum(binomial(n, e) for n in spec.class_sizes)
    return base + sum(binomial(j, e - 1) - binomial(N - j - 1, e - 1) for j in range(red_total))
