"""Exhaustive oracle over count vectors, descent by local moves, and canonical-form labels."""

from __future__ import annotations

import math
import random
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from hypercolor.combinatorics import binomial, binomial_table, compositions, count_compositions
from hypercolor.counting import RECOLOR, SWAP, TOTAL_SWAP, Move, _moved, delta, is_legal
from hypercolor.errors import BudgetExceededError, DimensionError, InfeasibleTotalsError
from hypercolor.model import CanonicalKey, ColorCounts, HypergraphSpec, canonicalize, validate

DEFAULT_BUDGET = 50_000_000
DEFAULT_TIE_CAP = 10_000


@dataclass
class MinimizerSet:
    """Certified minimum over every enumerated count vector.

    ``minimizers`` maps each canonical key to one representative coloring
    (the lexicographically least enumerated one). ``overflow`` is set when
    more than ``cap`` inequivalent minimizers were found; only the ``cap``
    smallest keys are then kept.
    """

    value: int | None
    minimizers: dict[CanonicalKey, ColorCounts] = field(default_factory=dict)
    explored: int = 0
    overflow: bool = False
    cap: int = DEFAULT_TIE_CAP

    def merge(self, other: MinimizerSet) -> MinimizerSet:
        explored = self.explored + other.explored
        if other.value is None or (self.value is not None and self.value < other.value):
            return MinimizerSet(self.value, dict(self.minimizers), explored, self.overflow, self.cap)
        if self.value is None or other.value < self.value:
            return MinimizerSet(other.value, dict(other.minimizers), explored, other.overflow, self.cap)
        merged = dict(self.minimizers)
        for key, rep in other.minimizers.items():
            if key not in merged or rep.counts < merged[key].counts:
                merged[key] = rep
        out = MinimizerSet(self.value, merged, explored, self.overflow or other.overflow, self.cap)
        out._trim()
        return out

    def _trim(self) -> None:
        if len(self.minimizers) > self.cap:
            self.overflow = True
            keep = sorted(self.minimizers)[: self.cap]
            self.minimizers = {k: self.minimizers[k] for k in keep}

    def keys(self) -> set[CanonicalKey]:
        return set(self.minimizers)

    def representatives(self) -> list[ColorCounts]:
        return [self.minimizers[k] for k in sorted(self.minimizers)]

    def to_json(self) -> dict:
        return {
            "value": None if self.value is None else str(self.value),
            "explored": str(self.explored),
            "overflow": self.overflow,
            "minimizers": [self.minimizers[k].to_json() for k in sorted(self.minimizers)],
        }


def enumeration_size(spec: HypergraphSpec, reduce_classes: bool = True) -> int:
    """Number of count vectors the oracle visits.

    With ``reduce_classes`` the rows of equal-size classes are enumerated as
    multisets, since exchanging such classes never changes the count.
    """
    m = spec.num_colors
    if not reduce_classes:
        return math.prod(count_compositions(n, m) for n in spec.class_sizes)
    size = 1
    for block in spec.size_blocks():
        rows = count_compositions(spec.class_sizes[block[0]], m)
        size *= math.comb(rows + len(block) - 1, len(block))
    return size


def _check_totals(spec: HypergraphSpec, fixed_totals: Sequence[int] | None) -> tuple[int, ...] | None:
    if fixed_totals is None:
        return None
    fixed = tuple(int(t) for t in fixed_totals)
    if len(fixed) != spec.num_colors or any(t < 0 for t in fixed) or sum(fixed) != spec.N:
        raise InfeasibleTotalsError(
            f"color totals {fixed} must be {spec.num_colors} non-negative integers summing to {spec.N}"
        )
    return fixed


def _scan(
    spec: HypergraphSpec,
    fixed: tuple[int, ...] | None,
    first_indices: Sequence[int] | None,
    reduce_classes: bool,
    cap: int,
) -> MinimizerSet:
    k, m, e = spec.k, spec.num_colors, spec.edge_size
    order = [i for block in spec.size_blocks() for i in block]
    chained = [p > 0 and spec.class_sizes[order[p]] == spec.class_sizes[order[p - 1]] for p in range(k)]
    rows_for = [list(compositions(n, m)) for n in spec.class_sizes]
    inner_for = [[sum(binomial(x, e) for x in row) for row in rows] for rows in rows_for]
    table = binomial_table(e, spec.N)
    allowed_first = set(range(len(rows_for[order[0]]))) if first_indices is None else set(first_indices)

    result = MinimizerSet(None, cap=cap)
    chosen: list[tuple[int, ...]] = [()] * k
    explored = 0

    def visit(p: int, start: int, totals: tuple[int, ...], inner: int) -> None:
        nonlocal explored
        if p == k:
            if fixed is not None and totals != fixed:
                return
            explored += 1
            value = sum(table[t] for t in totals) - inner
            if result.value is None or value < result.value:
                result.value = value
                result.minimizers = {}
                result.overflow = False
            elif value > result.value:
                return
            c = ColorCounts(tuple(chosen))
            key = canonicalize(spec, c)
            held = result.minimizers.get(key)
            if held is None or c.counts < held.counts:
                result.minimizers[key] = c
                if len(result.minimizers) > 2 * cap:
                    result._trim()
            return
        cls = order[p]
        rows = rows_for[cls]
        lo = start if (reduce_classes and chained[p]) else 0
        for idx in range(lo, len(rows)):
            if p == 0 and idx not in allowed_first:
                continue
            row = rows[idx]
            new = tuple(a + b for a, b in zip(totals, row))
            if fixed is not None and any(t > f for t, f in zip(new, fixed)):
                continue
            chosen[cls] = row
            visit(p + 1, idx, new, inner + inner_for[cls][idx])

    visit(0, 0, (0,) * m, 0)
    result.explored = explored
    result._trim()
    return result


def _scan_job(args) -> MinimizerSet:
    return _scan(*args)


def brute_force_min(
    spec: HypergraphSpec,
    fixed_totals: Sequence[int] | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_TIE_CAP,
    jobs: int = 1,
    reduce_classes: bool = True,
) -> MinimizerSet:
    """Exact minimum over all count vectors, optionally with prescribed color totals.

    Returns every minimizer up to symmetry (bounded by ``cap``). The first
    class's rows are split across ``jobs`` worker processes; partial results
    merge associatively, so the answer does not depend on ``jobs``.
    """
    fixed = _check_totals(spec, fixed_totals)
    required = enumeration_size(spec, reduce_classes)
    if required > budget:
        raise BudgetExceededError(required, budget)
    first = spec.size_blocks()[0][0]
    n_first = count_compositions(spec.class_sizes[first], spec.num_colors)
    if jobs <= 1 or n_first < 2:
        return _scan(spec, fixed, None, reduce_classes, cap)
    chunks = [list(range(j, n_first, jobs)) for j in range(min(jobs, n_first))]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(_scan_job, [(spec, fixed, ch, reduce_classes, cap) for ch in chunks]))
    out = MinimizerSet(None, cap=cap)
    for part in parts:
        out = out.merge(part)
    return out


# ---------------------------------------------------------------- local search

def candidate_moves(spec: HypergraphSpec, rng: random.Random | None = None) -> Iterator[Move]:
    """Recolors, then swaps, then total swaps; each group shuffled when ``rng`` is given."""
    k, m = spec.k, spec.num_colors
    pairs = [(f, t) for f in range(m) for t in range(m) if f != t]
    groups = [
        [Move(RECOLOR, i, f, t) for i in range(k) for f, t in pairs],
        [Move(SWAP, i, f, t, j) for i in range(k) for j in range(k) if i != j for f, t in pairs],
        [Move(TOTAL_SWAP, i, f, t, j) for i in range(k) for j in range(k) if i != j for f, t in pairs],
    ]
    for group in groups:
        if rng is not None:
            rng.shuffle(group)
        yield from group


def descend(
    spec: HypergraphSpec, start: ColorCounts, rng: random.Random | None = None
) -> Iterator[tuple[Move, int, ColorCounts]]:
    """Yield ``(move, change, coloring_after)`` for each accepted strictly improving move."""
    validate(spec, start)
    current = start
    while True:
        for move in candidate_moves(spec, rng):
            if not is_legal(spec, current, move):
                continue
            change = delta(spec, current, move)
            if change < 0:
                current = _moved(current, move)
                yield move, change, current
                break
        else:
            return


def local_search(spec: HypergraphSpec, start: ColorCounts, rng: random.Random | None = None) -> ColorCounts:
    """First-improvement descent until no recolor, swap or total swap lowers the count."""
    current = start
    validate(spec, start)
    for _, _, current in descend(spec, start, rng):
        pass
    return current


def random_coloring(spec: HypergraphSpec, rng: random.Random) -> ColorCounts:
    """Color every vertex independently and uniformly at random."""
    rows = []
    for n in spec.class_sizes:
        row = [0] * spec.num_colors
        for _ in range(n):
            row[rng.randrange(spec.num_colors)] += 1
        rows.append(tuple(row))
    return ColorCounts(tuple(rows))


# ---------------------------------------------------------------- canonical forms

TRIPARTITE2 = "tripartite2"
THREECOLOR = "threecolor"


@dataclass(frozen=True, order=True)
class FormLabel:
    family: str
    form: int

    def __str__(self) -> str:
        return f"F{self.form}"


# per class: "P" may be polychromatic, "R" all red (color 0), "B" all blue (color 1)
TRIPARTITE_PATTERNS: dict[int, str] = {
    1: "PBB", 2: "BPB", 3: "BBP", 4: "RPB", 5: "RBP", 6: "PRB",
    7: "BRP", 8: "PBR", 9: "BPR", 10: "RRP", 11: "RPR", 12: "PRR",
}


def classify_form_tripartite2(spec: HypergraphSpec, c: ColorCounts) -> frozenset[FormLabel]:
    """Every tripartite 2-color form whose class pattern ``c`` satisfies."""
    if spec.k != 3 or spec.num_colors != 2:
        raise DimensionError(f"tripartite forms need k=3 and m=2, got k={spec.k}, m={spec.num_colors}")
    validate(spec, c)
    state = []
    for (red, _), n in zip(c.counts, spec.class_sizes):
        state.append("R" if red == n else "B" if red == 0 else "P")
    return frozenset(
        FormLabel(TRIPARTITE2, form)
        for form, pattern in TRIPARTITE_PATTERNS.items()
        if all(want == "P" or want == got for want, got in zip(pattern, state))
    )


def classify_form_threecolor(spec: HypergraphSpec, c: ColorCounts) -> FormLabel | None:
    """Form of a 3-coloring by how many classes carry two or three colors.

    F1: one class with all three colors. F2: one two-colored class. F3/F4:
    two/three two-colored classes with pairwise different color pairs.
    F5: every class monochromatic. All other classes must be monochromatic.
    """
    if spec.num_colors != 3:
        raise DimensionError(f"three-color forms need m=3, got m={spec.num_colors}")
    validate(spec, c)
    supports = [c.support(i) for i in range(spec.k)]
    tri = [s for s in supports if len(s) == 3]
    bi = [s for s in supports if len(s) == 2]
    if tri:
        return FormLabel(THREECOLOR, 1) if len(tri) == 1 and not bi else None
    if len(bi) != len(set(bi)):
        return None
    form = {0: 5, 1: 2, 2: 3, 3: 4}.get(len(bi))
    return None if form is None else FormLabel(THREECOLOR, form)

