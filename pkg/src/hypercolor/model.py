"""Instances, colorings as per-class color counts, validation and symmetry reduction.

A coloring is stored only through its count matrix: entry ``(i, l)`` is the
number of vertices of color ``l`` in class ``i``. Every quantity the library
computes depends on these counts alone. By convention color 0 is "red",
color 1 "blue" and color 2 "green".
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from hypercolor.errors import DimensionError, RowSumError, ValidationError

CanonicalKey = tuple[tuple[int, ...], ...]

COLOR_NAMES = ("red", "blue", "green")


@dataclass(frozen=True)
class HypergraphSpec:
    """A complete k-partite e-uniform hypergraph together with a color budget.

    Edges are all e-subsets of the vertex set that are not contained in a
    single class. Three-class specs are stored with sizes sorted ascending.
    """

    class_sizes: tuple[int, ...]
    edge_size: int = 3
    num_colors: int = 2

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.class_sizes)
        if not sizes:
            raise ValidationError("a hypergraph needs at least one class")
        for i, s in enumerate(sizes):
            if s < 1:
                raise ValidationError(f"class {i + 1} has size {s}; sizes must be >= 1", i)
        if self.edge_size < 2:
            raise ValidationError(f"edge size must be >= 2, got {self.edge_size}")
        if self.num_colors < 2:
            raise ValidationError(f"need at least 2 colors, got {self.num_colors}")
        if len(sizes) == 3:
            sizes = tuple(sorted(sizes))
        object.__setattr__(self, "class_sizes", sizes)

    @classmethod
    def balanced(cls, n: int, k: int, edge_size: int = 3, num_colors: int = 2) -> HypergraphSpec:
        return cls((n,) * k, edge_size, num_colors)

    @property
    def k(self) -> int:
        return len(self.class_sizes)

    @property
    def N(self) -> int:
        return sum(self.class_sizes)

    @property
    def m(self) -> int:
        return self.num_colors

    @property
    def e(self) -> int:
        return self.edge_size

    @property
    def is_balanced(self) -> bool:
        return len(set(self.class_sizes)) == 1

    @property
    def tripartite_type(self) -> str | None:
        """"A" when n1 + n2 <= n3, "B" otherwise; None unless there are three classes."""
        if self.k != 3:
            return None
        n1, n2, n3 = self.class_sizes
        return "A" if n1 + n2 <= n3 else "B"

    def size_blocks(self) -> list[list[int]]:
        """Indices of classes grouped by equal size (the classes that may be exchanged)."""
        blocks: dict[int, list[int]] = {}
        for i, s in enumerate(self.class_sizes):
            blocks.setdefault(s, []).append(i)
        return list(blocks.values())

    def describe(self) -> str:
        sizes = ",".join(map(str, self.class_sizes))
        return f"n=({sizes}) e={self.edge_size} m={self.num_colors}"

    def to_json(self) -> dict[str, Any]:
        return {
            "class_sizes": list(self.class_sizes),
            "edge_size": self.edge_size,
            "num_colors": self.num_colors,
        }


@dataclass(frozen=True)
class ColorCounts:
    """A k-by-m matrix of per-class color counts."""

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.counts)
        if rows:
            width = len(rows[0])
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise DimensionError(
                        f"class {i + 1} has {len(row)} color entries, expected {width}", i
                    )
                if any(x < 0 for x in row):
                    raise ValidationError(f"class {i + 1} has a negative count: {row}", i)
        object.__setattr__(self, "counts", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> ColorCounts:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def two_color(cls, spec: HypergraphSpec, reds: Sequence[int]) -> ColorCounts:
        """Build a 2-coloring from its red column; the rest of each class is blue."""
        if len(reds) != spec.k:
            raise DimensionError(f"expected {spec.k} red counts, got {len(reds)}")
        return cls(tuple((x, n - x) for x, n in zip(reds, spec.class_sizes)))

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def m(self) -> int:
        return len(self.counts[0]) if self.counts else 0

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.counts))

    def column(self, color: int) -> tuple[int, ...]:
        return tuple(row[color] for row in self.counts)

    def support(self, class_index: int) -> frozenset[int]:
        """Colors that actually occur in the given class."""
        return frozenset(l for l, x in enumerate(self.counts[class_index]) if x)

    def adjusted(self, changes: dict[tuple[int, int], int]) -> ColorCounts:
        """Copy with ``changes[(class, color)]`` added to the matching entries."""
        rows = [list(r) for r in self.counts]
        for (i, l), d in changes.items():
            rows[i][l] += d
        return ColorCounts.from_rows(rows)

    def permuted(self, color_perm: Sequence[int], class_perm: Sequence[int] | None = None) -> ColorCounts:
        """Relabel colors (new color ``l`` takes old column ``color_perm[l]``) and
        reorder classes (new class ``i`` takes old row ``class_perm[i]``)."""
        order = range(self.k) if class_perm is None else class_perm
        return ColorCounts(tuple(tuple(self.counts[i][p] for p in color_perm) for i in order))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.counts]


def validate(spec: HypergraphSpec, c: ColorCounts) -> None:
    """Raise if ``c`` is not a coloring of ``spec``; the error names the offending class."""
    if c.k != spec.k:
        raise DimensionError(f"coloring has {c.k} classes, hypergraph has {spec.k}")
    for i, (row, n) in enumerate(zip(c.counts, spec.class_sizes)):
        if len(row) != spec.num_colors:
            raise DimensionError(
                f"class {i + 1} has {len(row)} color entries, expected {spec.num_colors}", i
            )
        if sum(row) != n:
            raise RowSumError(f"class {i + 1} counts {row} sum to {sum(row)}, class size is {n}", i)


def canonicalize(spec: HypergraphSpec, c: ColorCounts) -> CanonicalKey:
    """Representative of ``c`` under color relabeling and exchange of equal-size classes.

    Rows are ordered by (row sum, row) so that classes of different sizes keep
    their identity; the lexicographically least matrix over all color
    permutations is the key.
    """
    best: CanonicalKey | None = None
    for perm in itertools.permutations(range(spec.num_colors)):
        rows = sorted(
            (tuple(row[p] for p in perm) for row in c.counts),
            key=lambda r: (sum(r), r),
        )
        cand = tuple(rows)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def key_to_counts(key: CanonicalKey, spec: HypergraphSpec) -> ColorCounts:
    """Lay a canonical key back onto the spec's class order."""
    pool: dict[int, list[tuple[int, ...]]] = {}
    for row in key:
        pool.setdefault(sum(row), []).append(row)
    rows = [pool[n].pop(0) for n in spec.class_sizes]
    return ColorCounts(tuple(rows))


def class_permutations(spec: HypergraphSpec) -> Iterator[tuple[int, ...]]:
    """All class orders that only exchange classes of equal size."""
    blocks = spec.size_blocks()
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [0] * spec.k
        for block, image in zip(blocks, choice):
            for dst, src in zip(block, image):
                perm[dst] = src
        yield tuple(perm)


def symmetry_images(spec: HypergraphSpec, c: ColorCounts) -> set[ColorCounts]:
    """Every coloring equivalent to ``c``. Exponential in k; meant for small instances."""
    out = set()
    for cp in itertools.permutations(range(spec.num_colors)):
        for kp in class_permutations(spec):
            out.add(c.permuted(cp, kp))
    return out


def instance_to_json(spec: HypergraphSpec, c: ColorCounts | None = None) -> dict[str, Any]:
    obj = spec.to_json()
    if c is not None:
        obj["counts"] = c.to_json()
    return obj


def instance_from_json(obj: dict[str, Any]) -> tuple[HypergraphSpec, ColorCounts | None]:
    """Parse the interchange object; ``counts`` is optional.

    Three-class specs are normalized to ascending sizes, and the count rows are
    reordered along with them.
    """
    try:
        sizes = [int(s) for s in obj["class_sizes"]]
        spec = HypergraphSpec(tuple(sizes), int(obj.get("edge_size", 3)), int(obj.get("num_colors", 2)))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed instance: {exc}") from exc
    raw = obj.get("counts")
    if raw is None:
        return spec, None
    c = ColorCounts.from_rows(raw)
    if spec.k == 3 and c.k == 3 and tuple(sizes) != spec.class_sizes:
        order = sorted(range(3), key=lambda i: sizes[i])
        c = ColorCounts(tuple(c.counts[i] for i in order))
    validate(spec, c)
    return spec, c


def loads(text: str) -> tuple[HypergraphSpec, ColorCounts | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    return instance_from_json(obj)


def dumps(spec: HypergraphSpec, c: ColorCounts | None = None) -> str:
    return json.dumps(instance_to_json(spec, c))
