"""Constructor-versus-oracle verdicts and parameter sweeps over many specs."""

from __future__ import annotations

import csv
import io
import json
import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from hypercolor.constructors import ConstructionResult, construct
from hypercolor.errors import HypercolorError
from hypercolor.model import HypergraphSpec
from hypercolor.search import DEFAULT_BUDGET, MinimizerSet, brute_force_min

MODES = ("construct", "brute", "verify")
FAMILIES = ("balanced", "tripartite")

CSV_COLUMNS = (
    "class_sizes",
    "edge_size",
    "num_colors",
    "regime",
    "constructor_value",
    "oracle_value",
    "minimizer_count",
    "match",
    "elapsed_ms",
)


@dataclass
class Verdict:
    spec: HypergraphSpec
    construction: ConstructionResult
    oracle: MinimizerSet
    match: bool

    @property
    def summary(self) -> str:
        word = "match" if self.match else "MISMATCH"
        count = len(self.oracle.minimizers)
        noun = "minimizer" if count == 1 else "minimizers"
        return f"{word}, {count} {noun}, value {self.oracle.value}"

    def to_json(self) -> dict:
        return {
            "verdict": self.summary,
            "match": self.match,
            "construction": self.construction.to_json(),
            "oracle": self.oracle.to_json(),
        }


def verify_spec(spec: HypergraphSpec, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Verdict:
    """Compare the closed-form construction with the exhaustive oracle.

    Values must agree exactly. Where the construction claims to list every
    minimizer the canonical key sets must be equal; otherwise its colorings
    must be among the oracle's minimizers.
    """
    built = construct(spec)
    oracle = brute_force_min(spec, budget=budget, jobs=jobs)
    ok = built.value == oracle.value
    if ok and not oracle.overflow:
        keys = built.keys()
        ok = keys == oracle.keys() if built.complete else keys <= oracle.keys()
    elif ok and built.complete:
        ok = False
    return Verdict(spec, built, oracle, ok)


@dataclass
class SweepRow:
    spec: HypergraphSpec
    regime: str = ""
    constructor_value: int | None = None
    oracle_value: int | None = None
    minimizer_count: int | None = None
    match: bool | None = None
    elapsed_ms: int = 0

    def as_record(self) -> dict[str, str]:
        def fmt(v) -> str:
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return {
            "class_sizes": " ".join(map(str, self.spec.class_sizes)),
            "edge_size": str(self.spec.edge_size),
            "num_colors": str(self.spec.num_colors),
            "regime": self.regime,
            "constructor_value": fmt(self.constructor_value),
            "oracle_value": fmt(self.oracle_value),
            "minimizer_count": fmt(self.minimizer_count),
            "match": fmt(self.match),
            "elapsed_ms": str(self.elapsed_ms),
        }


def parse_range(text: str) -> list[int]:
    """'3:5' -> [3, 4, 5]; '3,5,7' -> [3, 5, 7]; '4' -> [4]."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            lo, hi = (int(x) for x in part.split(":", 1))
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


@dataclass
class SweepConfig:
    family: str = "balanced"
    n_range: Sequence[int] = (3,)
    k_range: Sequence[int] = (3,)
    e_range: Sequence[int] = (3,)
    m_range: Sequence[int] = (2,)
    mode: str = "verify"
    out: str | None = None
    fmt: str = "csv"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    explicit: list[HypergraphSpec] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        for name in ("n_range", "k_range", "e_range", "m_range"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be non-empty")
        if self.budget <= 0:
            raise ValueError("budget must be positive")

    def specs(self) -> list[HypergraphSpec]:
        if self.explicit:
            return list(self.explicit)
        out = []
        if self.family == "balanced":
            for m in self.m_range:
                for k in self.k_range:
                    for n in self.n_range:
                        for e in self.e_range:
                            out.append(HypergraphSpec.balanced(n, k, e, m))
        else:
            sizes = sorted(set(self.n_range))
            for n3 in sizes:
                for n2 in (s for s in sizes if s <= n3):
                    for n1 in (s for s in sizes if s <= n2):
                        if n3 >= 3:
                            for e in self.e_range:
                                for m in self.m_range:
                                    out.append(HypergraphSpec((n1, n2, n3), e, m))
        return out


def acceptance_specs() -> list[HypergraphSpec]:
    """Every instance checked by the constructor-versus-oracle acceptance criteria."""
    specs: list[HypergraphSpec] = []
    for k in range(2, 5):
        for n in range(3, 6):
            for e in range(3, n + 1):
                specs.append(HypergraphSpec.balanced(n, k, e, 2))
    for n3 in range(3, 8):
        for n2 in range(1, n3 + 1):
            for n1 in range(1, n2 + 1):
                specs.append(HypergraphSpec((n1, n2, n3), 3, 2))
    for k in (3, 4, 6, 7):
        for n in (3, 4):
            specs.append(HypergraphSpec.balanced(n, k, 3, 3))
    for m, ks in ((2, (2, 4)), (3, (3, 6))):
        for k in ks:
            for n in (3, 4):
                specs.append(HypergraphSpec.balanced(n, k, 3, m))
    specs += [
        HypergraphSpec.balanced(3, 2, 3, 3),
        HypergraphSpec.balanced(4, 3, 3, 4),
        HypergraphSpec.balanced(3, 1, 3, 2),
        HypergraphSpec((2, 2, 2), 3, 2),
        HypergraphSpec((1, 2, 2), 3, 3),
        HypergraphSpec((2, 2, 2, 2), 3, 3),
        HypergraphSpec((3, 3), 4, 2),
    ]
    seen = set()
    unique = []
    for s in specs:
        if s not in seen:
            seen.add(s)
            unique.append(s)
    return unique


def sweep_rows(specs: Iterable[HypergraphSpec], mode: str, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Iterator[SweepRow]:
    """One row per spec; failures become rows instead of aborting the sweep."""
    for spec in specs:
        row = SweepRow(spec)
        start = time.perf_counter()
        try:
            if mode == "construct":
                built = construct(spec)
                row.regime, row.constructor_value = built.regime, built.value
            elif mode == "brute":
                oracle = brute_force_min(spec, budget=budget, jobs=jobs)
                row.oracle_value, row.minimizer_count = oracle.value, len(oracle.minimizers)
            else:
                v = verify_spec(spec, budget=budget, jobs=jobs)
                row.regime = v.construction.regime
                row.constructor_value = v.construction.value
                row.oracle_value = v.oracle.value
                row.minimizer_count = len(v.oracle.minimizers)
                row.match = v.match
        except HypercolorError as exc:
            row.regime = f"error: {exc}"
            row.match = False if mode == "verify" else None
        row.elapsed_ms = round((time.perf_counter() - start) * 1000)
        yield row


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_record())
    return buf.getvalue()


def rows_to_json(rows: Iterable[SweepRow]) -> str:
    return json.dumps([row.as_record() for row in rows], indent=2)


def read_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))
