"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` (or a verify sweep) finds a
mismatch, 2 for bad input (usage, invalid coloring, unsupported regime),
3 when the oracle's enumeration budget is exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from hypercolor.constructors import (
    construct,
    construct_balanced_2color,
    construct_balanced_3color,
    construct_degenerate,
    construct_tripartite_2color,
)
from hypercolor.counting import MOVE_KINDS, RECOLOR, Move, apply_move, delta, mono_count
from hypercolor.errors import BudgetExceededError, HypercolorError
from hypercolor.model import COLOR_NAMES, ColorCounts, HypergraphSpec, canonicalize, instance_to_json, loads, validate
from hypercolor.search import DEFAULT_BUDGET, brute_force_min, descend
from hypercolor.sweep import (
    FAMILIES,
    MODES,
    SweepConfig,
    acceptance_specs,
    parse_range,
    rows_to_csv,
    rows_to_json,
    sweep_rows,
    verify_spec,
)

BUDGET_ENV = "HYPERCOLOR_BUDGET"

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV}={raw!r} is not an integer") from None


def _add_spec_args(p: argparse.ArgumentParser, default_colors: int | None = 2) -> None:
    p.add_argument("-n", "--class-sizes", type=int, nargs="+", metavar="N",
                   help="class sizes; a single value with -k means k classes of that size")
    p.add_argument("-k", type=int, help="number of classes (balanced specs)")
    p.add_argument("-e", "--edge-size", type=int, default=3, help="edge size (default 3)")
    p.add_argument("-m", "--colors", type=int, default=default_colors, help="number of colors")
    p.add_argument("--tripartite", type=int, nargs=3, metavar=("N1", "N2", "N3"),
                   help="tripartite 3-uniform 2-color spec")
    p.add_argument("--input", "-i", help="JSON instance file ('-' for stdin)")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", "-o", help="write output to this file instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def _add_oracle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help=f"max count vectors to enumerate (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    p.add_argument("--jobs", "-j", type=int, default=1, help="worker processes for the oracle")


def _read_instance(args) -> tuple[HypergraphSpec, ColorCounts | None]:
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return loads(text)
    return _spec_from_flags(args), None


def _spec_from_flags(args, colors: int | None = None) -> HypergraphSpec:
    m = colors if colors is not None else args.colors
    if args.tripartite:
        return HypergraphSpec(tuple(args.tripartite), 3, 2)
    if not args.class_sizes:
        raise InputError("give class sizes with -n/--class-sizes, --tripartite, or --input")
    sizes = args.class_sizes
    if args.k is not None:
        if len(sizes) != 1:
            raise InputError("-k takes a single class size via -n")
        sizes = sizes * args.k
    return HypergraphSpec(tuple(sizes), args.edge_size, m)


def _parse_color(text: str) -> int:
    if text.lower() in COLOR_NAMES:
        return COLOR_NAMES.index(text.lower())
    return int(text)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _dump(obj) -> str:
    return json.dumps(obj)


def cmd_count(args) -> int:
    spec, c = _read_instance(args)
    if c is None:
        raise InputError("count needs a coloring (--input file with a 'counts' field)")
    out = instance_to_json(spec, c)
    out["value"] = str(mono_count(spec, c))
    _emit(args, _dump(out))
    return EXIT_OK


def cmd_delta(args) -> int:
    spec, c = _read_instance(args)
    if c is None:
        raise InputError("delta needs a coloring (--input file with a 'counts' field)")
    i2 = None if args.move == RECOLOR else (args.class_i2 - 1 if args.class_i2 else None)
    move = Move(args.move, args.class_i - 1, _parse_color(args.color_from), _parse_color(args.color_to), i2)
    change = delta(spec, c, move)
    after = apply_move(spec, c, move)
    _emit(args, _dump({"move": move.to_json(), "delta": str(change), "after": after.to_json()}))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.balanced2 or args.balanced3:
        if not args.class_sizes or len(args.class_sizes) != 1 or args.k is None:
            raise InputError("--balanced2/--balanced3 need a single -n and -k")
        fn = construct_balanced_2color if args.balanced2 else construct_balanced_3color
        result = fn(args.class_sizes[0], args.k, args.edge_size)
    elif args.tripartite:
        result = construct_tripartite_2color(*sorted(args.tripartite))
    elif args.degenerate:
        result = construct_degenerate(_read_instance(args)[0])
    else:
        result = construct(_read_instance(args)[0])
    _emit(args, _dump(result.to_json()))
    return EXIT_OK


def cmd_brute(args) -> int:
    spec, _ = _read_instance(args)
    budget = args.budget or default_budget()
    result = brute_force_min(spec, args.fixed_totals, budget=budget, jobs=args.jobs)
    out = {"spec": spec.to_json(), **result.to_json()}
    _emit(args, _dump(out))
    return EXIT_OK


def cmd_search(args) -> int:
    spec, start = _read_instance(args)
    if start is None:
        raise InputError("search needs a starting coloring (--input file with a 'counts' field)")
    rng = random.Random(args.seed) if args.seed is not None else None
    value = mono_count(spec, start)
    trace = [{"step": 0, "value": str(value), "counts": start.to_json()}]
    end = start
    for step, (move, change, end) in enumerate(descend(spec, start, rng), 1):
        value += change
        trace.append({"step": step, "move": move.to_json(), "delta": str(change),
                      "value": str(value), "counts": end.to_json()})
    _emit(args, _dump({"spec": spec.to_json(), "start_value": trace[0]["value"],
                       "end_value": str(value), "end": end.to_json(), "trace": trace}))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec, _ = _read_instance(args)
    budget = args.budget or default_budget()
    verdict = verify_spec(spec, budget=budget, jobs=args.jobs)
    _emit(args, _dump(verdict.to_json()))
    return EXIT_OK if verdict.match else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    budget = args.budget or default_budget()
    explicit = acceptance_specs() if args.preset == "acceptance" else []
    config = SweepConfig(
        family=args.family,
        n_range=parse_range(args.n_range),
        k_range=parse_range(args.k_range),
        e_range=parse_range(args.e_range),
        m_range=parse_range(args.m_range),
        mode=args.mode,
        out=args.out,
        fmt=args.format,
        budget=budget,
        jobs=args.jobs,
        explicit=explicit,
    )
    rows = list(sweep_rows(config.specs(), config.mode, budget=config.budget, jobs=config.jobs))
    _emit(args, rows_to_csv(rows).rstrip("\n") if config.fmt == "csv" else rows_to_json(rows))
    if config.mode == "verify" and any(r.match is False for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercolor",
        description="Minimum monochromatic-edge colorings of complete multipartite uniform hypergraphs.",
        epilog=f"Environment: {BUDGET_ENV} overrides the default oracle budget ({DEFAULT_BUDGET}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count monochromatic edges of a coloring")
    _add_spec_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("delta", help="closed-form change for a recolor, swap or total swap")
    _add_spec_args(p)
    _add_output_args(p)
    p.add_argument("--move", choices=MOVE_KINDS, required=True)
    p.add_argument("--class-i", type=int, required=True, help="1-based class whose vertices change color_from -> color_to")
    p.add_argument("--class-i2", type=int, help="1-based partner class for swaps (changes color_to -> color_from)")
    p.add_argument("--from", dest="color_from", required=True, help="color index or name")
    p.add_argument("--to", dest="color_to", required=True, help="color index or name")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("construct", help="closed-form minimum coloring")
    _add_spec_args(p)
    _add_output_args(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--balanced2", action="store_true")
    group.add_argument("--balanced3", action="store_true")
    group.add_argument("--degenerate", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("brute", help="exhaustive minimum over all count vectors")
    _add_spec_args(p)
    _add_output_args(p)
    _add_oracle_args(p)
    p.add_argument("--fixed-totals", type=int, nargs="+", metavar="X", help="prescribed color totals")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("search", help="local search from a starting coloring, with trace")
    _add_spec_args(p)
    _add_output_args(p)
    p.add_argument("--seed", type=int, help="shuffle move order with this seed")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check the construction against the oracle")
    _add_spec_args(p)
    _add_output_args(p)
    _add_oracle_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verdicts or values over a range of specs")
    p.add_argument("--preset", choices=("acceptance",), help="use the built-in acceptance spec list")
    p.add_argument("--family", choices=FAMILIES, default="balanced")
    p.add_argument("--mode", choices=MODES, default="verify")
    p.add_argument("-n", "--class-sizes", dest="n_range", default="3", help="class size range, e.g. 3:5 or 3,4")
    p.add_argument("-k", dest="k_range", default="3", help="class count range (balanced family)")
    p.add_argument("-e", "--edge-size", dest="e_range", default="3", help="edge size range")
    p.add_argument("-m", "--colors", dest="m_range", default="2", help="color count range")
    p.add_argument("--out", "-o")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    _add_oracle_args(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HypercolorError, InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
