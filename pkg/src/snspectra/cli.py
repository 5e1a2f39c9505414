"""Command line driver.

Subcommands:

- ``verify``: run theorem verification cases and emit a report.
- ``spectrum``: spectrum of one Cayley graph.
- ``quotient``: closed-form quotient matrix and its exact eigenvalues.
- ``character``: exact character values / table export.
- ``enumerate``: list a connecting set in cycle notation.

The character cache directory is taken from SNSPECTRA_CACHE_DIR.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, equitable, graphs, verify, yor
from .diagrams import diagram_string, parse_diagram, partitions_of
from .permutations import cycle_string, enumerate_connecting_set, parse_spec


def _parse_range(text: str) -> list[int]:
    """'7' -> [7]; '5-8' -> [5, 6, 7, 8]."""
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _cmd_verify(args: argparse.Namespace) -> int:
    n_values = _parse_range(args.n)
    r_values = _parse_range(args.r) if args.r else None
    for n in n_values:
        characters.load_character_cache(n)
    outcomes = verify.run_cases(args.theorem, n_values, r_values, args.method)
    for n in n_values:
        characters.save_character_cache(n)
    if args.format == "json":
        print(verify.to_json(outcomes))
    elif args.format == "csv":
        print(verify.to_csv(outcomes), end="")
    else:
        print(verify.to_text(outcomes))
    return verify.exit_code(outcomes)


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = parse_spec(args.set)
    kind = "symmetric" if args.group == "S" else "alternating"
    if args.method == "dense":
        report = graphs.dense_spectrum(graphs.build(kind, spec), allow_large=True)
    else:
        connecting = enumerate_connecting_set(spec)
        report = yor.full_spectrum_via_irreps(spec.n, connecting, kind)
    payload = {
        "group": args.group,
        "n": spec.n,
        "set": str(spec),
        "method": report.method,
        "lambda1": report.lambda1,
        "lambda2": report.lambda2,
        "eigenvalues": report.eigenvalues,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    fn = equitable.quotient_B1 if args.which == "B1" else equitable.quotient_B2
    matrix = fn(args.n, args.k, args.r)
    values = equitable.quotient_eigenvalues(matrix)
    payload = {"which": args.which, "matrix": matrix, "eigenvalues": values}
    if args.csv:
        equitable.export_quotient_csv(matrix, ["V1", "V2", "V3"], args.csv)
        payload["csv"] = args.csv
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_character(args: argparse.Namespace) -> int:
    characters.load_character_cache(args.n)
    if args.diagram and args.klass:
        shape = parse_diagram(args.diagram)
        ctype = parse_diagram(args.klass)
        value = characters.mn_character(shape, ctype)
        print(json.dumps({"diagram": args.diagram, "class": args.klass, "value": value}))
    elif args.csv:
        characters.export_character_table_csv(args.n, args.csv)
        print(json.dumps({"n": args.n, "csv": args.csv}))
    else:
        classes, rows = characters.character_table(args.n)
        print("diagram," + ",".join(diagram_string(c) for c in classes))
        for shape, row in zip(partitions_of(args.n), rows):
            print(diagram_string(shape) + "," + ",".join(map(str, row)))
    characters.save_character_cache(args.n)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    spec = parse_spec(args.set)
    for h in enumerate_connecting_set(spec):
        print(cycle_string(h))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snspectra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run theorem verification cases")
    p.add_argument("--theorem", required=True, choices=verify.THEOREMS)
    p.add_argument("--n", required=True, help="degree or range, e.g. 6 or 5-8")
    p.add_argument("--r", help="prefix length or range where applicable")
    p.add_argument("--method", default="auto", choices=verify.METHODS)
    p.add_argument("--format", default="text", choices=("json", "csv", "text"))
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("spectrum", help="spectrum of one Cayley graph")
    p.add_argument("--group", required=True, choices=("S", "A"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, help='connecting set, e.g. "C(6,3;2)"')
    p.add_argument("--method", default="dense", choices=("dense", "irrep"))
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("quotient", help="closed-form quotient matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--which", required=True, choices=("B1", "B2"))
    p.add_argument("--csv", help="also write the matrix as CSV to this path")
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("character", help="exact character values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagram", help='e.g. "[4,2,1]"')
    p.add_argument("--class", dest="klass", help='cycle type, e.g. "[3,3,1]"')
    p.add_argument("--csv", help="write the full table as CSV to this path")
    p.set_defaults(fn=_cmd_character)

    p = sub.add_parser("enumerate", help="list a connecting set")
    p.add_argument("--set", required=True, help='e.g. "C(5,3;2)"')
    p.set_defaults(fn=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
