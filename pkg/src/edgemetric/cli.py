"""Command-line front end.

Subcommands: dist, matrix, hilbert, orbits, check. Inputs are dot-bracket
strings (default) or pair-list lines ("n: i-j, i-j"); ensemble files hold
one structure per line with '#' comments. Output is JSON (schema
"edgemetric/1") or TSV, byte-identical across runs for identical inputs.

Exit codes: 0 ok, 1 parse error, 2 validation error, 3 length mismatch,
4 oracle disagreement (check), 5 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import hilbert as hilbert_mod
from . import metrics, oracle
from .errors import (
    BudgetExceeded,
    EdgeMetricError,
    HeterogeneousLengths,
    InvalidMetricIndex,
    LengthMismatch,
    NotationError,
    StructureError,
)
from .notation import parse_dotbracket
from .orbits import decompose
from .structures import (
    ContactStructure,
    StructureKind,
    iter_structure_lines,
    parse_pair_line,
)

SCHEMA = "edgemetric/1"
BUDGET_ENV_VAR = "EDGEMETRIC_BUDGET"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_LENGTH = 3
EXIT_DISAGREE = 4
EXIT_BUDGET = 5


@dataclass
class RunConfig:
    metric_index: int = 4
    input_format: str = "dotbracket"
    output_format: str = "json"
    raw: bool = False
    exact: bool = False
    force_hilbert: bool = False
    method: str = "generic"
    max_degree: int = 6
    budget: int | None = None
    precision: int = metrics.DEFAULT_DECIMAL_DIGITS


def parse_metric_selector(text: str) -> int:
    """Accept d3..d6 style names and the explicit dm:<index> form."""
    sel = text.strip().lower()
    if sel.startswith("dm:"):
        body = sel[3:]
    elif sel.startswith("d"):
        body = sel[1:]
    else:
        body = ""
    if not body.isdigit():
        raise InvalidMetricIndex(f"bad metric selector {text!r}")
    m = int(body)
    if m < 3:
        raise InvalidMetricIndex(f"metric index must be >= 3, got {m}")
    return m


def _read_structure(text: str, config: RunConfig) -> ContactStructure:
    if config.input_format == "pairs":
        return parse_pair_line(text, StructureKind.ARBITRARY)
    return parse_dotbracket(text.strip())


def _read_ensemble(path: str, config: RunConfig) -> list[ContactStructure]:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    structures = [_read_structure(line, config) for line in iter_structure_lines(text)]
    if len(structures) < 2:
        raise StructureError("ensemble needs at least two structures")
    lengths = {s.n for s in structures}
    if len(lengths) > 1:
        raise HeterogeneousLengths(f"mixed lengths in ensemble: {sorted(lengths)}")
    return structures


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_dist(config: RunConfig, text_a: str, text_b: str) -> int:
    a = _read_structure(text_a, config)
    b = _read_structure(text_b, config)
    value = metrics.metric_value(
        a, b, config.metric_index, force_hilbert=config.force_hilbert
    )
    if config.output_format == "json":
        payload = {"schema": SCHEMA, "kind": "distance"}
        payload.update(value.to_dict(config.precision))
        if config.exact:
            payload.pop("decimal")
        _emit(json.dumps(payload))
    else:
        if config.raw:
            _emit(str(value.raw))
        elif config.exact:
            _emit(str(value.normalized))
        else:
            _emit(f"{value.normalized}\t{value.decimal(config.precision)}")
    return EXIT_OK


def cmd_matrix(config: RunConfig, path: str) -> int:
    structures = _read_ensemble(path, config)
    size = len(structures)
    cells: list[list[str]] = [["0"] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            value = metrics.metric_value(
                structures[i],
                structures[j],
                config.metric_index,
                force_hilbert=config.force_hilbert,
            )
            cell = str(value.raw) if config.raw else str(value.normalized)
            cells[i][j] = cell
            cells[j][i] = cell
    if config.output_format == "json":
        _emit(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "kind": "matrix",
                    "metric": f"d{config.metric_index}",
                    "n": structures[0].n,
                    "count": size,
                    "matrix": cells,
                }
            )
        )
    else:
        for row in cells:
            _emit("\t".join(row))
    return EXIT_OK


def cmd_hilbert(config: RunConfig, text: str) -> int:
    s = _read_structure(text, config)
    table = hilbert_mod.HilbertTable.for_structure(
        s, config.max_degree, method=config.method, budget=config.budget
    )
    if config.output_format == "json":
        _emit(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "kind": "hilbert",
                    "n": s.n,
                    "method": config.method,
                    "values": [[m, str(v)] for m, v in table.values],
                }
            )
        )
    else:
        for m, v in table.values:
            _emit(f"{m}\t{v}")
    return EXIT_OK


def cmd_orbits(config: RunConfig, text_a: str, text_b: str) -> int:
    a = _read_structure(text_a, config)
    b = _read_structure(text_b, config)
    orbit_list, stats = decompose(a, b)
    if config.output_format == "json":
        _emit(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "kind": "orbits",
                    "n": a.n,
                    "orbits": [
                        {
                            "nodes": list(o.nodes),
                            "kind": o.kind.value,
                            "length": o.length,
                        }
                        for o in orbit_list
                    ],
                    "lambda": {str(m): c for m, c in stats.lambda_by_length},
                    "theta": {str(m): c for m, c in stats.theta_by_length},
                    "lambda_geq": {str(k): stats.lambda_geq(k) for k in range(2, 7)},
                    "delta_contacts": stats.delta_contacts(),
                }
            )
        )
    else:
        for o in orbit_list:
            _emit(f"orbit\t{o.kind.value}\t{o.length}\t" + ",".join(map(str, o.nodes)))
        for m, c in stats.lambda_by_length:
            _emit(f"lambda\t{m}\t{c}")
        for m, c in stats.theta_by_length:
            _emit(f"theta\t{m}\t{c}")
        for k in range(2, 7):
            _emit(f"lambda_geq\t{k}\t{stats.lambda_geq(k)}")
    return EXIT_OK


def cmd_check(config: RunConfig, text_a: str, text_b: str, max_m: int) -> int:
    a = _read_structure(text_a, config)
    b = _read_structure(text_b, config)
    report = oracle.run_checks(a, b, max_m=max_m, budget=config.budget)
    payload = {"schema": SCHEMA, "kind": "check"}
    payload.update(report.to_dict())
    _emit(json.dumps(payload))
    return EXIT_OK if report.all_agree else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgemetric",
        description="Edge-ideal metrics on contact and RNA secondary structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("dotbracket", "pairs"),
                       default="dotbracket", help="input structure encoding")
        p.add_argument("--output", choices=("json", "tsv"), default=None,
                       help="output encoding")
        p.add_argument("--budget", type=int, default=None,
                       help="enumeration budget override")

    p_dist = sub.add_parser("dist", help="distance between two structures")
    p_dist.add_argument("a")
    p_dist.add_argument("b")
    p_dist.add_argument("--metric", default="d4", help="d3..dN or dm:N")
    p_dist.add_argument("--raw", action="store_true", help="print raw integer")
    p_dist.add_argument("--exact", action="store_true",
                        help="exact rational only, no decimal")
    p_dist.add_argument("--force-hilbert", action="store_true",
                        help="bypass closed forms")
    p_dist.add_argument("--precision", type=int,
                        default=metrics.DEFAULT_DECIMAL_DIGITS,
                        help="decimal digits for display")
    add_common(p_dist)

    p_matrix = sub.add_parser("matrix", help="pairwise distances of an ensemble")
    p_matrix.add_argument("file")
    p_matrix.add_argument("--metric", default="d4")
    p_matrix.add_argument("--raw", action="store_true")
    p_matrix.add_argument("--force-hilbert", action="store_true")
    add_common(p_matrix)

    p_hilbert = sub.add_parser("hilbert", help="Hilbert function table")
    p_hilbert.add_argument("structure")
    p_hilbert.add_argument("--max-degree", type=int, default=6)
    p_hilbert.add_argument("--method", choices=("generic", "closed", "enumerate"),
                           default="generic")
    add_common(p_hilbert)

    p_orbits = sub.add_parser("orbits", help="orbit decomposition report")
    p_orbits.add_argument("a")
    p_orbits.add_argument("b")
    add_common(p_orbits)

    p_check = sub.add_parser("check", help="verify fast routes against oracles")
    p_check.add_argument("a")
    p_check.add_argument("b")
    p_check.add_argument("--max-m", type=int, default=6)
    add_common(p_check)

    return parser


def _config_from(args: argparse.Namespace, default_output: str) -> RunConfig:
    budget = args.budget
    if budget is None:
        env = os.environ.get(BUDGET_ENV_VAR)
        if env:
            budget = int(env)
    return RunConfig(
        metric_index=parse_metric_selector(getattr(args, "metric", "d4")),
        input_format=args.format,
        output_format=args.output or default_output,
        raw=getattr(args, "raw", False),
        exact=getattr(args, "exact", False),
        force_hilbert=getattr(args, "force_hilbert", False),
        method=getattr(args, "method", "generic"),
        max_degree=getattr(args, "max_degree", 6),
        budget=budget,
        precision=getattr(args, "precision", metrics.DEFAULT_DECIMAL_DIGITS),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "dist":
            config = _config_from(args, "json")
            return cmd_dist(config, args.a, args.b)
        if args.command == "matrix":
            config = _config_from(args, "tsv")
            return cmd_matrix(config, args.file)
        if args.command == "hilbert":
            config = _config_from(args, "tsv")
            return cmd_hilbert(config, args.structure)
        if args.command == "orbits":
            config = _config_from(args, "json")
            return cmd_orbits(config, args.a, args.b)
        if args.command == "check":
            config = _config_from(args, "json")
            return cmd_check(config, args.a, args.b, args.max_m)
        parser.error(f"unknown command {args.command}")
    except NotationError as exc:
        return _fail(exc, EXIT_PARSE)
    except LengthMismatch as exc:
        return _fail(exc, EXIT_LENGTH)
    except (StructureError, InvalidMetricIndex) as exc:
        return _fail(exc, EXIT_VALIDATION)
    except BudgetExceeded as exc:
        return _fail(exc, EXIT_BUDGET)
    except FileNotFoundError as exc:
        return _fail(exc, EXIT_PARSE)
    except EdgeMetricError as exc:
        return _fail(exc, EXIT_VALIDATION)
    return EXIT_OK


def _fail(exc: Exception, code: int) -> int:
    sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
