"""Command-line interface.

Subcommands: ``detect`` (run group extraction on an edge-list file),
``measure`` (print one pair's value or the whole table), ``generate``
(synthetic networks: ``planted`` and ``scenario4``) and ``eval nmi``
(compare two partition files).

Exit codes: 0 success, 1 usage error, 2 data error.  Results go to
standard output or ``--output``; all diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .detection import (
    DetectionConfig,
    Lexicographic,
    SeededRandom,
    parse_validity,
    run_detection,
)
from .errors import CleccError, InvalidParamsError, OracleMismatchError
from .evaluation import nmi
from .formats import (
    parse_edge_list,
    partition_from_json,
    partition_to_dict,
    write_edge_list,
    write_result,
)
from .generators import PlantedParams, generate_density_scenario, generate_planted
from .measures import clecc, clecc_table
from .reference import naive_clecc, naive_detect

__all__ = ["main", "cli_main"]


class UsageError(Exception):
    """Bad command line; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="clecc", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    detect = sub.add_parser("detect", help="extract multi-layered groups")
    detect.add_argument("--input", required=True, help="edge-list CSV file")
    detect.add_argument("--alpha", required=True, type=int, help="layer threshold")
    detect.add_argument(
        "--validity",
        default="weak",
        help="group condition: min-size:K, weak or strong (default: weak)",
    )
    detect.add_argument(
        "--ties", choices=("lex", "random"), default="lex", help="tie policy"
    )
    detect.add_argument("--seed", type=int, help="seed for --ties random")
    detect.add_argument("--output", help="write JSON here instead of stdout")
    detect.add_argument(
        "--log-removals", action="store_true", help="include the removal log"
    )
    detect.add_argument("--delimiter", default=",", help="edge-list field separator")
    detect.add_argument(
        "--dedupe", action="store_true", help="drop duplicate edges instead of failing"
    )
    detect.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    detect.set_defaults(handler=_cmd_detect)

    measure = sub.add_parser("measure", help="print CLECC values")
    measure.add_argument("--input", required=True, help="edge-list CSV file")
    measure.add_argument("--alpha", required=True, type=int, help="layer threshold")
    measure.add_argument("--pair", help="X,Y — print this pair's value only")
    measure.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    measure.set_defaults(handler=_cmd_measure)

    generate = sub.add_parser("generate", help="write synthetic networks")
    gen_sub = generate.add_subparsers(dest="model", metavar="MODEL")
    planted = gen_sub.add_parser("planted", help="planted-partition benchmark")
    planted.add_argument("--sizes", required=True, help="community sizes, e.g. 16,16")
    planted.add_argument("--layers", required=True, type=int)
    planted.add_argument("--p-in", required=True, type=float, dest="p_in")
    planted.add_argument("--p-out", required=True, type=float, dest="p_out")
    planted.add_argument("--seed", required=True, type=int)
    planted.add_argument("--output", required=True, help="edge-list file to write")
    planted.add_argument("--truth", help="also write the ground-truth partition JSON")
    planted.set_defaults(handler=_cmd_generate_planted)
    scenario = gen_sub.add_parser(
        "scenario4", help="1000 nodes, two dense and two sparse layers"
    )
    scenario.add_argument("--seed", required=True, type=int)
    scenario.add_argument("--output", required=True, help="edge-list file to write")
    scenario.set_defaults(handler=_cmd_generate_scenario)

    evaluate = sub.add_parser("eval", help="score partitions")
    eval_sub = evaluate.add_subparsers(dest="metric", metavar="METRIC")
    nmi_cmd = eval_sub.add_parser("nmi", help="normalized mutual information")
    nmi_cmd.add_argument("--truth", required=True, help="partition JSON file")
    nmi_cmd.add_argument("--predicted", required=True, help="partition JSON file")
    nmi_cmd.set_defaults(handler=_cmd_eval_nmi)

    return parser


def _read_network(path: str, delimiter: str = ",", dedupe: bool = False):
    with open(path, "r", encoding="utf-8") as handle:
        parsed = parse_edge_list(handle, delimiter=delimiter, dedupe=dedupe)
    if parsed.duplicates_dropped:
        print(
            f"note: dropped {parsed.duplicates_dropped} duplicate edge(s)",
            file=sys.stderr,
        )
    return parsed.network


def _cmd_detect(args) -> str:
    if args.ties == "random":
        if args.seed is None:
            raise UsageError("--ties random requires an explicit --seed")
        policy = SeededRandom(args.seed)
    else:
        if args.seed is not None:
            raise UsageError("--seed only applies with --ties random")
        policy = Lexicographic()
    if args.oracle and args.ties != "lex":
        raise UsageError("--oracle needs --ties lex (random runs are not comparable)")
    config = DetectionConfig(
        alpha=args.alpha,
        validity=parse_validity(args.validity),
        tie_policy=policy,
        log_removals=args.log_removals,
    )
    net = _read_network(args.input, args.delimiter, args.dedupe)
    result = run_detection(net, config)
    text = write_result(result, pretty=True)
    if args.oracle:
        reference = write_result(naive_detect(net, config), pretty=True)
        if reference != text:
            raise OracleMismatchError(
                "optimized detection and brute-force reference disagree"
            )
        print("oracle check passed", file=sys.stderr)
    return text + "\n"


def _cmd_measure(args) -> str:
    net = _read_network(args.input)
    if args.pair is not None:
        parts = args.pair.split(",")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise UsageError("--pair expects two comma-separated node labels")
        x, y = parts
        value = clecc(net, x, y, args.alpha)
        if args.oracle and naive_clecc(net, x, y, args.alpha) != value:
            raise OracleMismatchError(
                f"optimized and reference values disagree for pair ({x!r}, {y!r})"
            )
        return f"{value}\n"
    table = clecc_table(net, args.alpha)
    lines = ["x,y,clecc"]
    for (a, b), value in sorted(table.items()):
        if args.oracle and naive_clecc(net, a, b, args.alpha) != float(value):
            raise OracleMismatchError(
                f"optimized and reference values disagree for pair ({a!r}, {b!r})"
            )
        lines.append(f"{a},{b},{float(value)}")
    return "\n".join(lines) + "\n"


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--sizes expects comma-separated integers, got {text!r}")
    if not sizes:
        raise UsageError("--sizes must name at least one community")
    return sizes


def _cmd_generate_planted(args) -> str:
    try:
        params = PlantedParams(
            sizes=_parse_sizes(args.sizes),
            layers=args.layers,
            p_in=args.p_in,
            p_out=args.p_out,
            seed=args.seed,
        )
    except InvalidParamsError as exc:
        raise UsageError(str(exc)) from None
    planted = generate_planted(params)
    if args.truth:
        truth_doc = json.dumps(partition_to_dict(planted.truth_partition()), indent=2)
        Path(args.truth).write_text(truth_doc + "\n", encoding="utf-8")
    return write_edge_list(planted.network)


def _cmd_generate_scenario(args) -> str:
    return write_edge_list(generate_density_scenario(args.seed))


def _cmd_eval_nmi(args) -> str:
    truth = partition_from_json(Path(args.truth).read_text(encoding="utf-8"))
    predicted = partition_from_json(Path(args.predicted).read_text(encoding="utf-8"))
    try:
        score = nmi(truth, predicted)
    except ValueError as exc:
        raise CleccError(str(exc)) from None
    return f"{score}\n"


def cli_main(argv: list[str]) -> int:
    """Parse arguments, dispatch, and map failures to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "handler", None) is None:
            print("usage error: missing command", file=sys.stderr)
            print(parser.format_usage(), end="", file=sys.stderr)
            return 1
        text = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        code = exc.code
        return 0 if code is None else int(code)
    except CleccError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    """Console entry point."""
    return cli_main(sys.argv[1:] if argv is None else argv)
