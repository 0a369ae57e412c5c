"""Command-line interface: ``rggdim {generate,test,scan,simulate}``.

Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 parse error,
4 degenerate variance.  Floats are written with Python's shortest
round-trip representation, always with a ``.`` as decimal separator.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from rggdim.dimtest import DegenerateResult, TestResult, scan_m0
from rggdim.edgelist import format_edge_list, parse_edge_list
from rggdim.errors import EstimationFailedError, InvalidInputError, ParseError
from rggdim.geometry import RggParams, generate_rgg
from rggdim.simulate import SimConfig, estimate_many

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DEGENERATE = 4

TEST_FIELDS = ("n", "m0", "alpha", "d_n", "sigma2_hat", "statistic", "p_value", "reject")
SCAN_FIELDS = ("m0", "d_n", "sigma2_hat", "statistic", "p_value", "reject")
SIM_FIELDS = (
    "n", "m", "r", "m0", "alpha", "reps", "seed",
    "rejections", "degenerate_count", "rejection_rate", "std_error",
)

log = logging.getLogger("rggdim")


class UsageError(Exception):
    pass


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_json(record: dict) -> str:
    # hand-rolled so float formatting matches the CSV writer exactly
    body = ", ".join(f"{json.dumps(k)}: {json.dumps(v) if isinstance(v, str) else fmt(v)}" for k, v in record.items())
    return "{" + body + "}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rggdim", description="Test the latent dimension of a random geometric graph.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample a torus RGG and write it as an edge list")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--r", type=float, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output path, '-' for stdout")

    test = sub.add_parser("test", help="test H0: m = m0 on an edge-list file")
    test.add_argument("--input", required=True)
    test.add_argument("--m0", type=int, required=True)
    test.add_argument("--alpha", type=float, default=0.05)
    test.add_argument("--format", choices=("json", "csv"), default="json")
    test.add_argument("--nodes", type=int, default=None, help="total node count, including isolated nodes")

    scan = sub.add_parser("scan", help="p-values for a range of m0")
    scan.add_argument("--input", required=True)
    scan.add_argument("--m0-min", type=int, default=1)
    scan.add_argument("--m0-max", type=int, default=5)
    scan.add_argument("--alpha", type=float, default=0.05)
    scan.add_argument("--format", choices=("csv", "json"), default="csv")
    scan.add_argument("--nodes", type=int, default=None)

    sim = sub.add_parser("simulate", help="Monte Carlo rejection rates over a parameter grid")
    sim.add_argument("--n", type=_int_list, required=True, help="node counts, comma separated")
    sim.add_argument("--m", type=_int_list, required=True, help="true dimensions, comma separated")
    sim.add_argument("--r", type=_float_list, required=True, help="radii, comma separated")
    sim.add_argument("--m0", type=_int_list, required=True, help="hypothesised dimensions, comma separated")
    sim.add_argument("--alpha", type=float, default=0.05)
    sim.add_argument("--reps", type=int, default=1000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--threads", type=int, default=1, help="worker processes; output does not depend on it")
    sim.add_argument("--out", default="-")
    return parser


def _write(path: str, text: str, stdout) -> None:
    if path == "-":
        stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _load(args):
    data = Path(args.input).read_bytes()
    doc = parse_edge_list(data)
    return doc.to_adjacency(args.nodes)


def cmd_generate(args, stdout) -> int:
    params = RggParams(args.n, args.m, args.r, args.seed)
    _, A = generate_rgg(params)
    header = ["rggdim torus random geometric graph", f"n={params.n} m={params.m} r={params.r!r} seed={params.seed}"]
    _write(args.out, format_edge_list(A, header), stdout)
    return EXIT_OK


def cmd_test(args, stdout) -> int:
    A = _load(args)
    (outcome,) = scan_m0(A, [args.m0], args.alpha)
    record = outcome.as_dict()
    if args.format == "json":
        stdout.write(to_json(record) + "\n")
    else:
        keys = TEST_FIELDS if isinstance(outcome, TestResult) else tuple(record)
        stdout.write(",".join(keys) + "\n")
        stdout.write(",".join(fmt(record[k]) for k in keys) + "\n")
    return EXIT_OK if isinstance(outcome, TestResult) else EXIT_DEGENERATE


def _scan_row(outcome) -> dict:
    row = {k: getattr(outcome, k) for k in ("m0", "d_n", "sigma2_hat")}
    if isinstance(outcome, DegenerateResult):
        row.update(statistic="degenerate", p_value="degenerate", reject="degenerate")
    else:
        row.update(statistic=outcome.statistic, p_value=outcome.p_value, reject=outcome.reject)
    return row


def cmd_scan(args, stdout) -> int:
    if args.m0_min > args.m0_max:
        raise UsageError(f"--m0-min ({args.m0_min}) exceeds --m0-max ({args.m0_max})")
    A = _load(args)
    outcomes = scan_m0(A, range(args.m0_min, args.m0_max + 1), args.alpha)
    if args.format == "csv":
        stdout.write(",".join(SCAN_FIELDS) + "\n")
        for outcome in outcomes:
            row = _scan_row(outcome)
            stdout.write(",".join(fmt(row[k]) for k in SCAN_FIELDS) + "\n")
    else:
        stdout.write("[" + ", ".join(to_json(o.as_dict()) for o in outcomes) + "]\n")
    if outcomes and all(isinstance(o, DegenerateResult) for o in outcomes):
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_simulate(args, stdout) -> int:
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    configs = [
        SimConfig(n, m, r, m0, alpha=args.alpha, reps=args.reps, seed=args.seed)
        for m0 in args.m0
        for r in args.r
        for n in args.n
        for m in args.m
    ]
    reports = estimate_many(configs, workers=args.threads)
    lines = [",".join(SIM_FIELDS)]
    for rep in reports:
        c = rep.config
        values = (c.n, c.m, c.r, c.m0, c.alpha, c.reps, c.seed,
                  rep.rejections, rep.degenerate_count, rep.rejection_rate, rep.std_error)
        lines.append(",".join(fmt(v) for v in values))
    _write(args.out, "\n".join(lines) + "\n", stdout)
    return EXIT_OK


COMMANDS = {"generate": cmd_generate, "test": cmd_test, "scan": cmd_scan, "simulate": cmd_simulate}


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    logging.basicConfig(level=logging.WARNING, format="rggdim: %(message)s", stream=stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, stdout)
    except (UsageError, InvalidInputError) as exc:
        print(f"rggdim: error: {exc}", file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"rggdim: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except EstimationFailedError as exc:
        print(f"rggdim: {exc}", file=stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"rggdim: {exc}", file=stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())
