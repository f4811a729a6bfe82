"""Command-line interface: ``unitary-bounds {eval,verify,sweep,permmax}``.

Exit codes: 0 ok, 2 input/format error, 3 mathematical precondition
error, 4 verification failure, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import errors
from .evaluate import amplitudes_for, evaluate
from .fileio import load_operators, load_state
from .labels import parse_bound
from .pair_bounds import PairContext, perm_bound_I1_prime, perm_bound_S
from .scenarios import get_scenario, random_instance
from .search import Exhaustive, Sampled
from .sweeps import FIGURES, gnuplot_script, sweep
from .triple_bounds import TripleContext, perm_bound_M
from .verify import dump_failures, verify_random, verify_scenario

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4
EXIT_IO = 5

_INPUT_ERRORS = (errors.FormatError, errors.DimensionError, errors.CoordinateError)
_MATH_ERRORS = (errors.NotUnitaryError, errors.InvalidStateError, errors.SearchCapError)

_THETA = re.compile(r"^\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def parse_theta(text: str) -> float:
    """Parse ``1.0``, ``pi/4``, ``-3pi/2`` or ``0.5*pi``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _THETA.match(text)
    if not m:
        raise errors.FormatError(f"cannot parse theta {text!r}")
    coef = m.group(1)
    if coef in ("", "+"):
        value = math.pi
    elif coef == "-":
        value = -math.pi
    else:
        value = float(coef) * math.pi
    if m.group(2):
        value /= float(m.group(2))
    return value


def parse_dims(text: str) -> list[int]:
    """Read "3", "2,4" or "2-6" into a list of dimensions."""
    dims = []
    try:
        for part in text.split(","):
            lo, _, hi = part.strip().partition("-")
            dims.extend(range(int(lo), int(hi or lo) + 1))
    except ValueError:
        raise errors.FormatError(f"dims must read like 3, 2,4 or 2-6, got {text!r}") from None
    if not dims:
        raise errors.FormatError(f"no dimensions in {text!r}")
    return dims


def parse_grid(spec: str | None, num: int | None):
    """``start:stop:step`` (stop excluded) or, with ``num``, ``num`` points from start to stop."""
    if spec is None and num is None:
        return None
    spec = spec or "0:2pi:0.01"
    parts = spec.split(":")
    if len(parts) not in (2, 3):
        raise errors.FormatError(f"grid must read start:stop[:step], got {spec!r}")
    start, stop = parse_theta(parts[0]), parse_theta(parts[1])
    if num is not None:
        grid = np.linspace(start, stop, num)
    else:
        step = parse_theta(parts[2]) if len(parts) == 3 else 0.01
        if step <= 0:
            raise errors.FormatError("grid step must be positive")
        grid = np.arange(start, stop, step)
    if grid.size < 2:
        raise errors.FormatError("grid needs at least 2 points")
    return grid


def _load_instance(args, n_ops_default: int = 2):
    """State and operators from --scenario/--theta or --state/--ops."""
    if args.scenario:
        if args.scenario.startswith("random:"):
            try:
                n = int(args.scenario.split(":", 1)[1])
            except ValueError:
                raise errors.FormatError(f"bad scenario {args.scenario!r}") from None
            rng = np.random.default_rng(args.seed)
            n_ops = getattr(args, "operators", None) or n_ops_default
            return random_instance(n, n_ops, rng, mixed=getattr(args, "mixed", False))
        scenario = get_scenario(args.scenario)
        theta = parse_theta(args.theta) if args.theta is not None else 0.0
        return scenario.state_at(theta), list(scenario.operators)
    if not (args.state and args.ops):
        raise errors.FormatError("give either --scenario or both --state and --ops")
    state = load_state(args.state, args.tol or 1e-10)
    ops = load_operators(args.ops, args.tol or 1e-10)
    if ops[0].shape[0] != state.dim:
        raise errors.DimensionError(
            f"operators act on dim {ops[0].shape[0]} but the state has dim {state.dim}"
        )
    return state, ops


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json-lines":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "csv":
        out.write("quantity,value\n")
        for rec in records:
            out.write(f"{rec['quantity']},{rec['value']:.17g}\n")
    else:
        width = max(len(r["quantity"]) for r in records)
        for rec in records:
            extra = f"  (axis {rec['axis']})" if rec.get("axis") else ""
            out.write(f"{rec['quantity']:<{width}}  {rec['value']:.12g}{extra}\n")


def cmd_eval(args) -> int:
    selectors = None
    if args.bounds:
        selectors = [s for s in re.split(r"[,\s]+", args.bounds) if s]
    n_ops = 3 if selectors and any(parse_bound(s).operators == 3 for s in selectors) else 2
    state, ops = _load_instance(args, n_ops)
    result = evaluate(state, ops, selectors, tol=args.tol or 1e-10)
    records = []
    for k, var in enumerate(result.variances):
        records.append({"quantity": f"variance_{'ABC'[k]}", "value": var})
    if "product" not in result.bounds:
        records.append({"quantity": "product", "value": result.product})
    for name, value in result.bounds.items():
        rec = {"quantity": name, "value": value}
        if name in result.axes:
            rec["axis"] = result.axes[name]
        records.append(rec)
    _emit(records, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.tol is not None and args.tol < 0:
        raise errors.FormatError("--tol must be nonnegative")
    if args.random:
        dims = parse_dims(args.dims)
        report = verify_random(
            dims, args.trials, args.seed, n_ops=args.operators, mixed=args.mixed, tol=args.tol
        )
        label = f"random dims={args.dims} trials={args.trials} seed={args.seed}"
    elif args.scenario:
        grid = parse_grid(args.grid, args.num)
        if grid is None:
            from .scenarios import default_grid

            grid = default_grid()
        report = verify_scenario(args.scenario, grid, tol=args.tol)
        label = f"scenario {args.scenario}, {len(grid)} grid points"
    else:
        raise errors.FormatError("verify needs --random or --scenario")
    print(f"verify: {label}, {report.instances} instances")
    for line in report.lines():
        print(line)
    if report.passed:
        print("verify: PASS")
        return EXIT_OK
    if args.out:
        dump_failures(report, args.out)
        print(f"verify: FAIL, failing instances written to {args.out}")
    else:
        print("verify: FAIL, first failing instance:")
        print(json.dumps(report.failing[0], sort_keys=True))
    return EXIT_VERIFY


def cmd_sweep(args) -> int:
    grid = parse_grid(args.grid, args.num)
    result = sweep(args.figure, grid)
    violations = result.bound_violations()
    if args.out:
        out = Path(args.out)
        result.write_csv(out)
        out.with_suffix(".gp").write_text(gnuplot_script(result, out.name, args.figure))
        print(f"wrote {out} ({result.grid.size} rows) and {out.with_suffix('.gp')}", file=sys.stderr)
    else:
        sys.stdout.write(result.to_csv())
    for name, theta in violations:
        print(f"finding: {name} exceeds product at theta={theta:.17g}", file=sys.stderr)
    return EXIT_OK


def cmd_permmax(args) -> int:
    spec = parse_bound(args.bound)
    state, ops = _load_instance(args, spec.operators)
    strategy = Exhaustive() if args.strategy == "exhaustive" else Sampled(args.samples, args.seed)
    amps = amplitudes_for(state, ops, args.tol or 1e-10)
    if spec.family == "I1prime":
        res = perm_bound_I1_prime(PairContext(amps[0], amps[1]), strategy, args.convention)
    elif spec.family == "S":
        res = perm_bound_S(PairContext(amps[0], amps[1]), *spec.index, strategy)
    elif spec.family == "M" and spec.axis is None:
        if len(amps) < 3:
            raise errors.CoordinateError("M bounds need three operators")
        res = perm_bound_M(TripleContext(*amps[:3]), *spec.index, strategy)
    else:
        raise errors.CoordinateError(
            f"permutation search supports I1', S(p,q) and M(t,p,q); got {args.bound!r}"
        )
    record = {
        "bound": spec.name,
        "value": res.value,
        "identity_value": res.baseline,
        "improvement": res.improvement,
        "permutations": [list(p) for p in res.permutations],
        "evaluations": res.evaluations,
        "strategy": args.strategy,
    }
    if res.axis:
        record["axis"] = res.axis
    if args.format == "json-lines":
        print(json.dumps(record, sort_keys=True))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", help="ex1, ex2, ex3:<d>, ex4 or random:<n>")
    p.add_argument("--theta", default=None, help="state parameter, e.g. 1.0 or pi/4")
    p.add_argument("--state", help="state file")
    p.add_argument("--ops", nargs="+", help="operator file(s)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitary-bounds",
        description="Variance-product lower bounds for two and three unitary operators.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="tolerance override")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate variances and bounds on one instance")
    _add_instance_args(p)
    p.add_argument("--bounds", help="comma-separated selectors, e.g. \"I1',I2,S31,M121z\"")
    p.add_argument("--format", choices=("text", "csv", "json-lines"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--scenario", help="scenario id whose grid is checked")
    p.add_argument("--random", action="store_true", help="check seeded random instances")
    p.add_argument("--dims", default="2-6", help="e.g. 3, 2,4 or 2-6")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--operators", type=int, choices=(2, 3), default=3)
    p.add_argument("--mixed", action="store_true", help="random density matrices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid")
    p.add_argument("--num", type=int)
    p.add_argument("--out", help="file for failing instances (JSON lines)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="tabulate a figure's series over theta")
    p.add_argument("figure", choices=sorted(FIGURES))
    p.add_argument("--grid", help="start:stop:step, default 0:2pi:0.01")
    p.add_argument("--num", type=int, help="number of points (linspace from start to stop)")
    p.add_argument("--out", help="CSV path; a gnuplot script is written next to it")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("permmax", parents=[common], help="maximise a bound over index relabelings")
    _add_instance_args(p)
    p.add_argument("--bound", required=True, help="I1', S(p,q) or M(t,p,q)")
    p.add_argument("--strategy", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--convention", choices=("consistent", "literal"), default="consistent")
    p.add_argument("--operators", type=int, choices=(2, 3), default=None)
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    p.set_defaults(func=cmd_permmax)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _MATH_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
