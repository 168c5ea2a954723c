"""Command line entry point.

    zxsynth synth A.json --out A.diagram.json     # also writes A.diagram.plan.json
    zxsynth eval A.diagram.json --out B.json
    zxsynth verify A.json A.diagram.json
    zxsynth matchgate --entries p q r s w x y z --out G.json
    zxsynth export A.diagram.json --out A.dot

Exit codes: 0 ok, 1 verification mismatch, 2 unreadable or malformed input,
3 synthesis self-check failed, 4 diagram exceeds the size cap
(``ZXSYNTH_MAX_WIRES``, default 24).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

import numpy as np

from . import dot, matrixio, serialization
from .interpreter import SizeCapError, interpret, max_abs_error, relative_error
from .matchgate import MatchgateSpec, MatchgateWarning, matchgate_diagram, matchgate_matrix, route
from .synthesis import DEFAULT_PIVOT_TOL, SynthesisPlan, eliminate, plan_diagram

OK, MISMATCH, PARSE_ERROR, SELF_CHECK_FAILED, SIZE_CAP = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code, message):
    raise CliError(code, message)


def _read_matrix(path, fmt):
    try:
        return matrixio.read_matrix(path, fmt)
    except (OSError, ValueError) as exc:
        _fail(PARSE_ERROR, f"cannot read matrix {path}: {exc}")


def _read_diagram(path):
    try:
        return serialization.deserialize(Path(path).read_bytes())
    except (OSError, ValueError) as exc:
        _fail(PARSE_ERROR, f"cannot read diagram {path}: {exc}")


def _evaluate(d):
    try:
        return interpret(d)
    except SizeCapError as exc:
        _fail(SIZE_CAP, str(exc))


def plan_path(diagram_path) -> Path:
    p = Path(diagram_path)
    stem = p.name[:-len(p.suffix)] if p.suffix else p.name
    return p.with_name(stem + ".plan.json")


def cmd_synth(args) -> int:
    a = _read_matrix(args.matrix, args.format)
    plan = eliminate(a, args.pivot_tol, stop_at_rref=args.stop_at_rref)
    d = plan_diagram(plan)
    Path(args.out).write_bytes(serialization.serialize(d))
    plan_path(args.out).write_text(plan.dumps())
    counts = plan.counts()
    total = sum(counts.values())
    print(f"rank: {plan.rank}")
    print(f"ops: {total}" + "".join(f" {k}={v}" for k, v in sorted(counts.items())))
    err = relative_error(_evaluate(d), a)
    print(f"self-check relative error: {err:.3e}")
    if err > args.tol:
        _fail(SELF_CHECK_FAILED, f"self-check error {err:.3e} exceeds tol {args.tol:g}")
    return OK


def cmd_eval(args) -> int:
    d = _read_diagram(args.diagram)
    out = _evaluate(d)
    print(f"shape: {out.shape[0]}x{out.shape[1]}")
    if args.out:
        matrixio.write_matrix(args.out, out, args.format)
    else:
        print(json.dumps(matrixio.matrix_to_json(out)))
    return OK


def cmd_verify(args) -> int:
    a = _read_matrix(args.matrix, args.format)
    d = _read_diagram(args.diagram)
    got = _evaluate(d)
    if got.shape != a.shape:
        print(f"shape mismatch: diagram gives {got.shape}, matrix is {a.shape}")
        return MISMATCH
    max_err, fro_err = max_abs_error(got, a), relative_error(got, a)
    print(f"max-entry error: {max_err:.3e}")
    print(f"relative Frobenius error: {fro_err:.3e}")
    ok = fro_err <= args.tol
    if args.plan:
        try:
            plan = SynthesisPlan.loads(Path(args.plan).read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            _fail(PARSE_ERROR, f"cannot read plan {args.plan}: {exc}")
        if (2 ** plan.m, 2 ** plan.n) != a.shape:
            print(f"plan is for a {2 ** plan.m}x{2 ** plan.n} matrix, got {a.shape}")
            return MISMATCH
        replay_err = max_abs_error(plan.replay(a), plan.standard_form())
        print(f"plan replay error: {replay_err:.3e}")
        ok = ok and replay_err <= max(args.tol, plan.pivot_tolerance) * max(1.0, np.abs(a).max())
    return OK if ok else MISMATCH


def _matchgate_spec(args) -> MatchgateSpec:
    try:
        if args.json:
            obj = json.loads(Path(args.json).read_text())
            if isinstance(obj, dict):
                blocks = obj["A"], obj["B"]
            else:
                blocks = obj[0], obj[1]
            A, B = (matrixio.matrix_from_json(b) for b in blocks)
        else:
            vals = [matrixio.parse_complex(v) for v in args.entries]
            A, B = np.array(vals[:4]).reshape(2, 2), np.array(vals[4:]).reshape(2, 2)
        return MatchgateSpec(A, B)
    except (OSError, ValueError, KeyError, IndexError, TypeError) as exc:
        _fail(PARSE_ERROR, f"cannot read matchgate blocks: {exc}")


def cmd_matchgate(args) -> int:
    spec = _matchgate_spec(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", MatchgateWarning)
        d = matchgate_diagram(spec)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print(f"route: {route(spec)}")
    err = relative_error(_evaluate(d), matchgate_matrix(spec))
    print(f"self-check relative error: {err:.3e}")
    if args.out:
        Path(args.out).write_bytes(serialization.serialize(d))
    if err > args.tol:
        _fail(SELF_CHECK_FAILED, f"self-check error {err:.3e} exceeds tol {args.tol:g}")
    return OK


def cmd_export(args) -> int:
    d = _read_diagram(args.diagram)
    text = dot.to_dot(d)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zxsynth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="build a diagram for a matrix file")
    p.add_argument("matrix")
    p.add_argument("--out", required=True, help="diagram JSON to write")
    p.add_argument("--tol", type=_positive, default=1e-9, help="self-check tolerance")
    p.add_argument("--pivot-tol", type=_positive, default=DEFAULT_PIVOT_TOL)
    p.add_argument("--stop-at-rref", action="store_true",
                   help="keep pivots in the core instead of normalizing them")
    p.add_argument("--format", choices=["json", "csv"], help="matrix file format")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("eval", help="evaluate a diagram to a matrix")
    p.add_argument("diagram")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "csv"])
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check a diagram against a matrix")
    p.add_argument("matrix")
    p.add_argument("diagram")
    p.add_argument("--tol", type=_positive, default=1e-9, help="relative Frobenius tolerance")
    p.add_argument("--plan", help="also replay a plan JSON against the matrix")
    p.add_argument("--format", choices=["json", "csv"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matchgate", help="diagram for the matchgate G(A, B)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--entries", nargs=8, metavar=("p", "q", "r", "s", "w", "x", "y", "z"))
    group.add_argument("--json", help='file with {"A": [[..]], "B": [[..]]} or [A, B]')
    p.add_argument("--out")
    p.add_argument("--tol", type=_positive, default=1e-9)
    p.set_defaults(func=cmd_matchgate)

    p = sub.add_parser("export", help="write a GraphViz DOT rendering")
    p.add_argument("diagram")
    p.add_argument("--out")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
