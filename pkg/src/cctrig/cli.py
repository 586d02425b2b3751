"""Command-line interface.

    cctrig verify --curvature K --trials N --seed S --tol T [--out PATH] [--format json|csv]
    cctrig solve sas --curvature K -b X -c Y -A Z
    cctrig solve sss --curvature K -a X -b Y -c Z
    cctrig embed --curvature K -r R --theta TH
    cctrig translate --curvature K --point X,Y,Z -d D
    cctrig coeff --curvature K -p P -q Q -r R

Exit status: 0 success, 1 failed verification, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import GenerationExhausted, TrigError
from .harness import GeneratorConfig, run_verification
from .laws import coefficient
from .report import emit_report, fmt
from .solver import DEFAULT_TOLERANCE, solve_sas, solve_sss
from .surface import SurfacePoint, parallel_translate, polar_to_cartesian


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _is_number(s):
    try:
        float(s)
    except ValueError:
        return False
    return True


def _glue_negative_values(argv):
    # argparse reads "-1e-3" or "-1,0,1" as option names; attach them with "="
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok.startswith("-")
            and not _is_number(tok)
            and "=" not in tok
            and nxt is not None
            and nxt.startswith("-")
            and (_is_number(nxt) or _is_number(nxt.split(",")[0]))
        ):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _geometry(K):
    if K not in (-1.0, 0.0, 1.0):
        raise _UsageError("embedding commands need --curvature -1, 0 or 1")
    return int(K)


def _point(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("point must be X,Y,Z")
    return tuple(float(p) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cctrig", description="Constant-curvature trigonometry toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check the trigonometric identities on random triangles")
    v.add_argument("--curvature", type=float, required=True)
    v.add_argument("--trials", type=int, required=True)
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--tol", type=float, required=True)
    v.add_argument("--out")
    v.add_argument("--format", choices=("json", "csv"), default="json")

    s = sub.add_parser("solve", help="solve a triangle")
    modes = s.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    sas = modes.add_parser("sas")
    sas.add_argument("--curvature", type=float, required=True)
    sas.add_argument("-b", type=float, required=True)
    sas.add_argument("-c", type=float, required=True)
    sas.add_argument("-A", type=float, required=True)
    sas.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    sss = modes.add_parser("sss")
    sss.add_argument("--curvature", type=float, required=True)
    sss.add_argument("-a", type=float, required=True)
    sss.add_argument("-b", type=float, required=True)
    sss.add_argument("-c", type=float, required=True)
    sss.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)

    e = sub.add_parser("embed", help="polar coordinates to a point on the model surface")
    e.add_argument("--curvature", type=float, required=True)
    e.add_argument("-r", type=float, required=True)
    e.add_argument("--theta", type=float, required=True)

    t = sub.add_parser("translate", help="parallel translation along the line y = 0")
    t.add_argument("--curvature", type=float, required=True)
    t.add_argument("--point", type=_point, required=True)
    t.add_argument("-d", type=float, required=True)

    c = sub.add_parser("coeff", help="unified law-of-cosines coefficient")
    c.add_argument("--curvature", type=float, required=True)
    c.add_argument("-p", type=float, required=True)
    c.add_argument("-q", type=float, required=True)
    c.add_argument("-r", type=float, required=True)
    return p


def _triple(values):
    return ",".join(fmt(x) for x in values)


def _run(args, out) -> int:
    if args.command == "verify":
        if args.trials < 1 or not args.tol > 0:
            raise _UsageError("--trials must be >= 1 and --tol > 0")
        cfg = GeneratorConfig(curvature=args.curvature, seed=args.seed, trials=args.trials)
        report = run_verification(cfg, args.tol)
        emit_report(report, args.format, args.out if args.out else out)
        if args.out:
            print(f"{'PASS' if report.passed else 'FAIL'} {args.out}", file=out)
        return 0 if report.passed else 1

    if args.command == "solve":
        if args.mode == "sas":
            res = solve_sas(args.curvature, args.b, args.c, args.A, args.tol)
        else:
            res = solve_sss(args.curvature, args.a, args.b, args.c, args.tol)
        t = res.triangle
        for name, value in zip("abcABC", t.sides.as_tuple() + t.angles.as_tuple()):
            print(f"{name}={fmt(value)}", file=out)
        print(f"residual={fmt(res.residual_summary)}", file=out)
        return 0 if res.ok else 1

    if args.command == "embed":
        pt = polar_to_cartesian(_geometry(args.curvature), (args.r, args.theta))
        print(_triple(pt.as_tuple()), file=out)
        return 0

    if args.command == "translate":
        g = _geometry(args.curvature)
        moved = parallel_translate(SurfacePoint(*args.point, g), args.d)
        print(_triple(moved.as_tuple()), file=out)
        return 0

    print(fmt(coefficient(args.curvature, args.p, args.q, args.r)), file=out)
    return 0


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        return _run(args, out)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (TrigError, GenerationExhausted, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
