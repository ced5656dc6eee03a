"""Command-line front end.

Numbers are printed with 12 significant digits (trailing zeros kept) and
integral values without a decimal point, so output is stable across runs.
JSON is a flat object; infinities are written as the string ``"inf"``.

Exit codes: 0 success, 1 failed ``verify`` or numerical failure,
2 invalid input, 3 configuration that provably does not exist.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import IO, Any, Dict, List, Optional, Sequence

from . import bounds, checks, spectra, thresholds
from .errors import DomainError, NotRepresentable, RegularGraphError
from .spectra import GraphParams

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NOT_REPRESENTABLE = 3


def format_number(x: float) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    r = float(f"{x:.12g}")
    if r.is_integer() and abs(r) < 1e15:
        return str(int(r))
    return f"{r:#.12g}"


def _json_value(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (int, float)):
        if isinstance(v, float) and (math.isinf(v) or math.isnan(v)):
            return json.dumps(format_number(v))
        return format_number(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot render {type(v).__name__}")


def render_json(obj: Dict[str, Any]) -> str:
    return "{" + ",".join(f"{json.dumps(k)}:{_json_value(v)}" for k, v in obj.items()) + "}"


def render_table(obj: Dict[str, Any]) -> str:
    rows = []
    for k, v in obj.items():
        if isinstance(v, (list, tuple)):
            text = "  ".join(format_number(x) for x in v)
        elif v is None:
            text = "-"
        elif isinstance(v, str):
            text = v
        else:
            text = format_number(v)
        rows.append((k, text))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {t}" for k, t in rows)


def _indexed_table(header: Sequence[str], columns: Sequence[Sequence[float]]) -> str:
    length = max(len(c) for c in columns)
    lines = ["  ".join(header)]
    for i in range(length):
        cells = [str(i + 1)] + [format_number(c[i]) if i < len(c) else "-" for c in columns]
        lines.append("  ".join(cells))
    return "\n".join(lines)


@dataclass(frozen=True)
class SweepSpec:
    n: int
    lambda_min: float
    lambda_max: float
    steps: int
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        GraphParams(self.n, self.lambda_min)
        if not (self.lambda_min < self.lambda_max and math.isfinite(self.lambda_max)):
            raise DomainError("sweep needs lambda_min < lambda_max < inf")
        if self.steps < 2:
            raise DomainError(f"steps must be at least 2, got {self.steps}")

    def grid(self) -> List[float]:
        span = self.lambda_max - self.lambda_min
        pts = [self.lambda_min + span * i / (self.steps - 1) for i in range(self.steps - 1)]
        return pts + [self.lambda_max]


def write_sweep(spec: SweepSpec, out: IO[str]) -> None:
    n = spec.n
    out.write(",".join(["lambda"] + [f"l{j}" for j in range(1, n + 3)]) + "\n")
    for lam in spec.grid():
        values = spectra.lambda_spectrum(GraphParams(n, lam)).values
        out.write(",".join(format_number(x) for x in (lam,) + values) + "\n")


def _emit(obj: Dict[str, Any], fmt: str, table: Optional[str] = None) -> None:
    if fmt == "json":
        print(render_json(obj))
    else:
        print(table if table is not None else render_table(obj))


def cmd_spectrum(args) -> int:
    spec = spectra.lambda_spectrum(GraphParams(args.n, args.lam))
    obj = {"n": spec.n, "lambda": spec.lam, "values": list(spec.values), "quotient": spec.quotient}
    table = (
        f"n = {spec.n}, lambda = {format_number(spec.lam)}, "
        f"quotient = {format_number(spec.quotient)}\n"
        + _indexed_table(["j", "lambda_{n,j}"], [spec.values])
    )
    _emit(obj, args.format, table)
    return EXIT_OK


def cmd_dual(args) -> int:
    spec = spectra.dual_spectrum(args.n, args.w)
    obj = {
        "n": spec.n,
        "w": spec.w,
        "phi": spectra.phi(args.n, args.w),
        "values": list(spec.values),
        "quotient": spec.quotient,
    }
    table = (
        f"n = {spec.n}, w = {format_number(spec.w)}, phi = {format_number(obj['phi'])}\n"
        + _indexed_table(["j", "w_{n,j}"], [spec.values])
    )
    _emit(obj, args.format, table)
    return EXIT_OK


def cmd_psi(args) -> int:
    prof = spectra.psi_profile(GraphParams(args.n, args.lam))
    obj = {
        "n": prof.n,
        "lambda": args.lam,
        "psi_lower": list(prof.psi_lower),
        "psi_upper": list(prof.psi_upper),
    }
    table = _indexed_table(["j", "psi_lower", "psi_upper"], [prof.psi_lower, prof.psi_upper])
    _emit(obj, args.format, table)
    return EXIT_OK


def cmd_relations(args) -> int:
    rep = spectra.relation_report(GraphParams(args.n, args.lam))
    obj = dict(vars(rep))
    obj = {("lambda" if k == "lam" else k): v for k, v in obj.items()}
    _emit(obj, args.format)
    return EXIT_OK


def cmd_threshold(args) -> int:
    r = thresholds.classify(args.n, args.j)
    obj = {
        "n": r.n,
        "j": r.j,
        "classification": r.classification.value,
        "tilde_lambda": r.tilde_lambda,
        "theta_root": r.theta_root,
    }
    _emit(obj, args.format)
    return EXIT_OK


def cmd_schmidt(args) -> int:
    iv = thresholds.schmidt_interval(args.n, args.T)
    _emit({"n": iv.n, "T": iv.T, "lo": iv.lo, "hi": iv.hi}, args.format)
    return EXIT_OK


def cmd_bounds(args) -> int:
    rep = bounds.bound_report(args.n, args.w)
    obj = {k: v for k, v in vars(rep).items() if args.w is not None or k not in
           ("w", "pointwise_star", "pointwise_w")}
    _emit(obj, args.format)
    return EXIT_OK


def cmd_constants(args) -> int:
    c = bounds.tau_delta()
    _emit({"tau": c.tau, "delta": c.delta, "theta": c.theta}, args.format)
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec(args.n, args.lambda_min, args.lambda_max, args.steps, args.output)
    if spec.output_path in (None, "-"):
        write_sweep(spec, sys.stdout)
    else:
        with open(spec.output_path, "w", newline="\n") as fh:
            write_sweep(spec, fh)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = checks.run_checks(quick=args.quick)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.detail})")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def _real(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if math.isnan(x):
        raise argparse.ArgumentTypeError("nan is not allowed")
    return x


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.exit(EXIT_DOMAIN, f"UsageError: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="regulargraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, fmt=True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=fn)
        if fmt:
            p.add_argument("--format", choices=("table", "json"), default="table")
        return p

    p = add("spectrum", cmd_spectrum, "exponents lambda_{n,1..n+2} of the regular graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_real, required=True, help="1/n <= lambda, or 'inf'")

    p = add("dual", cmd_dual, "linear-form exponents w_{n,1..n+2} for given w_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=_real, required=True)

    p = add("psi", cmd_psi, "limits of the normalized successive minima")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_real, required=True)

    p = add("relations", cmd_relations, "transference inequalities evaluated on one graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_real, required=True)

    p = add("threshold", cmd_threshold, "sign behaviour of lambda_{n,j} - 1/n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    p = add("schmidt-interval", cmd_schmidt, "parameters with Schmidt's property for (n, T)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=int, required=True)

    p = add("bounds", cmd_bounds, "upper bounds for the uniform exponents at dimension n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=_real, default=None, help="evaluate the pointwise bounds at w_n = w")

    add("constants", cmd_constants, "the constants tau, Delta and theta = 2/tau")

    p = add("sweep", cmd_sweep, "CSV of the spectrum over a lambda grid", fmt=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda-min", type=_real, required=True)
    p.add_argument("--lambda-max", type=_real, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--output", default=None, help="file path; stdout when omitted or '-'")

    p = add("verify", cmd_verify, "run the invariant suite", fmt=False)
    p.add_argument("--quick", action="store_true", help="coarser grids")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotRepresentable as exc:
        code = EXIT_NOT_REPRESENTABLE
        err: RegularGraphError = exc
    except DomainError as exc:
        code, err = EXIT_DOMAIN, exc
    except RegularGraphError as exc:
        code, err = EXIT_FAILED, exc
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return EXIT_FAILED
    print(f"{err.token}: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
