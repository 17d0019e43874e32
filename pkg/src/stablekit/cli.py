"""Command-line front end: density tables, cross-validation, resolvent grids.

Exit codes: 0 success, 2 usage error (argparse default), 3 numerical
failure (a point missed its tolerance; the failing x is reported).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import math
import re
import sys
from dataclasses import dataclass

from . import engine, kernels, oracle, resolvent
from .engine import EvalMethod, ToleranceError
from .params import RationalIndex, StableParams, farey_series, reduce_rational

_METHODS = {
    "series-small": EvalMethod.SERIES_SMALL_Z,
    "series-large": EvalMethod.SERIES_LARGE_Z,
    "hyper": None,  # resolved against alpha
    "closed": EvalMethod.CLOSED_FORM,
    "oracle": EvalMethod.ORACLE,
    "auto": EvalMethod.AUTO,
}


@dataclass(frozen=True)
class RunConfig:
    alpha: RationalIndex
    beta: float
    c: float
    tau: float
    t: float
    grid: tuple[float, float, int]
    method: str
    tol: float
    out: str | None
    fmt: str
    threads: int

    def __post_init__(self) -> None:
        lo, hi, n = self.grid
        if n < 2 or not lo < hi:
            raise ValueError("grid needs n >= 2 and min < max")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if not self.t > 0.0:
            raise ValueError("t must be positive")


def _parse_alpha(text: str) -> RationalIndex:
    m = re.fullmatch(r"\s*(\d+)\s*/\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(
            f"alpha must be a fraction p/q (e.g. 3/2), got {text!r}; "
            "decimal input is rejected because dispatch needs the exact rational"
        )
    try:
        return reduce_rational(int(m.group(1)), int(m.group(2)))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be min:max:n")
    lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    if n < 2 or not lo < hi:
        raise argparse.ArgumentTypeError("grid needs n >= 2 and min < max")
    return lo, hi, n


def emit_csv(rows, stream) -> None:
    """Write header + one row per grid point, 17 significant digits, LF."""
    stream.write("x,density,abs_error,method\n")
    for x, dens, err, meth in rows:
        stream.write(f"{x:.17g},{dens:.17g},{err:.17g},{meth}\n")


def _density_at(params: StableParams, x: float, t: float, method_name: str, tol: float):
    method = _METHODS[method_name]
    if method_name == "hyper":
        method = (
            EvalMethod.HYPER_SMALL
            if params.alpha.p >= params.alpha.q
            else EvalMethod.HYPER_LARGE
        )
    d = engine.pdf(params, x, t, method=method, tol=tol)
    return x, d.value, d.abs_error_bound, d.method_used.value


def _cmd_pdf(args) -> int:
    cfg = RunConfig(
        alpha=args.alpha, beta=args.beta, c=args.c, tau=args.tau, t=args.t,
        grid=args.grid, method=args.method, tol=args.tol, out=args.out,
        fmt=args.fmt, threads=args.threads,
    )
    params = StableParams(alpha=cfg.alpha, beta=cfg.beta, c=cfg.c, tau=cfg.tau)
    lo, hi, n = cfg.grid
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    rows = []
    try:
        with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            rows = list(
                pool.map(
                    lambda x: _density_at(params, x, cfg.t, cfg.method, cfg.tol), xs
                )
            )
    except (ToleranceError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    _write_rows(rows, cfg.out)
    return 0


def _write_rows(rows, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            emit_csv(rows, fh)
    else:
        emit_csv(rows, sys.stdout)


def _cmd_validate(args) -> int:
    if args.suite != "farey5":
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return 2
    alphas = farey_series(5) + [
        RationalIndex(6, 5),
        RationalIndex(5, 4),
        RationalIndex(4, 3),
        RationalIndex(3, 2),
        RationalIndex(2, 1),
    ]
    failures = 0
    eval_tol = max(min(args.tol, 1e-8) / 10.0, 1e-11)
    print(f"validate suite=farey5 tol={args.tol:g} backend={kernels.BACKEND}")
    for a in alphas:
        params = StableParams(alpha=a, beta=0.0, c=1.0, tau=0.0)
        zs = (2.0, 5.0, 10.0) if a.p <= a.q else (0.3, 1.0, 2.0)
        worst = 0.0
        try:
            for z in zs:
                d_engine = engine.pdf(params, z, 1.0, tol=eval_tol)
                d_oracle = oracle.pdf_quadrature(params, z, 1.0, tol=1e-11)
                worst = max(worst, abs(d_engine.value - d_oracle.value))
        except ToleranceError:
            worst = math.inf
        status = "ok" if worst <= args.tol else "FAIL"
        if status == "FAIL":
            failures += 1
        print(f"  alpha={str(a):>4}  max|engine-oracle|={worst:.3e}  {status}")
    return 3 if failures else 0


def _cmd_resolvent(args) -> int:
    params = StableParams(alpha=args.alpha, beta=args.beta, c=args.c, tau=args.tau)
    spec = resolvent.ResolventSpec(params=params, lam=args.lam)
    lo, hi, n = args.grid
    L = max(abs(lo), abs(hi))
    # size the band so the algebraic truncation guard can pass: the
    # transform decays like 1/(c q^alpha), so the edge must reach
    # (c pi x_ref tol)^(-1/alpha); heavy tails may be unreachable, in
    # which case the guard refuses below with a sizing hint
    q_need = (1.0 / (params.c * math.pi * 0.5 * args.tol)) ** (1.0 / args.alpha.value)
    size = 4
    while (size < n or math.pi * size / (2 * L) < q_need) and size < 2**22:
        size *= 2
    try:
        grid = resolvent.mu_lambda_grid(spec, size, L, method="fft", guard_tol=args.tol)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    rows = []
    for i in range(n):
        x = lo + (hi - lo) * i / (n - 1)
        j = min(int(round((x - grid.x0) / grid.dx)), len(grid.values) - 1)
        rows.append((x, float(grid.values[j]), args.tol, "resolvent-fft"))
    _write_rows(rows, args.out)
    return 0


def _common_flags(sp, with_t: bool = True) -> None:
    sp.add_argument("--alpha", type=_parse_alpha, required=True, help="index p/q")
    sp.add_argument("--beta", type=float, default=0.0)
    sp.add_argument("--c", type=float, default=1.0)
    sp.add_argument("--tau", type=float, default=0.0)
    if with_t:
        sp.add_argument("--t", type=float, default=1.0)
    sp.add_argument("--grid", type=_parse_grid, required=True, help="min:max:n")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--out", default=None)
    sp.add_argument("--format", dest="fmt", choices=["csv"], default="csv")
    sp.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stablekit",
        description="Stable-law densities for rational index via "
        "hypergeometric resummation, with an inversion oracle",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("pdf", help="tabulate f(x, t) over an x-grid")
    _common_flags(sp)
    sp.add_argument(
        "--method",
        choices=sorted(_METHODS),
        default="auto",
        help="evaluation backend; auto records the per-point choice in the CSV",
    )

    sv = sub.add_parser("validate", help="cross-backend validation suites")
    sv.add_argument("--suite", default="farey5")
    sv.add_argument("--tol", type=float, default=1e-6)

    sr = sub.add_parser("resolvent", help="tabulate the generating measure mu_lambda")
    _common_flags(sr, with_t=False)
    sr.add_argument("--lam", type=float, required=True, help="resolvent parameter > 0")
    return ap


def _join_grid_flag(argv):
    """Let `--grid -5:5:11` parse: argparse reads a leading dash as an
    option unless the pair is joined with '='."""
    if argv is None:
        return None
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--grid" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--grid={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None) -> int:
    import sys as _sys

    args = build_parser().parse_args(_join_grid_flag(argv if argv is not None else _sys.argv[1:]))
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    if args.command == "pdf":
        return _cmd_pdf(args)
    if args.command == "validate":
        return _cmd_validate(args)
    if args.command == "resolvent":
        return _cmd_resolvent(args)
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
