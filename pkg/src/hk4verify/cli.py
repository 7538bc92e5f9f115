"""Command-line interface.

Exit codes: 0 on success (all triples contradicted / command completed),
1 on usage or input errors, 2 when a verification check fails.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path

from ._version import __version__
from .exact import format_rational, parse_rational, rational_sqrt_exact
from .pipeline import (
    CandidateFile,
    DEFAULT_PRIMES,
    DEFAULT_T_MAX,
    VerificationError,
    builtin_candidates,
    emit_filter_report,
    emit_report,
    load_candidates,
    prove,
    table1,
)
from .quotient import (
    FixedLocusProfile,
    lefschetz_euler_fixed,
    orbifold_salamon_defect,
    transport_betti,
)
from .riemann_roch import admits_zero_chi, delta, rr_chi_hk
from .topology import betti_from_pair, euler_characteristic, salamon_defect


class CLIError(Exception):
    """Usage or input problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; 2 is reserved for failed
    # verification checks here, so route usage problems through CLIError.
    def __init__(self, *args: object, **kwargs: object) -> None:
        super().__init__(*args, **kwargs)  # type: ignore[arg-type]
        # let values like -8/5 pass as arguments, not option strings
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message: str) -> None:  # type: ignore[override]
        raise CLIError(message)


def _betti_pair(text: str) -> tuple[int, int]:
    tokens = [tok.strip() for tok in text.split(",")]
    if len(tokens) != 2:
        raise CLIError(f"--betti expects 'b2,b3', got {text!r}")
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise CLIError(f"--betti expects integers, got {text!r}") from None


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok.strip()) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise CLIError(f"--primes expects comma-separated integers, got {text!r}") from None


def _candidates(args: argparse.Namespace) -> CandidateFile:
    if getattr(args, "candidates", None) is None:
        return builtin_candidates()
    return load_candidates(args.candidates)


def _warn_invalid(cf: CandidateFile) -> None:
    for row in cf.invalid_rows():
        print(
            f"warning: skipping row {row.line} ({row.b2},{row.b3}): {row.error}",
            file=sys.stderr,
        )


def _cmd_table1(args: argparse.Namespace) -> int:
    cf = load_candidates(args.candidates)
    _warn_invalid(cf)
    sys.stdout.write(table1(cf, args.format))
    return 0


def _cmd_filter(args: argparse.Namespace) -> int:
    cf = load_candidates(args.candidates)
    Path(args.out).write_bytes(emit_filter_report(cf))
    print(f"wrote filter report for {len(cf.rows)} rows to {args.out}")
    return 0


def _cmd_prove(args: argparse.Namespace) -> int:
    cf = _candidates(args)
    _warn_invalid(cf)
    started = time.perf_counter()
    certs = prove(cf, primes=args.primes, t_max=args.t_max)
    elapsed = time.perf_counter() - started
    Path(args.out).write_bytes(
        emit_report(certs, args.format, input_digest=cf.digest)
    )
    mismatch = sum(1 for c in certs if c.branch.value == "LefschetzMismatch")
    print(
        f"contradicted {len(certs)} (candidate, prime, t) triples in "
        f"{elapsed:.3f}s: LefschetzMismatch={mismatch}, "
        f"Table1Exclusion={len(certs) - mismatch}"
    )
    print(f"wrote {args.format} report to {args.out}")
    return 0


def _cmd_rr(args: argparse.Namespace) -> int:
    lam = parse_rational(getattr(args, "lambda"))
    chi = rr_chi_hk(args.c4, lam)
    d = delta(args.c4)
    sqrt = rational_sqrt_exact(d)
    roots = sorted(admits_zero_chi(args.c4))
    print(f"chi = {format_rational(chi)}")
    print(f"delta = {format_rational(d)}")
    print(f"delta_sqrt = {format_rational(sqrt) if sqrt is not None else 'none'}")
    print(
        "lambda_roots = "
        + (", ".join(format_rational(r) for r in roots) if roots else "none")
    )
    return 0


def _cmd_transport(args: argparse.Namespace) -> int:
    b2, b3 = args.betti
    profile = FixedLocusProfile(p=args.p, m=args.m, k=args.k, t=args.t)
    bY = betti_from_pair(b2, b3)
    bW = transport_betti(bY, profile)
    print("bY =", ",".join(str(b) for b in bY.b))
    print("bW =", ",".join(str(b) for b in bW.b))
    print(f"salamon_defect_bW = {salamon_defect(bW)}")
    print(f"orbifold_salamon_defect = {orbifold_salamon_defect(bW, profile)}")
    print(f"euler_bY = {euler_characteristic(bY)}")
    print(f"euler_bW = {euler_characteristic(bW)}")
    print(f"chi_top_fixed_locus = {lefschetz_euler_fixed(profile)}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="hk4verify",
        description=(
            "Exact-arithmetic verification of the contradiction pipeline for "
            "numerically trivial automorphisms of hyperkahler 4-folds."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser(
        "table1", help="render the accepted (c2sq, c4, b2, b3) rows"
    )
    p_table.add_argument("--candidates", required=True, help="candidate file")
    p_table.add_argument(
        "--format", choices=("md", "csv", "json"), default="md"
    )
    p_table.set_defaults(func=_cmd_table1)

    p_filter = sub.add_parser(
        "filter", help="write the full per-candidate filter report (JSON)"
    )
    p_filter.add_argument("--candidates", required=True, help="candidate file")
    p_filter.add_argument("--out", required=True, help="output path")
    p_filter.set_defaults(func=_cmd_filter)

    p_prove = sub.add_parser(
        "prove", help="replay the contradiction for every (candidate, p, t)"
    )
    p_prove.add_argument(
        "--candidates", help="candidate file (built-in fixture when omitted)"
    )
    p_prove.add_argument(
        "--primes",
        type=_parse_primes,
        default=DEFAULT_PRIMES,
        help="comma-separated primes to sweep (default: 2,3,5,7,11,13)",
    )
    p_prove.add_argument(
        "--t-max", type=int, default=DEFAULT_T_MAX,
        help="largest torus count to sweep (default: 20)",
    )
    p_prove.add_argument("--out", required=True, help="report output path")
    p_prove.add_argument(
        "--format", choices=("json", "csv", "md"), default="json"
    )
    p_prove.set_defaults(func=_cmd_prove)

    p_rr = sub.add_parser(
        "rr", help="evaluate chi at a characteristic value, with discriminant"
    )
    p_rr.add_argument("--c4", type=int, required=True)
    p_rr.add_argument("--lambda", required=True, help="rational p/q")
    p_rr.set_defaults(func=_cmd_rr)

    p_tr = sub.add_parser(
        "transport", help="transport a Betti table through a quotient resolution"
    )
    p_tr.add_argument("--p", type=int, required=True, help="prime order")
    p_tr.add_argument("--m", type=int, default=0, help="isolated fixed points")
    p_tr.add_argument("--k", type=int, default=0, help="fixed K3 components")
    p_tr.add_argument("--t", type=int, default=0, help="fixed torus components")
    p_tr.add_argument(
        "--betti", type=_betti_pair, required=True, help="pair b2,b3"
    )
    p_tr.set_defaults(func=_cmd_transport)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
