"""Command-line interface: ``alpha-ci <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 internal inconsistency (two
formulas disagreeing, which indicates a bug), 3 scan finished with violations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .ahat import ahat, ahat_hilbert, ahat_sign_sum
from .alpha import (
    ABSTRACT_BACKENDS,
    BACKENDS,
    GEOMETRIC_BACKENDS,
    alpha,
    alpha_all,
    fr_polynomial,
)
from .errors import BackendDisagreementError
from .series import hilbert_series
from .sullivan import GROUP_KEYS, ValuationBelowThresholdError, scan
from .topology import (
    CompleteIntersection,
    euler_characteristic,
    invariant_profile,
    is_spin,
)

WORKERS_ENV = "ALPHA_CI_WORKERS"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2
EXIT_VIOLATIONS = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_degrees(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise UsageError(f"{WORKERS_ENV} must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


def _positive_ci(n: int, d: Sequence[int]) -> CompleteIntersection:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if any(di < 1 for di in d):
        raise ValueError(f"degrees must be positive integers, got {','.join(map(str, d))}")
    return CompleteIntersection(n, d)


def _emit(args, payload: dict[str, Any], lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def cmd_alpha(args) -> int:
    n, d = args.n, args.d
    if not args.abstract:
        _positive_ci(n, d)
    backends = args.backends.split(",") if args.backends else None
    if backends:
        unknown = [b for b in backends if b not in BACKENDS]
        if unknown:
            raise ValueError(f"unknown backend(s): {', '.join(unknown)}")
    result = alpha(n, d, abstract=args.abstract, backends=backends)
    two_m = -n - len(d) - 1 + sum(d)
    m = two_m // 2 if two_m % 2 == 0 else None
    payload: dict[str, Any] = {
        "command": "alpha",
        "n": n,
        "d": list(d),
        "abstract": args.abstract,
        "alpha": result.value,
        "backend": result.backend,
        "m": m,
    }
    lines = [f"alpha = {result.value}", f"backends: {result.backend}", f"m = {m}"]
    if args.all_backends:
        every = alpha_all(n, d, abstract=args.abstract, backends=backends)
        payload["backends"] = {name: v.value for name, v in every.items()}
        lines += [f"  {name}: {v.value}" for name, v in every.items()]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ahat(args) -> int:
    _positive_ci(args.n, args.d)
    result = ahat(args.n, args.d)
    m = (-args.n - len(args.d) - 1 + sum(args.d)) // 2
    payload = {
        "command": "ahat",
        "n": args.n,
        "d": list(args.d),
        "ahat": result.value,
        "backend": result.backend,
        "m": m,
    }
    lines = [f"ahat = {result.value}", f"backends: {result.backend}", f"m = {m}"]
    if args.all_backends:
        every = [ahat_sign_sum(args.n, args.d), ahat_hilbert(args.n, args.d)]
        payload["backends"] = {v.backend: v.value for v in every}
        lines += [f"  {v.backend}: {v.value}" for v in every]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_spin(args) -> int:
    X = _positive_ci(args.n, args.d)
    spin, m = is_spin(X)
    payload = {"command": "spin", "n": X.n, "d": list(X.degrees), "spin": spin, "m": m}
    _emit(args, payload, [f"spin, m = {m}" if spin else "not spin"])
    return EXIT_OK


def cmd_profile(args) -> int:
    X = _positive_ci(args.n, args.d)
    p = invariant_profile(X)
    payload = {
        "command": "profile",
        "n": p.n,
        "d": list(X.degrees),
        "key": p.key(),
        "d_tot": p.d_tot,
        "normalized_power_sums": list(p.normalized_power_sums),
        "diffeomorphism_invariant": p.diffeomorphism_invariant,
    }
    lines = [f"profile = {p.key()}"]
    if not p.diffeomorphism_invariant:
        lines.append("note: not a diffeomorphism invariant for n <= 2")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_euler(args) -> int:
    X = _positive_ci(args.n, args.d)
    chi = euler_characteristic(X)
    payload = {"command": "euler", "n": X.n, "d": list(X.degrees), "euler": chi}
    _emit(args, payload, [f"euler = {chi}"])
    return EXIT_OK


def cmd_hilbert(args) -> int:
    _positive_ci(args.n, args.d)
    if args.order < 0:
        raise ValueError(f"order must be >= 0, got {args.order}")
    s = hilbert_series(args.n, args.d, args.order)
    payload = {
        "command": "hilbert",
        "n": args.n,
        "d": list(args.d),
        "order": args.order,
        "coefficients": list(s.coeffs),
    }
    _emit(args, payload, [" ".join(map(str, s.coeffs))])
    return EXIT_OK


def cmd_fr(args) -> int:
    if args.r < 0:
        raise ValueError(f"r must be >= 0, got {args.r}")
    f = fr_polynomial(args.r)
    payload = {"command": "fr", "r": args.r, "exponents": f.exponents(), "text": str(f)}
    _emit(args, payload, [f"f_{args.r} = {f}"])
    return EXIT_OK


def cmd_scan(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    backends = args.backends.split(",") if args.backends else None
    report = scan(
        args.n,
        args.max_k,
        args.max_degree,
        workers=workers,
        group_by=args.group_by,
        backends=backends,
    )
    if args.json == "-":
        sys.stdout.write(report.to_json())
    else:
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        summary = report.summary()
        print(
            f"scan n={args.n} max_k={args.max_k} max_degree={args.max_degree}: "
            + ", ".join(f"{k}={v}" for k, v in summary.items())
        )
        print(f"time: {report.timing['seconds']:.3f}s with {workers} worker(s)")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.to_csv())
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="alpha-ci",
        description="Alpha invariant and A-hat genus of complete intersections.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ci_command(name, func, help_text, *, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True, help="complex dimension")
        p.add_argument(
            "--d",
            type=parse_degrees,
            required=True,
            help="comma-separated degrees, e.g. 3,3 (use --d=-3,2 for negatives)",
        )
        if json_flag:
            p.add_argument("--json", action="store_true", help="print JSON")
        p.set_defaults(func=func)
        return p

    p = ci_command("alpha", cmd_alpha, "alpha invariant in Z/2")
    p.add_argument("--abstract", action="store_true", help="accept any integers n, d_i")
    p.add_argument("--all-backends", action="store_true", help="print every backend")
    p.add_argument(
        "--backends",
        help="comma-separated subset of "
        + ", ".join(dict.fromkeys(GEOMETRIC_BACKENDS + ABSTRACT_BACKENDS)),
    )

    p = ci_command("ahat", cmd_ahat, "A-hat genus for even n")
    p.add_argument("--all-backends", action="store_true", help="print every backend")

    ci_command("spin", cmd_spin, "spin condition and square-root twist m")
    ci_command("profile", cmd_profile, "invariant profile (d_tot, sigma_2j - k)")
    ci_command("euler", cmd_euler, "Euler characteristic")
    p = ci_command("hilbert", cmd_hilbert, "Hilbert series coefficients")
    p.add_argument("--order", type=int, required=True, help="highest exponent kept")

    p = sub.add_parser("fr", help="the GF(2) polynomial f_r(T)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true", help="print JSON")
    p.set_defaults(func=cmd_fr)

    p = sub.add_parser("scan", help="exhaustive profile-group check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"worker processes (default: ${WORKERS_ENV} or CPU count)",
    )
    p.add_argument("--group-by", choices=GROUP_KEYS, default="profile")
    p.add_argument("--backends", help="comma-separated alpha backends to cross-check")
    p.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    p.add_argument("--csv", metavar="PATH", help="write a one-row-per-group CSV summary")
    p.set_defaults(func=cmd_scan)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BackendDisagreementError, ValuationBelowThresholdError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
