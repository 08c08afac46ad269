"""Command-line front end: knomial <row|coeff|triangle|verify|bench>."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .identities import PROPERTY_IDS, expand_power_oracle, verify_all
from .triangle import CoefficientQuery, Row, coefficient, row, triangle

PROPERTY_LABELS = {
    "P1": "line width (k-1)*n + 1",
    "P2": "k-term window recurrence",
    "P3": "lines are palindromes",
    "P4": "line starts 1, n",
    "P5": "matches polynomial expansion",
    "P6": "line sum equals k**n",
    "P7": "alternating sum (1 odd / 0 even)",
    "P8": "convolution identity",
    "P9": "sum of squares hits central entry",
    "ORACLE": "expansion oracle sanity",
    "CLOSED_FORM": "closed-form cross-check",
}


@dataclass(frozen=True)
class RenderSpec:
    """Output selection for line-oriented commands; text centers lines."""

    format: str = "text"
    alignment: str = "center"


def _render_line(r: Row, fmt: str) -> str:
    if fmt == "json":
        payload = {"k": r.k, "n": r.n, "coefficients": [str(c) for c in r.coefficients]}
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "csv":
        return ",".join(str(c) for c in r.coefficients)
    return " ".join(str(c) for c in r.coefficients)


def cmd_row(k: int, n: int, render: RenderSpec) -> int:
    print(_render_line(row(k, n), render.format))
    return 0


def cmd_coeff(k: int, n: int, h: int) -> int:
    print(coefficient(CoefficientQuery(k=k, n=n, h=h)))
    return 0


def cmd_triangle(k: int, n_max: int, render: RenderSpec) -> int:
    if render.format != "text":
        for r in triangle(k, n_max):
            print(_render_line(r, render.format))
        return 0
    # Centering needs the widest line, so text mode renders before printing.
    texts = [_render_line(r, "text") for r in triangle(k, n_max)]
    width = max(len(t) for t in texts)
    for t in texts:
        print(t.center(width).rstrip())
    return 0


def cmd_verify(k: int, n_max: int, m_max: int, corrupt: str | None = None) -> int:
    report = verify_all(k, n_max, m_max, corrupt=corrupt)
    print(f"order k={k}, lines 0..{n_max}, convolution pairs up to {m_max}")
    for pid, res in report.results.items():
        label = f"{pid:<12} {PROPERTY_LABELS[pid]:<34}"
        if res.passed:
            print(f"{label} PASS")
        else:
            q = res.counterexample
            print(
                f"{label} FAIL  line {q.n}, h={q.h}: "
                f"expected {res.expected}, got {res.actual}"
            )
    if report.all_passed:
        print("all properties passed")
        return 0
    print("verification failed")
    return 1


def cmd_bench(k: int, n: int, repetitions: int) -> int:
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    print(f"order k={k}, line {n}, {repetitions} repetition(s)")
    print("rep  window_s      oracle_s")
    window_line = oracle_poly = None
    for rep in range(1, repetitions + 1):
        t0 = time.perf_counter()
        window_line = row(k, n)
        t1 = time.perf_counter()
        oracle_poly = expand_power_oracle(k, n)
        t2 = time.perf_counter()
        print(f"{rep:<4} {t1 - t0:<13.6f} {t2 - t1:.6f}")
    if window_line.coefficients != oracle_poly.coefficients:
        print(
            "strategies disagree: window-sum line differs from naive expansion",
            file=sys.stderr,
        )
        return 1
    print(f"strategies agree on all {len(window_line.coefficients)} entries")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knomial",
        description="Exact order-k number triangles: the coefficients of "
        "(1 + x + ... + x**(k-1))**n, their queries, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("row", help="print line n of the order-k triangle")
    p.add_argument("--k", type=int, required=True, help="order of the triangle (>= 2)")
    p.add_argument("--n", type=int, required=True, help="line index (>= 0)")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("coeff", help="print the coefficient of x**h on line n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True, help="any integer; 0 outside the line")

    p = sub.add_parser("triangle", help="print lines 0..n-max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("verify", help="check all triangle identities")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True, help="pair bound for the convolution identity")
    p.add_argument(
        "--corrupt",
        choices=PROPERTY_IDS,
        default=None,
        help="bias the named property's expectation to demonstrate the failure path",
    )

    p = sub.add_parser("bench", help="time window-sum generation against naive expansion")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--repetitions", type=int, default=1)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "row":
            return cmd_row(args.k, args.n, RenderSpec(format=args.format))
        if args.command == "coeff":
            return cmd_coeff(args.k, args.n, args.h)
        if args.command == "triangle":
            return cmd_triangle(args.k, args.n_max, RenderSpec(format=args.format))
        if args.command == "verify":
            return cmd_verify(args.k, args.n_max, args.m_max, args.corrupt)
        return cmd_bench(args.k, args.n, args.repetitions)
    except ValueError as exc:
        print(f"knomial: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
