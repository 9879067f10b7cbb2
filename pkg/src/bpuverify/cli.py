"""Command-line verification runner.

Runs the registered suites and emits deterministic text or JSON reports:
one line per check in text mode, the documented object schema in JSON mode.
Exit status: 0 when no check failed (findings do not fail a run), 1 on any
failing check, 2 on usage or internal errors.

The environment variable BPUVERIFY_THREADS caps the worker count used by
the degree sweeps of the kernel-certification suite.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import dga, ssverify, symfun
from .mod2alg import suites as mod2suites
from .report import VerificationReport, serialize


def _threads() -> int:
    raw = os.environ.get("BPUVERIFY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_k4(opts) -> VerificationReport:
    return symfun.certify_k4_presentation(opts.max_degree or 16, threads=_threads())


def _run_coker(opts) -> VerificationReport:
    """Orders in the cokernel of the divergence: every monomial in the
    degree-4 and degree-6 generators (1 included) has order exactly 4."""
    report = VerificationReport("coker")
    ctx = symfun.SymmetricContext(4)
    al = symfun.alpha_generators(ctx)
    max_degree = opts.max_degree or 16
    for d in range(0, max_degree + 1):
        for c in range(d // 4 + 1):
            rest = d - 4 * c
            if rest % 6 or rest < 0:
                continue
            e = rest // 6
            f = al.a4 ** c * al.a6 ** e
            order = symfun.coker_order(ctx, f, degree=d)
            label = f"a4^{c}*a6^{e}" if (c or e) else "1"
            report.add(
                f"order/{label}",
                order == 4,
                f"order of {label} in the degree-{d} cokernel is {order}",
            )
    sigma1_order = symfun.coker_order(ctx, ctx.sigma(1))
    report.add(
        "order/s1",
        sigma1_order == 1,
        f"s1 lies in the image (order {sigma1_order}): gcd(8,3) = 1",
    )
    return report


def _run_vistoli(opts) -> VerificationReport:
    return symfun.vistoli_delta_check(opts.prime or 3)


def _run_steenrod(opts) -> VerificationReport:
    report = mod2suites.verify_steenrod_theorem()
    report.extend(mod2suites.verify_restriction_square_identities(), prefix="restriction/")
    return report


def _run_bpu2(opts) -> VerificationReport:
    return mod2suites.verify_bpu2_images(3)


def _run_reduction_image(opts) -> VerificationReport:
    return mod2suites.verify_reduction_image_claims(opts.max_degree or 24)


def _run_dga(opts) -> VerificationReport:
    max_degree = opts.max_degree or 40
    return dga.dga_suite(max_degree, kernel_degree=min(30, max_degree))


def _run_spectral(opts) -> VerificationReport:
    return ssverify.spectral_suite()


SUITES = (
    ("k4", _run_k4),
    ("coker", _run_coker),
    ("vistoli", _run_vistoli),
    ("steenrod", _run_steenrod),
    ("bpu2", _run_bpu2),
    ("section10", _run_reduction_image),
    ("dga", _run_dga),
    ("spectral", _run_spectral),
)


def run_suite(name: str, opts) -> VerificationReport:
    for sname, fn in SUITES:
        if sname == name:
            start = time.perf_counter()
            report = fn(opts)
            report.suite = sname
            report.elapsed_ms = int((time.perf_counter() - start) * 1000)
            return report
    raise KeyError(name)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bpuverify",
        description="Exact-arithmetic verification suites for the cohomology "
        "computations around BPU(4).",
    )
    parser.add_argument(
        "suite",
        choices=[name for name, _ in SUITES] + ["all"],
        help="verification suite to run",
    )
    parser.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="degree bound for the graded sweeps (defaults: k4/coker 16, "
        "section10 24, dga 40)",
    )
    parser.add_argument(
        "--prime", type=int, default=3, help="odd prime for the vistoli suite"
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    parser.add_argument("--out", default=None, help="also write the report to FILE")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if opts.suite == "all":
            reports = [run_suite(name, opts) for name, _ in SUITES]
        else:
            reports = [run_suite(opts.suite, opts)]
        rendered = serialize(reports if opts.suite == "all" else reports[0], opts.format)
    except Exception as exc:  # internal error contract
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rendered)
    if opts.out:
        with open(opts.out, "w") as fh:
            fh.write(rendered)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
