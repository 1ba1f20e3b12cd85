"""Command-line entry point: ``deformed-discord {sweep,point,verify,plot-script}``.

Exit codes: 0 success, 1 verification or internal failure, 2 invalid
arguments or a parameter outside the physical domain.
"""
from __future__ import annotations

import argparse
import math
import sys
import time
from fractions import Fraction

from . import kernels
from .correlations import (F_of_z, concurrence_closed, concurrence_paper, discord_analytic,
                           entropy_rho_AB, entropy_rho_B, eof, q_of_p, z_pm)
from .deformation import Deformation, DeformationSpec
from .errors import DeformedDiscordError, DomainError
from .oracle import discord_numeric, mutual_information
from .plotscript import MalformedCSV, plot_script
from .states import bell_coeffs, cat_basis, pure_concurrence, werner_from_basis
from .sweep import DEFAULT_ALPHAS, DEFAULT_KAPPAS, DEFAULT_P_STEPS, SweepConfig, fmt, render
from .verify import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _kappa(text: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid kappa {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number list {text!r}")


def _kappa_list(text: str) -> list[float]:
    return [_kappa(x) for x in text.split(",") if x.strip()]


def _deformation(text: str) -> Deformation:
    try:
        return Deformation(text)
    except ValueError:
        raise argparse.ArgumentTypeError("deformation must be 'bg' or 'identity'")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="deformed-discord",
        description="Discord, concurrence and EoF of deformed cat-state Werner mixtures.")
    sub = ap.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="tabulate correlations over an (alpha, kappa, p) grid")
    sw.add_argument("--alphas", type=_float_list, default=list(DEFAULT_ALPHAS))
    sw.add_argument("--kappas", type=_kappa_list, default=list(DEFAULT_KAPPAS),
                    help="comma-separated, fractions allowed (e.g. 1/2,1,3/2)")
    sw.add_argument("--p-steps", type=int, default=DEFAULT_P_STEPS)
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--compare-oracle", action="store_true",
                    help="add the numerically minimized discord and its deviation")
    sw.add_argument("--deformation", type=_deformation, default=Deformation.BARUT_GIRARDELLO)
    sw.add_argument("--out", default=None, help="output file (default: stdout)")

    pt = sub.add_parser("point", help="evaluate one point and print all intermediates")
    pt.add_argument("--alpha", type=float, required=True)
    pt.add_argument("--kappa", type=_kappa, default=0.5)
    pt.add_argument("--p", type=float, required=True)
    pt.add_argument("--compare-oracle", action="store_true")
    pt.add_argument("--deformation", type=_deformation, default=Deformation.BARUT_GIRARDELLO)

    vf = sub.add_parser("verify", help="check closed forms against the numerical oracle")
    vf.add_argument("--fast", action="store_true", help="21 p-steps instead of 101")
    vf.add_argument("--alphas", type=_float_list, default=list(DEFAULT_ALPHAS))
    vf.add_argument("--kappas", type=_kappa_list, default=list(DEFAULT_KAPPAS))
    vf.add_argument("--p-steps", type=int, default=None)
    vf.add_argument("--inject-fault", choices=("natural-log",), default=None,
                    help=argparse.SUPPRESS)

    ps = sub.add_parser("plot-script", help="write a matplotlib script for a sweep CSV")
    ps.add_argument("--in", dest="csv_in", required=True)
    ps.add_argument("--out", required=True)
    return ap


def cmd_sweep(args) -> int:
    try:
        config = SweepConfig(alphas=args.alphas, kappas=args.kappas, p_steps=args.p_steps,
                             deformation=args.deformation, output_format=args.format,
                             compare_oracle=args.compare_oracle, output_path=args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, n_err = render(config)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if n_err:
        print(f"warning: {n_err} point(s) failed; see error rows", file=sys.stderr)
    return EXIT_OK


def _spec(deformation: Deformation, kappa: float) -> DeformationSpec:
    if deformation is Deformation.IDENTITY:
        return DeformationSpec.identity()
    return DeformationSpec.barut_girardello(kappa)


def cmd_point(args) -> int:
    if not 0.0 <= args.p <= 1.0:
        print(f"error: p = {args.p} outside [0, 1]", file=sys.stderr)
        return EXIT_USAGE
    try:
        spec = _spec(args.deformation, args.kappa)
        basis = cat_basis(spec, args.alpha)
    except (DomainError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    p = args.p
    q = q_of_p(p)
    bc = bell_coeffs(basis)
    c_psi = pure_concurrence(basis)
    c = concurrence_closed(p, c_psi)
    zp, zm = z_pm(p, basis)
    rows = [
        ("deformation", str(spec)),
        ("alpha", args.alpha),
        ("p", p),
        ("q", q),
        ("s", basis.s),
        ("N_plus", basis.N_plus),
        ("N_minus", basis.N_minus),
        ("n_plus", basis.n_plus),
        ("a", bc.a),
        ("b", bc.b),
        ("C_psi", c_psi),
        ("z_plus", zp),
        ("z_minus", zm),
        ("F(z_plus)", F_of_z(zp, q)),
        ("F(z_minus)", F_of_z(zm, q)),
        ("S(rho_B)", entropy_rho_B(p, c_psi)),
        ("S(rho_AB)", entropy_rho_AB(p)),
        ("C", c),
    ]
    try:
        rows.append(("C_printed_formula", concurrence_paper(q, c_psi)))
    except DomainError as exc:
        rows.append(("C_printed_formula", f"undefined ({exc})"))
    rows += [("EoF", eof(c)), ("DC", discord_analytic(p, basis))]
    if args.compare_oracle:
        rho = werner_from_basis(p, basis)
        res = discord_numeric(rho)
        rows += [
            ("DC_numeric", res.value),
            ("DC_absdiff", abs(res.value - discord_analytic(p, basis))),
            ("argmin_theta", res.argmin.theta),
            ("argmin_phi", res.argmin.phi),
            ("oracle_evaluations", res.iterations),
            ("I_mutual", mutual_information(rho)),
        ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        shown = fmt(v) if isinstance(v, float) else str(v)
        print(f"{k:<{width}} = {shown}")
    return EXIT_OK


def cmd_verify(args) -> int:
    steps = args.p_steps or (21 if args.fast else DEFAULT_P_STEPS)
    log_base = math.e if args.inject_fault == "natural-log" else 2.0
    t0 = time.perf_counter()
    try:
        report = run_verification(args.alphas, args.kappas, steps, log_base=log_base)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    n = len(args.alphas) * len(args.kappas) * steps
    print(f"grid: {n} points ({len(args.kappas)} kappa x {len(args.alphas)} alpha x {steps} p), "
          f"kernel backend: {kernels.BACKEND}")
    print(report.text())
    print(f"elapsed: {time.perf_counter() - t0:.2f} s")
    bad = report.first_failure
    if bad is not None:
        sys.stdout.flush()
        print(f"FAILED: {bad.name}", file=sys.stderr)
        return EXIT_FAIL
    print("all checks passed")
    return EXIT_OK


def cmd_plot_script(args) -> int:
    try:
        text = plot_script(args.csv_in)
    except MalformedCSV as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with open(args.out, "w") as fh:
        fh.write(text)
    return EXIT_OK


COMMANDS = {
    "sweep": cmd_sweep,
    "point": cmd_point,
    "verify": cmd_verify,
    "plot-script": cmd_plot_script,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DeformedDiscordError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
