"""Command-line front-end.

Subcommands: ``sweep`` (time series of correlation measures), ``verify``
(closed-form and variational oracle equivalence), ``montecarlo`` (trajectory
ensemble vs analytic channel), ``transitions`` (reads a sweep CSV and flags
plateaus and sudden deaths).

Exit codes: 0 success, 2 configuration error, 3 tolerance breach, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .dephasing import TrajectoryConfig
from .sweep import (
    MEASURE_KEYS,
    SweepConfig,
    detect_transitions,
    parse_csv,
    run_montecarlo,
    run_sweep,
    run_verify,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_TOLERANCE = 3
EXIT_IO = 4

_CONFIG_ERRORS = (
    errors.InvalidConfig,
    errors.ParameterOutOfRange,
    errors.InvalidTrajectoryConfig,
    errors.InvalidDirection,
    errors.UnsupportedFamily,
    errors.NegativeTime,
    errors.InsufficientData,
    errors.InvalidDensityMatrix,
    errors.DimensionMismatch,
)


def _add_state_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("entangled", "separable"), required=True)
    p.add_argument("--param", type=float, required=True, help="family parameter (p or r)")
    p.add_argument("--mode", choices=("multilocal", "collective", "combined"), default="multilocal")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qqcorr",
        description="Correlation dynamics of qubit-qutrit states under classical dephasing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate measures on a uniform t*Gamma grid")
    _add_state_args(p_sweep)
    p_sweep.add_argument("--gamma", type=float, default=1.0, help="damping rate Gamma")
    p_sweep.add_argument("--tmax", type=float, default=5.0, help="t*Gamma horizon")
    p_sweep.add_argument("--points", type=int, default=201)
    p_sweep.add_argument("--measures", default=",".join(MEASURE_KEYS), help="comma list")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default="-", help="output path, - for stdout")

    p_verify = sub.add_parser("verify", help="closed-form and variational oracle equivalence")
    p_verify.add_argument("--param-points", type=int, default=51)
    p_verify.add_argument("--time-points", type=int, default=41)
    p_verify.add_argument("--tmax", type=float, default=4.0)
    p_verify.add_argument("--random-states", type=int, default=200)
    p_verify.add_argument("--tol-closed", type=float, default=1e-8)
    p_verify.add_argument("--tol-variational", type=float, default=1e-5)
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--out", default=None, help="optional JSON report path")

    p_mc = sub.add_parser("montecarlo", help="trajectory ensemble vs analytic channel")
    _add_state_args(p_mc)
    p_mc.add_argument("--gamma", type=float, default=1.0)
    p_mc.add_argument("--tmax", type=float, default=2.0, help="largest t*Gamma checkpoint")
    p_mc.add_argument("--trajectories", type=int, default=10_000)
    p_mc.add_argument("--dt", type=float, default=None, help="step size (default t/1000)")
    p_mc.add_argument("--mu", type=float, default=1.0, help="gyromagnetic ratio")
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--out", default=None, help="optional JSON report path")

    p_tr = sub.add_parser("transitions", help="detect plateaus and sudden deaths in a sweep CSV")
    p_tr.add_argument("csv_path")
    p_tr.add_argument("--threshold", type=float, default=1e-6, help="plateau slope threshold per unit t*Gamma")
    p_tr.add_argument("--zero-tol", type=float, default=1e-9)
    p_tr.add_argument("--out", default=None, help="optional JSON report path")

    return parser


def _write_report(path: str | None, payload: dict) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if path is None:
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise errors.IoFailure(f"cannot write {path}: {exc}") from exc


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(
        family=args.family,
        param=args.param,
        mode=args.mode,
        gamma_rate=args.gamma,
        t_gamma_max=args.tmax,
        n_points=args.points,
        measures=tuple(m.strip() for m in args.measures.split(",") if m.strip()),
        output_format=args.format,
        output_path=args.out,
    )
    run_sweep(cfg)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verify(
        param_points=args.param_points,
        time_points=args.time_points,
        t_gamma_max=args.tmax,
        n_random_states=args.random_states,
        tol_closed=args.tol_closed,
        tol_variational=args.tol_variational,
        seed=args.seed,
        raise_on_breach=False,
    )
    for e in report.entries:
        status = "ok" if e.passed else "BREACH"
        print(
            f"{status:6s} {e.family:9s} {e.mode:10s} {e.measure:22s} "
            f"max|dev|={e.max_abs_dev:.3e} tol={e.tolerance:.1e} "
            f"worst at param={e.worst_param:.6g} t_gamma={e.worst_t_gamma:.6g}"
        )
    _write_report(args.out, report.to_dict())
    if not report.passed:
        print("verification FAILED", file=sys.stderr)
        return EXIT_TOLERANCE
    print("verification passed")
    return EXIT_OK


def _cmd_montecarlo(args) -> int:
    cfg = SweepConfig(
        family=args.family,
        param=args.param,
        mode=args.mode,
        gamma_rate=args.gamma,
        t_gamma_max=args.tmax,
        measures=("negativity",),
    )
    tcfg = TrajectoryConfig(n_trajectories=args.trajectories, dt=args.dt, mu=args.mu, seed=args.seed)
    report = run_montecarlo(cfg, tcfg)
    for p in report.points:
        status = "ok" if p.passed else "BREACH"
        print(
            f"{status:6s} t_gamma={p.t_gamma:.6g} within4sigma={p.fraction_within_4sigma:.3f} "
            f"worst_z={p.worst_z:.3f} entries={p.n_entries}"
        )
    _write_report(args.out, report.to_dict())
    if not report.passed:
        print("Monte Carlo validation FAILED", file=sys.stderr)
        return EXIT_TOLERANCE
    print("Monte Carlo validation passed")
    return EXIT_OK


def _cmd_transitions(args) -> int:
    try:
        with open(args.csv_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise errors.IoFailure(f"cannot read {args.csv_path}: {exc}") from exc
    rows = parse_csv(text)
    events = detect_transitions(rows, plateau_threshold=args.threshold, zero_tol=args.zero_tol)
    for ev in events:
        print(f"t_gamma={ev.t_gamma:.10g} measure={ev.measure} kind={ev.kind}")
    _write_report(
        args.out,
        {"events": [{"t_gamma": e.t_gamma, "measure": e.measure, "kind": e.kind} for e in events]},
    )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "sweep": _cmd_sweep,
        "verify": _cmd_verify,
        "montecarlo": _cmd_montecarlo,
        "transitions": _cmd_transitions,
    }
    try:
        return handlers[args.command](args)
    except _CONFIG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except errors.ToleranceBreach as exc:
        print(f"tolerance breach: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except errors.IoFailure as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
