#!/usr/bin/env python3
"""Run the standard dynamics sweeps for both state families and both noise modes.

Writes one CSV per configuration into the output directory and prints the
detected transitions (plateau boundaries, sudden-death points) for each run.

Usage: python scripts/run_family_sweeps.py [outdir]
"""

import pathlib
import sys

from qqcorr import SweepConfig, detect_transitions, run_sweep

# Representative parameter choices covering the qualitatively distinct regimes:
# monotone decay, sudden transition, entanglement sudden death, amplification.
CONFIGS = [
    ("entangled", 0.5, "multilocal"),
    ("entangled", 0.25, "multilocal"),
    ("entangled", 0.2, "multilocal"),
    ("separable", 0.25, "multilocal"),
    ("entangled", 0.2, "collective"),
    ("entangled", 0.4, "collective"),
    ("entangled", 0.45, "collective"),
    ("separable", 0.23, "collective"),
]


def main() -> int:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "out")
    outdir.mkdir(parents=True, exist_ok=True)
    for family, param, mode in CONFIGS:
        path = outdir / f"{family}_{param:g}_{mode}.csv"
        cfg = SweepConfig(
            family=family,
            param=param,
            mode=mode,
            t_gamma_max=3.0,
            n_points=301,
            measures=("negativity", "discord", "geometric", "classical", "mutual"),
            output_path=str(path),
        )
        rows = run_sweep(cfg)
        print(f"{path}  ({len(rows)} rows)")
        for event in detect_transitions(rows, plateau_threshold=1e-4):
            print(f"  t_gamma={event.t_gamma:.4f}  {event.measure:13s} {event.kind}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
