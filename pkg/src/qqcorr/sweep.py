"""Time-series sweeps, oracle verification, Monte Carlo validation, transition detection.

This is the library behind the CLI subcommands.  Sweeps lay a uniform grid on
the dimensionless time axis t*Gamma, evolve the chosen family state, evaluate
the requested measures and serialise rows as CSV or JSON.

CSV schema (bit exact): header
``t_gamma,negativity,discord,geometric_x2,classical,mutual,theta_opt,phi_opt``
with unrequested columns omitted, UTF-8, LF line endings, %.17g numerics.
The theta_opt/phi_opt columns are present whenever classical or discord is
requested (they report the optimal measurement direction).  The geometric
column reports 2*D_g, the normalisation used when plotting against the other
measures.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .closed_forms import ClosedFormQuery, closed_geometric_discord, closed_negativity
from .dephasing import (
    COLLECTIVE,
    MODES,
    MULTILOCAL,
    NoiseConfig,
    TrajectoryConfig,
    apply_channel,
    simulate_trajectories,
)
from .errors import InsufficientData, InvalidConfig, IoFailure, ToleranceBreach
from .linalg import random_density
from .measures import (
    classical_correlation,
    geometric_discord,
    geometric_discord_variational_oracle,
    mutual_information,
    negativity,
)
from .states import ENTANGLED, FAMILIES, SEPARABLE, StateParameter, family_state

MEASURE_KEYS = ("negativity", "discord", "geometric", "classical", "mutual")
CSV_COLUMNS = ("t_gamma", "negativity", "discord", "geometric_x2", "classical", "mutual", "theta_opt", "phi_opt")
_MEASURE_TO_COLUMN = {
    "negativity": "negativity",
    "discord": "discord",
    "geometric": "geometric_x2",
    "classical": "classical",
    "mutual": "mutual",
}


@dataclass(frozen=True)
class SweepConfig:
    family: str
    param: float
    mode: str = MULTILOCAL
    gamma_rate: float = 1.0
    t_gamma_max: float = 5.0
    n_points: int = 201
    measures: tuple[str, ...] = MEASURE_KEYS
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidConfig(f"family must be one of {FAMILIES}, got {self.family!r}")
        try:
            StateParameter(self.family, self.param)
        except Exception as exc:
            raise InvalidConfig(str(exc)) from exc
        if self.mode not in MODES:
            raise InvalidConfig(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.gamma_rate > 0:
            raise InvalidConfig(f"gamma_rate must be positive, got {self.gamma_rate}")
        if not self.t_gamma_max > 0:
            raise InvalidConfig(f"t_gamma_max must be positive, got {self.t_gamma_max}")
        if self.n_points < 2:
            raise InvalidConfig(f"n_points must be at least 2, got {self.n_points}")
        measures = tuple(self.measures)
        if not measures:
            raise InvalidConfig("at least one measure must be requested")
        unknown = [m for m in measures if m not in MEASURE_KEYS]
        if unknown:
            raise InvalidConfig(f"unknown measures {unknown}; choose from {MEASURE_KEYS}")
        if self.output_format not in ("csv", "json"):
            raise InvalidConfig(f"output_format must be csv or json, got {self.output_format!r}")
        object.__setattr__(self, "measures", measures)


@dataclass(frozen=True)
class SweepRow:
    t_gamma: float
    negativity: float | None = None
    discord: float | None = None
    geometric_x2: float | None = None
    classical: float | None = None
    mutual: float | None = None
    theta_opt: float | None = None
    phi_opt: float | None = None


def _columns_for(measures: Sequence[str]) -> list[str]:
    cols = ["t_gamma"]
    cols += [_MEASURE_TO_COLUMN[m] for m in MEASURE_KEYS if m in measures]
    if "classical" in measures or "discord" in measures:
        cols += ["theta_opt", "phi_opt"]
    return cols


def sweep_rows(cfg: SweepConfig) -> list[SweepRow]:
    """Evaluate the requested measures on the uniform t*Gamma grid."""
    rho0 = family_state(cfg.family, cfg.param)
    noise = NoiseConfig(gamma_rate=cfg.gamma_rate, mode=cfg.mode)
    t_gammas = np.linspace(0.0, cfg.t_gamma_max, cfg.n_points)
    requested = set(cfg.measures)
    need_optim = bool({"classical", "discord"} & requested)
    rows = []
    for tg in t_gammas:
        state = apply_channel(rho0, float(tg) / cfg.gamma_rate, noise)
        vals: dict[str, float | None] = {}
        if "negativity" in requested:
            vals["negativity"] = negativity(state)
        if "geometric" in requested:
            vals["geometric_x2"] = 2.0 * geometric_discord(state)
        if "mutual" in requested or "discord" in requested:
            mi = mutual_information(state)
            if "mutual" in requested:
                vals["mutual"] = mi
        if need_optim:
            classical, direction = classical_correlation(state)
            if "classical" in requested:
                vals["classical"] = classical
            if "discord" in requested:
                vals["discord"] = mi - classical
            vals["theta_opt"] = direction.theta
            vals["phi_opt"] = direction.phi
        rows.append(SweepRow(t_gamma=float(tg), **vals))
    return rows


def rows_to_csv(rows: Sequence[SweepRow], measures: Sequence[str]) -> str:
    cols = _columns_for(measures)
    lines = [",".join(cols)]
    for row in rows:
        lines.append(",".join(f"{getattr(row, c):.17g}" for c in cols))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[SweepRow]:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise InvalidConfig("empty CSV input")
    cols = lines[0].split(",")
    if cols[0] != "t_gamma" or any(c not in CSV_COLUMNS for c in cols):
        raise InvalidConfig(f"unrecognised CSV header {lines[0]!r}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != len(cols):
            raise InvalidConfig(f"malformed CSV row {ln!r}")
        rows.append(SweepRow(**{c: float(v) for c, v in zip(cols, parts)}))
    return rows


def rows_to_json(cfg: SweepConfig, rows: Sequence[SweepRow]) -> str:
    cols = _columns_for(cfg.measures)
    payload = {
        "config": {**asdict(cfg), "measures": list(cfg.measures)},
        "rows": [{c: getattr(r, c) for c in cols} for r in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_json(text: str) -> tuple[dict, list[SweepRow]]:
    payload = json.loads(text)
    rows = [SweepRow(**r) for r in payload["rows"]]
    return payload["config"], rows


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """Compute the sweep and write it in the configured format."""
    rows = sweep_rows(cfg)
    if cfg.output_format == "csv":
        _write_text(cfg.output_path, rows_to_csv(rows, cfg.measures))
    else:
        _write_text(cfg.output_path, rows_to_json(cfg, rows))
    return rows


@dataclass(frozen=True)
class Transition:
    t_gamma: float
    measure: str
    kind: str  # plateau-start | plateau-end | zero-crossing


def detect_transitions(
    rows: Sequence[SweepRow],
    plateau_threshold: float = 1e-6,
    zero_tol: float = 1e-9,
) -> list[Transition]:
    """Locate plateaus and sudden-death points in sweep columns.

    A plateau is a maximal run of grid cells whose discrete derivative
    magnitude stays below ``plateau_threshold`` per unit t*Gamma; its
    boundaries are reported at the shared grid point (the midpoint of the
    bracketing cells on a uniform grid), or at the data edge when the run
    touches it.  A zero-crossing is the first grid point where a column drops
    below ``zero_tol`` after having been above; it is reported at the midpoint
    of the bracketing grid points.
    """
    if len(rows) < 10:
        raise InsufficientData(f"need at least 10 rows, got {len(rows)}")
    t = np.array([r.t_gamma for r in rows])
    events: list[Transition] = []
    for col in ("negativity", "discord", "geometric_x2", "classical", "mutual"):
        raw = [getattr(r, col) for r in rows]
        if any(v is None for v in raw):
            continue
        y = np.array(raw, dtype=float)
        flat = np.abs(np.diff(y) / np.diff(t)) < plateau_threshold
        i = 0
        while i < len(flat):
            if not flat[i]:
                i += 1
                continue
            j = i
            while j + 1 < len(flat) and flat[j + 1]:
                j += 1
            start_t = t[i] if i > 0 else t[0]
            end_t = t[j + 1] if j < len(flat) - 1 else t[-1]
            events.append(Transition(float(start_t), col, "plateau-start"))
            events.append(Transition(float(end_t), col, "plateau-end"))
            i = j + 1
        above = y >= zero_tol
        for k in range(1, len(y)):
            if above[k - 1] and not above[k]:
                events.append(Transition(float(0.5 * (t[k - 1] + t[k])), col, "zero-crossing"))
                break
    return sorted(events, key=lambda e: (e.t_gamma, e.measure, e.kind))


@dataclass(frozen=True)
class VerifyEntry:
    family: str
    mode: str
    measure: str
    max_abs_dev: float
    tolerance: float
    worst_param: float
    worst_t_gamma: float
    n_points: int

    @property
    def passed(self) -> bool:
        return self.max_abs_dev < self.tolerance


@dataclass(frozen=True)
class VerifyReport:
    entries: tuple[VerifyEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "entries": [asdict(e) for e in self.entries]}


def _family_param_grid(family: str, n: int) -> np.ndarray:
    hi = 0.5 if family == ENTANGLED else 1.0 / 3.0
    return np.linspace(0.0, hi, n)


def run_verify(
    param_points: int = 51,
    time_points: int = 41,
    t_gamma_max: float = 4.0,
    tol_closed: float = 1e-8,
    n_random_states: int = 200,
    tol_variational: float = 1e-5,
    family_oracle_points: int = 4,
    seed: int = 7,
    raise_on_breach: bool = True,
) -> VerifyReport:
    """Closed-form vs numeric and variational-oracle equivalence suites.

    Reports the maximum absolute deviation per (family, mode, measure) over a
    dense (parameter, time) grid, checks the variational geometric-discord
    oracle on seeded random states plus a coarse family grid, and raises
    :class:`ToleranceBreach` on any failure.
    """
    entries: list[VerifyEntry] = []
    t_grid = np.linspace(0.0, t_gamma_max, time_points)
    for family in (ENTANGLED, SEPARABLE):
        params = _family_param_grid(family, param_points)
        for mode in (MULTILOCAL, COLLECTIVE):
            noise = NoiseConfig(gamma_rate=1.0, mode=mode)
            checks = ["geometric"] + (["negativity"] if family == ENTANGLED else [])
            worst = {m: (0.0, 0.0, 0.0) for m in checks}
            for p in params:
                rho0 = family_state(family, float(p))
                for tg in t_grid:
                    state = apply_channel(rho0, float(tg), noise)
                    query = ClosedFormQuery(family, mode, float(p), math.exp(-float(tg)))
                    dev_g = abs(geometric_discord(state) - closed_geometric_discord(query))
                    if dev_g > worst["geometric"][0]:
                        worst["geometric"] = (dev_g, float(p), float(tg))
                    if family == ENTANGLED:
                        dev_n = abs(negativity(state) - closed_negativity(query))
                        if dev_n > worst["negativity"][0]:
                            worst["negativity"] = (dev_n, float(p), float(tg))
            n_pts = param_points * time_points
            for m in checks:
                dev, wp, wt = worst[m]
                entries.append(VerifyEntry(family, mode, m, dev, tol_closed, wp, wt, n_pts))

    rng = np.random.default_rng(seed)
    worst_var, worst_idx = 0.0, 0.0
    for i in range(n_random_states):
        state = random_density(rng, dim=6)
        dev = abs(geometric_discord(state) - geometric_discord_variational_oracle(state))
        if dev > worst_var:
            worst_var, worst_idx = dev, float(i)
    entries.append(
        VerifyEntry("random", "any", "geometric-variational", worst_var, tol_variational, worst_idx, 0.0, n_random_states)
    )

    for family in (ENTANGLED, SEPARABLE):
        params = _family_param_grid(family, family_oracle_points + 2)[1:-1]
        coarse_t = np.linspace(0.0, t_gamma_max, family_oracle_points)
        for mode in (MULTILOCAL, COLLECTIVE):
            noise = NoiseConfig(gamma_rate=1.0, mode=mode)
            dev_max, wp, wt = 0.0, 0.0, 0.0
            for p in params:
                rho0 = family_state(family, float(p))
                for tg in coarse_t:
                    state = apply_channel(rho0, float(tg), noise)
                    dev = abs(geometric_discord(state) - geometric_discord_variational_oracle(state))
                    if dev > dev_max:
                        dev_max, wp, wt = dev, float(p), float(tg)
            entries.append(
                VerifyEntry(family, mode, "geometric-variational", dev_max, tol_variational, wp, wt, len(params) * len(coarse_t))
            )

    report = VerifyReport(tuple(entries))
    if raise_on_breach and not report.passed:
        worst = max((e for e in report.entries if not e.passed), key=lambda e: e.max_abs_dev / e.tolerance)
        raise ToleranceBreach(
            f"{worst.measure} deviation {worst.max_abs_dev:.3e} exceeds {worst.tolerance:.1e} "
            f"at family={worst.family} mode={worst.mode} param={worst.worst_param:.6g} "
            f"t_gamma={worst.worst_t_gamma:.6g}",
            report,
        )
    return report


@dataclass(frozen=True)
class MonteCarloPoint:
    t_gamma: float
    fraction_within_4sigma: float
    worst_z: float
    n_entries: int

    @property
    def passed(self) -> bool:
        return self.fraction_within_4sigma >= 0.95


@dataclass(frozen=True)
class MonteCarloReport:
    family: str
    param: float
    mode: str
    n_trajectories: int
    seed: int
    points: tuple[MonteCarloPoint, ...]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "family": self.family,
            "param": self.param,
            "mode": self.mode,
            "n_trajectories": self.n_trajectories,
            "seed": self.seed,
            "points": [asdict(p) for p in self.points],
        }


def montecarlo_z_scores(analytic, estimate) -> np.ndarray:
    """Per-entry z scores |mean - analytic| / SE; exact entries score 0."""
    diff = np.abs(np.asarray(estimate.state) - np.asarray(analytic))
    se = estimate.std_error
    z = np.zeros_like(diff, dtype=float)
    noisy = se > 0
    z[noisy] = diff[noisy] / se[noisy]
    z[~noisy & (diff > 1e-12)] = np.inf
    return z


def run_montecarlo(
    cfg: SweepConfig,
    tcfg: TrajectoryConfig,
    t_gammas: Sequence[float] | None = None,
) -> MonteCarloReport:
    """Trajectory-vs-analytic comparison at selected grid times.

    Defaults to t*Gamma at one quarter, one half and the full sweep horizon.
    A point passes when at least 95% of entry moduli fall within 4 standard
    errors of the analytic channel.
    """
    if t_gammas is None:
        t_gammas = [cfg.t_gamma_max / 4.0, cfg.t_gamma_max / 2.0, cfg.t_gamma_max]
    rho0 = family_state(cfg.family, cfg.param)
    noise = NoiseConfig(gamma_rate=cfg.gamma_rate, mode=cfg.mode)
    points = []
    for tg in t_gammas:
        t = float(tg) / cfg.gamma_rate
        analytic = apply_channel(rho0, t, noise)
        estimate = simulate_trajectories(rho0, t, noise, tcfg)
        z = montecarlo_z_scores(analytic, estimate)
        points.append(
            MonteCarloPoint(
                t_gamma=float(tg),
                fraction_within_4sigma=float(np.mean(z <= 4.0)),
                worst_z=float(np.max(z)),
                n_entries=z.size,
            )
        )
    return MonteCarloReport(cfg.family, cfg.param, cfg.mode, tcfg.n_trajectories, tcfg.seed, tuple(points))
