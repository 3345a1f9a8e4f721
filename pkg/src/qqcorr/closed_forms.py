"""Closed-form negativity and geometric discord for the two families.

Direct scalar functions of (parameter, gamma_tilde) used as oracles for the
numeric pipeline, plus root isolation for their critical times: sudden-death
zeros of the negativity and branch switches of the max terms, which are the
kinks of the geometric discord.

Every max term is evaluated literally with all candidates, never pre-selected
by parameter region; the region boundaries are exactly the critical times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dephasing import COLLECTIVE, MULTILOCAL
from .errors import UnsupportedFamily
from .states import ENTANGLED, SEPARABLE, StateParameter

_CLOSED_FORM_MODES = (MULTILOCAL, COLLECTIVE)
_ESD_EPS = 1e-13
_BISECT_TOL = 1e-10


@dataclass(frozen=True)
class ClosedFormQuery:
    """Family, noise mode, family parameter and gamma_tilde in (0, 1]."""

    family: str
    mode: str
    param: float
    gamma_tilde: float

    def __post_init__(self):
        StateParameter(self.family, self.param)  # range check
        if self.mode not in _CLOSED_FORM_MODES:
            raise ValueError(f"mode must be one of {_CLOSED_FORM_MODES}, got {self.mode!r}")
        if not 0.0 < self.gamma_tilde <= 1.0:
            raise ValueError(f"gamma_tilde must lie in (0, 1], got {self.gamma_tilde}")


def _neg_multilocal(p: float, g: float) -> float:
    return 0.5 * (abs(p * (1 + 2 * g) - g) + abs(p * (2 + g) - 1) - (p - 1) * (g - 1))


def _neg_collective(p: float, g: float) -> float:
    g2 = g * g
    return 0.5 * (abs(3 * p - 1) + abs(p * (2 + g2) - 1) - p * (1 - g2))


def closed_negativity(q: ClosedFormQuery) -> float:
    """Negativity of the entangled family; the separable family has none."""
    if q.family != ENTANGLED:
        raise UnsupportedFamily("closed-form negativity exists only for the entangled family")
    if q.mode == MULTILOCAL:
        return _neg_multilocal(q.param, q.gamma_tilde)
    return _neg_collective(q.param, q.gamma_tilde)


def _gd_terms(family: str, mode: str, a: float, g: float) -> tuple[float, tuple[float, ...]]:
    """Prefix and max-candidates of the geometric-discord expression."""
    g2 = g * g
    if mode == MULTILOCAL:
        if family == ENTANGLED:
            prefix = 1 + 2 * g2 - 2 * a * (3 + 4 * g2) + a * a * (9 + 10 * g2)
            # The middle candidate never beats the first for g <= 1 but is
            # part of the published expression; kept literally.
            cands = ((1 - 3 * a) ** 2, (1 - 3 * a) ** 2 * g2, (1 - a) ** 2 * g2)
        else:
            prefix = 1 - 6 * a + a * a * (9 + 4 * g2)
            cands = ((1 - 3 * a) ** 2, 4 * a * a * g2)
    else:
        g4 = g2 * g2
        if family == ENTANGLED:
            prefix = 3 - 14 * a + a * a * (17 + 2 * g4)
            cands = ((1 - 3 * a) ** 2, (a * (g2 - 2) + 1) ** 2, (a * (g2 + 2) - 1) ** 2)
        else:
            prefix = 1 - 6 * a + a * a * (11 + 2 * g4)
            cands = ((1 - 3 * a) ** 2, a * a * (1 - g2) ** 2, a * a * (1 + g2) ** 2)
    return prefix, cands


def closed_geometric_discord(q: ClosedFormQuery) -> float:
    """Geometric discord of either family under either noise mode."""
    prefix, cands = _gd_terms(q.family, q.mode, q.param, q.gamma_tilde)
    return max(0.25 * (prefix - max(cands)), 0.0)


@dataclass(frozen=True)
class CriticalTime:
    """One dynamical event on the dimensionless time axis t*Gamma."""

    t_gamma: float
    t: float
    description: str


def _bisect_sign_change(fn, lo: float, hi: float) -> float:
    """Root of fn between lo and hi with fn(lo) >= 0 > fn(hi), to 1e-10 in gamma_tilde."""
    f_lo = fn(lo)
    if f_lo == 0.0:
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if abs(hi - lo) < _BISECT_TOL:
            return mid
        if fn(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _bisect_boundary(indicator, lo: float, hi: float) -> float:
    """Boundary between indicator(lo) and indicator(hi) != indicator(lo)."""
    side = indicator(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if abs(hi - lo) < _BISECT_TOL:
            return mid
        if indicator(mid) == side:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_grid() -> np.ndarray:
    lin = np.linspace(1e-9, 1.0, 2049)
    geo = np.geomspace(1e-9, 1.0, 2049)
    return np.unique(np.concatenate([lin, geo]))


def find_critical_times(
    family: str, mode: str, param: float, gamma_rate: float = 1.0
) -> list[CriticalTime]:
    """Sudden-death times of the negativity and kinks of the geometric discord.

    Each event is isolated by bisection to 1e-10 in gamma_tilde and converted
    through t*Gamma = -ln(gamma_tilde).  Events at t = 0 or beyond the scan
    horizon (t*Gamma ~ 20.7) are not reported; returns an empty list when
    nothing happens in (0, inf).
    """
    StateParameter(family, param)
    if mode not in _CLOSED_FORM_MODES:
        raise ValueError(f"mode must be one of {_CLOSED_FORM_MODES}, got {mode!r}")
    grid = _scan_grid()
    events: list[tuple[float, str]] = []

    if family == ENTANGLED:
        neg = _neg_multilocal if mode == MULTILOCAL else _neg_collective

        def positive(g: float) -> bool:
            return neg(param, g) > _ESD_EPS

        flags = np.array([positive(g) for g in grid])
        for i in np.flatnonzero(flags[:-1] != flags[1:]):
            root = _bisect_boundary(positive, float(grid[i]), float(grid[i + 1]))
            events.append((root, "negativity-sudden-death"))

    cands_at = lambda g: _gd_terms(family, mode, param, g)[1]
    cand_matrix = np.array([cands_at(g) for g in grid])  # (n_grid, n_cands)
    argmax = np.argmax(cand_matrix, axis=1)
    for i in np.flatnonzero(argmax[:-1] != argmax[1:]):
        lo_branch, hi_branch = int(argmax[i]), int(argmax[i + 1])
        diff = lambda g: cands_at(g)[hi_branch] - cands_at(g)[lo_branch]
        root = _bisect_sign_change(diff, float(grid[i + 1]), float(grid[i]))
        # Genuine crossings change sign at resolvable magnitude on both sides;
        # tangential approaches (rounding-induced argmax ties) do not.
        below = max(root * (1.0 - 1e-3), 1e-12)
        above = min(root * (1.0 + 1e-3), 1.0)
        if diff(above) > 1e-13 and diff(below) < -1e-13:
            events.append((root, "geometric-discord-kink"))

    out = []
    for g_root, label in sorted(events, key=lambda e: -e[0]):
        t_gamma = -math.log(g_root)
        if t_gamma <= 1e-9:
            continue
        out.append(CriticalTime(t_gamma=t_gamma, t=t_gamma / gamma_rate, description=label))
    # Merge duplicates found by both scan grids.
    deduped: list[CriticalTime] = []
    for ev in out:
        if not deduped or abs(ev.t_gamma - deduped[-1].t_gamma) > 1e-8:
            deduped.append(ev)
    return deduped
