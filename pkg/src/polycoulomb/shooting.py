"""Shooting solver for the radial equation -u'' + V(r) u = E u.

Outward RK4 from a series start u ~ r^(l+1), interior node counting, and
energy bisection.  This is deliberately independent of the factorization
machinery so the two routes cross-check each other.

The sweep is fixed-step except for a short graded warmup near the origin:
for l >= 1 the centrifugal wall makes the local mode rate sqrt(l(l+1))/r
exceed the stable RK4 range at the default step, so the first segment uses
steps proportional to r until the fixed step is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numba import njit

_RESCALE_AT = 1e250
_RESCALE_BY = 1e-250
_R_MAX_LO = 5.0
_R_MAX_HI = 50.0
_R_MAX_MARGIN = 25.0
_MAX_WIDENINGS = 10
_WARMUP_RATE = 0.2  # max (mode rate) * (step) during the graded segment


class EigenvalueSearchError(RuntimeError):
    """No energy bracket straddling the requested state could be found."""


@dataclass(frozen=True)
class ShootingConfig:
    """Grid and bisection controls.

    ``r_max=None`` picks the smallest radius where V exceeds the scanned
    energy range by a 25-unit margin (clamped to [5, 50]), which keeps the
    forbidden-region tail long enough that truncation cannot fake a zero.
    ``e_lo``/``e_hi`` default to an automatic bracket that is widened until
    the node counts straddle the requested state.
    """

    r_start: float = 1e-4
    r_max: float | None = None
    step: float = 1e-3
    e_lo: float | None = None
    e_hi: float | None = None
    e_tol: float = 1e-8
    max_iter: int = 200

    def __post_init__(self):
        if self.r_start <= 0.0:
            raise ValueError("r_start must be > 0")
        if self.step <= 0.0:
            raise ValueError("step must be > 0")
        if self.r_max is not None and self.r_max <= self.r_start:
            raise ValueError("r_max must exceed r_start")
        if self.e_lo is not None and self.e_hi is not None and self.e_lo >= self.e_hi:
            raise ValueError("e_lo must be below e_hi")


@dataclass(frozen=True)
class EigenResult:
    """A converged (or failed) eigenvalue with its normalized samples."""

    energy: float
    nodes: int
    converged: bool
    wf_samples: np.ndarray | None  # columns (r, u), trapezoid-normalized
    message: str | None = None


class ShotResult(NamedTuple):
    r: np.ndarray
    u: np.ndarray
    nodes: int
    u_end: float
    du_end: float


@njit(cache=True)
def _sweep(v_node, v_half, h, u0, p0, e):
    # One outward fixed-step RK4 pass; returns (nodes, u_end, p_end).
    # u is rescaled when it overflows 1e250, preserving node count and sign.
    u = u0
    p = p0
    nodes = 0
    for i in range(v_half.shape[0]):
        f0 = v_node[i] - e
        fm = v_half[i] - e
        f1 = v_node[i + 1] - e
        k1u = p
        k1p = f0 * u
        k2u = p + 0.5 * h * k1p
        k2p = fm * (u + 0.5 * h * k1u)
        k3u = p + 0.5 * h * k2p
        k3p = fm * (u + 0.5 * h * k2u)
        k4u = p + h * k3p
        k4p = f1 * (u + h * k3u)
        un = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        p = p + (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        if (un > 0.0 and u < 0.0) or (un < 0.0 and u > 0.0):
            nodes += 1
        u = un
        if abs(u) > _RESCALE_AT:
            u *= _RESCALE_BY
            p *= _RESCALE_BY
    return nodes, u, p


@njit(cache=True)
def _sweep_samples(v_node, v_half, h, u0, p0, e, out):
    # Same pass, storing u at every grid point; rescales are applied
    # retroactively so the stored samples stay mutually consistent.
    u = u0
    p = p0
    out[0] = u
    nodes = 0
    for i in range(v_half.shape[0]):
        f0 = v_node[i] - e
        fm = v_half[i] - e
        f1 = v_node[i + 1] - e
        k1u = p
        k1p = f0 * u
        k2u = p + 0.5 * h * k1p
        k2p = fm * (u + 0.5 * h * k1u)
        k3u = p + 0.5 * h * k2p
        k3p = fm * (u + 0.5 * h * k2u)
        k4u = p + h * k3p
        k4p = f1 * (u + h * k3u)
        un = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        p = p + (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        if (un > 0.0 and u < 0.0) or (un < 0.0 and u > 0.0):
            nodes += 1
        u = un
        out[i + 1] = u
        if abs(u) > _RESCALE_AT:
            u *= _RESCALE_BY
            p *= _RESCALE_BY
            for j in range(i + 2):
                out[j] *= _RESCALE_BY
    return nodes, u, p


def _rk4_step(f0, fm, f1, h, u, p):
    k1u = p
    k1p = f0 * u
    k2u = p + 0.5 * h * k1p
    k2p = fm * (u + 0.5 * h * k1u)
    k3u = p + 0.5 * h * k2p
    k3p = fm * (u + 0.5 * h * k2u)
    k4u = p + h * k3p
    k4p = f1 * (u + h * k3u)
    un = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
    pn = p + (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
    return un, pn


def _auto_r_max(pot, e_top):
    rs = np.linspace(0.05, _R_MAX_HI, 4096)
    below = pot(rs) < e_top + _R_MAX_MARGIN
    if not below.any():
        return _R_MAX_LO
    idx = np.nonzero(below)[0][-1]
    r_cross = rs[min(idx + 1, rs.size - 1)]
    return float(min(max(r_cross, _R_MAX_LO), _R_MAX_HI))


def _warmup_radii(l, r_start, step):
    # Graded radii r_{j+1} = r_j (1 + rate/s) with s = sqrt(l(l+1)), stopping
    # once the fixed step satisfies the same rate bound.  Empty for l = 0.
    s = math.sqrt(l * (l + 1))
    if s == 0.0 or _WARMUP_RATE * r_start / s >= step:
        return np.array([r_start])
    radii = [r_start]
    r = r_start
    while _WARMUP_RATE * r / s < step:
        r += _WARMUP_RATE * r / s
        radii.append(r)
    return np.asarray(radii)


class _Grid:
    """Precomputed potential values on the warmup and fixed-step segments."""

    def __init__(self, pot, cfg, r_max):
        self.rw = _warmup_radii(pot.l, cfg.r_start, cfg.step)
        r0 = self.rw[-1]
        n_steps = max(int(math.ceil((r_max - r0) / cfg.step)), 8)
        self.h = cfg.step
        self.r = r0 + cfg.step * np.arange(n_steps + 1)
        self.v_node = np.asarray(pot(self.r), dtype=float)
        self.v_half = np.asarray(pot(self.r[:-1] + 0.5 * cfg.step), dtype=float)
        self.vw_node = np.asarray(pot(self.rw), dtype=float)
        self.vw_half = np.asarray(pot(0.5 * (self.rw[:-1] + self.rw[1:])), dtype=float)
        self.hw = np.diff(self.rw)
        self.u0 = cfg.r_start ** (pot.l + 1)
        self.p0 = (pot.l + 1) * cfg.r_start**pot.l

    def _warmup(self, e, out=None):
        # Few hundred graded steps at most; plain Python is cheap enough here.
        u = self.u0
        p = self.p0
        nodes = 0
        if out is not None:
            out[0] = u
        for i in range(self.hw.size):
            un, p = _rk4_step(
                self.vw_node[i] - e,
                self.vw_half[i] - e,
                self.vw_node[i + 1] - e,
                self.hw[i],
                u,
                p,
            )
            if (un > 0.0 and u < 0.0) or (un < 0.0 and u > 0.0):
                nodes += 1
            u = un
            if out is not None:
                out[i + 1] = u
        return nodes, u, p

    def nodes_and_sign(self, e):
        nodes_w, u, p = self._warmup(e)
        nodes, u_end, _ = _sweep(self.v_node, self.v_half, self.h, u, p, e)
        return nodes_w + nodes, u_end

    def sampled(self, e):
        uw = np.empty_like(self.rw)
        nodes_w, u, p = self._warmup(e, out=uw)
        um = np.empty_like(self.r)
        nodes, u_end, p_end = _sweep_samples(self.v_node, self.v_half, self.h, u, p, e, um)
        r_all = np.concatenate((self.rw[:-1], self.r))
        u_all = np.concatenate((uw[:-1], um))
        return r_all, u_all, nodes_w + nodes, u_end, p_end


def integrate_outward(pot, e: float, cfg: ShootingConfig | None = None) -> ShotResult:
    """Single outward integration at energy ``e`` (raw, unnormalized)."""
    cfg = cfg or ShootingConfig()
    r_max = cfg.r_max if cfg.r_max is not None else _auto_r_max(pot, e)
    grid = _Grid(pot, cfg, r_max)
    r, u, nodes, u_end, p_end = grid.sampled(e)
    return ShotResult(r=r, u=u, nodes=nodes, u_end=u_end, du_end=p_end)


def _above(grid, e, k):
    # True once e has passed the k-th eigenvalue: either the extra node is
    # already visible, or u_end has flipped away from the k-node band sign.
    nodes, u_end = grid.nodes_and_sign(e)
    if nodes > k:
        return True
    if nodes < k:
        return False
    band_sign_positive = k % 2 == 0
    return (u_end < 0.0) if band_sign_positive else (u_end > 0.0)


def _trim_tail(u):
    # Zero the monotonically growing tail past the outermost |u| minimum;
    # that is the admixed forbidden-region divergence, not the bound state.
    # The minimum point itself goes too: it sits next to the spurious zero
    # crossing and its sign is meaningless.
    i = u.size - 1
    while i > 0 and abs(u[i - 1]) < abs(u[i]):
        i -= 1
    out = u.copy()
    out[i:] = 0.0
    return out


def _count_nodes(u):
    s = np.sign(u)
    s = s[s != 0.0]
    if s.size < 2:
        return 0
    return int(np.count_nonzero(s[1:] != s[:-1]))


def find_eigenvalue(pot, state_index: int, cfg: ShootingConfig | None = None) -> EigenResult:
    """Locate the bound state with ``state_index`` interior nodes.

    Brackets the state by node count (widening the bracket up to 10 times),
    then bisects on node count plus the sign of u(r_max).  Raises
    EigenvalueSearchError with the observed node counts when no bracket works.
    """
    if state_index < 0:
        raise ValueError(f"state_index must be >= 0, got {state_index}")
    cfg = cfg or ShootingConfig()
    k = state_index

    probe = np.geomspace(cfg.r_start, _R_MAX_HI, 2048)
    v_min = float(np.min(pot(probe)))
    e_lo = cfg.e_lo if cfg.e_lo is not None else v_min
    e_hi = cfg.e_hi if cfg.e_hi is not None else v_min + 10.0

    # Widen upward with a doubling increment scaled to the well depth, so a
    # deep singular floor (attractive Coulomb near the origin) cannot stall
    # the search below the bound spectrum.
    widen = max(10.0, 0.05 * abs(e_lo))
    grid = None
    n_hi = -1
    for _ in range(_MAX_WIDENINGS + 1):
        r_max = cfg.r_max if cfg.r_max is not None else _auto_r_max(pot, e_hi)
        grid = _Grid(pot, cfg, r_max)
        n_hi, _ = grid.nodes_and_sign(e_hi)
        if n_hi >= k + 1:
            break
        e_hi += widen
        widen *= 2.0
    else:
        n_lo, _ = grid.nodes_and_sign(e_lo)
        raise EigenvalueSearchError(
            f"no upper bracket for state {k}: nodes(e_lo={e_lo:.6g}) = {n_lo}, "
            f"nodes(e_hi={e_hi:.6g}) = {n_hi} after {_MAX_WIDENINGS} widenings"
        )

    for _ in range(_MAX_WIDENINGS + 1):
        if not _above(grid, e_lo, k):
            break
        e_lo = e_hi - 2.0 * (e_hi - e_lo)
    else:
        n_lo, _ = grid.nodes_and_sign(e_lo)
        raise EigenvalueSearchError(
            f"no lower bracket for state {k}: nodes(e_lo={e_lo:.6g}) = {n_lo} "
            f"after {_MAX_WIDENINGS} widenings"
        )

    it = 0
    while e_hi - e_lo > cfg.e_tol and it < cfg.max_iter:
        mid = 0.5 * (e_lo + e_hi)
        if _above(grid, mid, k):
            e_hi = mid
        else:
            e_lo = mid
        it += 1
    energy = 0.5 * (e_lo + e_hi)
    converged = (e_hi - e_lo) <= cfg.e_tol

    r_all, u_all, _, _, _ = grid.sampled(energy)
    u_all = _trim_tail(u_all)
    norm = math.sqrt(float(np.trapezoid(u_all * u_all, x=r_all)))
    if norm > 0.0:
        u_all = u_all / norm
    samples = np.column_stack((r_all, u_all))
    return EigenResult(
        energy=energy, nodes=_count_nodes(u_all), converged=converged, wf_samples=samples
    )


def spectrum(pot, n_states: int, cfg: ShootingConfig | None = None) -> list[EigenResult]:
    """First ``n_states`` eigenvalues; per-state failures do not abort the rest."""
    if n_states < 1:
        raise ValueError(f"n_states must be >= 1, got {n_states}")
    results = []
    for k in range(n_states):
        try:
            results.append(find_eigenvalue(pot, k, cfg))
        except EigenvalueSearchError as err:
            results.append(
                EigenResult(
                    energy=math.nan,
                    nodes=-1,
                    converged=False,
                    wf_samples=None,
                    message=str(err),
                )
            )
    return results
