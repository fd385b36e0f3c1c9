"""Hamiltonian hierarchy ladder for conditionally shape-invariant wells.

Each rung replaces l by l+k, keeps the independent coefficients, resets the
dependent ones to their freshly required values, and accumulates the 2*A_1
partner shift so that rung energies live on the original absolute scale.  The
rung-k ground state approximates the k-th excited state of the base well; the
drift report measures how far the shape-invariance translation misses the
reset values, which is exactly the source of that approximation error.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .potentials import PolynomialCoulombPotential
from .susy import (
    DEFAULT_TOLERANCE,
    ConstraintViolationError,
    constraint_report,
    solve_superpotential,
)

MAX_DEPTH = 16


@dataclass(frozen=True)
class HierarchyStep:
    """One rung: the reset potential at l+k and its absolute ground energy.

    ``drift`` holds |translated - required| per dependent coefficient (empty
    at k = 0, where there is no preceding rung to translate from).
    """

    k: int
    l_k: int
    potential: PolynomialCoulombPotential
    dependent_params: tuple[float, ...]
    energy_abs: float
    drift: tuple[float, ...]


@dataclass(frozen=True)
class HierarchyLadder:
    base: PolynomialCoulombPotential
    steps: tuple[HierarchyStep, ...]


class DriftRow(NamedTuple):
    k: int
    coefficient: str
    translated: float
    required: float
    gap: float


def build_ladder(
    pot: PolynomialCoulombPotential,
    depth: int,
    tol: float = DEFAULT_TOLERANCE,
    max_depth: int = MAX_DEPTH,
) -> HierarchyLadder:
    """Climb the hierarchy to ``depth`` rungs above the base potential.

    Rung k has l = l_0 + k, the same c and high coefficients, dependent
    coefficients reset to the required values at that l, and shift increased
    by 2k*A_1 (A_1 depends only on the high coefficients, so it is the same
    at every rung).  The rung ground energy then sits on the absolute scale
    of the base well, directly comparable with its excited spectrum.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if depth > max_depth:
        raise ValueError(
            f"depth {depth} exceeds max_depth {max_depth}; deep rungs are "
            "usually drift-dominated, pass max_depth explicitly to override"
        )
    sp0 = solve_superpotential(pot)
    report0 = constraint_report(pot, sp0, tol)
    if not report0.satisfied:
        raise ConstraintViolationError(report0)
    n = pot.n
    a1 = sp0.A[0]
    a_pad = (0.0,) + sp0.A + (0.0,)
    high = pot.independent_coeffs
    steps = []
    prev_req: tuple[float, ...] | None = None
    for k in range(depth + 1):
        rung = PolynomialCoulombPotential(
            l=pot.l + k,
            c=pot.c,
            coeffs=(0.0,) * n + high,
            shift=pot.shift + 2.0 * k * a1,
        )
        sp_k = solve_superpotential(rung)
        req = constraint_report(rung, sp_k, tol).required
        rung = replace(rung, coeffs=req + high)
        if k == 0:
            drift = ()
        else:
            drift = tuple(
                abs(prev_req[m - 1] + 2.0 * (m + 1.0) * a_pad[m + 1] - req[m - 1])
                for m in range(1, n + 1)
            )
        steps.append(
            HierarchyStep(
                k=k,
                l_k=pot.l + k,
                potential=rung,
                dependent_params=req,
                energy_abs=sp_k.ground_energy,
                drift=drift,
            )
        )
        prev_req = req
    return HierarchyLadder(base=pot, steps=tuple(steps))


def closed_form_energy(pot: PolynomialCoulombPotential, k: int) -> float:
    """Rung-k ladder energy in closed form, for quartic and sextic wells only.

    Serves as the oracle for the generic rule used by :func:`build_ladder`
    (standalone rung energy plus 2k*A_1).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    lk1 = pot.l + k + 1.0
    if pot.n == 2:
        d, f = pot.coeffs[2], pot.coeffs[3]
        sf = f**0.5
        return (
            -pot.c**2 / (4.0 * lk1**2)
            + d * lk1 / sf
            + d * (1.0 + 2.0 * k) / (2.0 * sf)
            + pot.shift
        )
    if pot.n == 3:
        f, g, h = pot.coeffs[3], pot.coeffs[4], pot.coeffs[5]
        sh = h**0.5
        bracket = f / (2.0 * sh) - g**2 / (8.0 * h * sh)
        return (
            -pot.c**2 / (4.0 * lk1**2)
            + 2.0 * lk1 * bracket
            + (1.0 + 2.0 * k) * bracket
            + pot.shift
        )
    raise NotImplementedError(
        f"closed form available for n = 2 or 3, got n = {pot.n}; "
        "use build_ladder for the generic rule"
    )


def drift_report(ladder: HierarchyLadder) -> list[DriftRow]:
    """One row per dependent coefficient per rung k >= 1.

    ``translated`` is the shape-invariance prediction from rung k-1;
    ``required`` is what rung k's solvability conditions actually demand.
    """
    sp0 = solve_superpotential(ladder.base)
    a_pad = (0.0,) + sp0.A + (0.0,)
    rows = []
    for prev, step in zip(ladder.steps, ladder.steps[1:]):
        for m in range(1, ladder.base.n + 1):
            translated = prev.dependent_params[m - 1] + 2.0 * (m + 1.0) * a_pad[m + 1]
            required = step.dependent_params[m - 1]
            rows.append(
                DriftRow(
                    k=step.k,
                    coefficient=f"a{m}",
                    translated=translated,
                    required=required,
                    gap=abs(translated - required),
                )
            )
    return rows
