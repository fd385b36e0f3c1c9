"""Conditionally solvable polynomial-plus-Coulomb radial wells.

Closed-form ground states via superpotential factorization (valid under
explicit coefficient constraints), a Hamiltonian-hierarchy ladder for
excited-state estimates, and an independent RK4 shooting solver to
cross-check both.
"""

from .hierarchy import (
    DriftRow,
    HierarchyLadder,
    HierarchyStep,
    build_ladder,
    closed_form_energy,
    drift_report,
)
from .potentials import CoulombPotential, NonConfiningError, PolynomialCoulombPotential
from .shooting import (
    EigenResult,
    EigenvalueSearchError,
    ShootingConfig,
    find_eigenvalue,
    integrate_outward,
    spectrum,
)
from .susy import (
    DEFAULT_TOLERANCE,
    ConstraintReport,
    ConstraintViolationError,
    GroundWavefunction,
    ShapeInvarianceError,
    ShapeInvarianceWitness,
    Superpotential,
    constraint_report,
    ground_state,
    partner_potential,
    riccati_residual,
    shape_invariance_check,
    solve_superpotential,
    with_required_coefficients,
)

__all__ = [
    "CoulombPotential",
    "ConstraintReport",
    "ConstraintViolationError",
    "DEFAULT_TOLERANCE",
    "DriftRow",
    "EigenResult",
    "EigenvalueSearchError",
    "GroundWavefunction",
    "HierarchyLadder",
    "HierarchyStep",
    "NonConfiningError",
    "PolynomialCoulombPotential",
    "ShapeInvarianceError",
    "ShapeInvarianceWitness",
    "ShootingConfig",
    "Superpotential",
    "build_ladder",
    "closed_form_energy",
    "constraint_report",
    "drift_report",
    "find_eigenvalue",
    "ground_state",
    "integrate_outward",
    "partner_potential",
    "riccati_residual",
    "shape_invariance_check",
    "solve_superpotential",
    "spectrum",
    "with_required_coefficients",
]

__version__ = "0.1.0"
