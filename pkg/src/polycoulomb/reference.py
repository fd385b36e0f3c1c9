"""Bundled benchmark presets and stored reference tables.

Two quartic parameter sets (SET I and SET II, both l = 1) with reference
values for the dependent coefficients at the first three hierarchy rungs
(table 1) and for the ladder vs shooting energies (table 2).  Reference
entries are printed at fixed decimals; ``decimals`` records how many, so
comparisons allow one unit in the last printed place.
"""

from __future__ import annotations

from .potentials import PolynomialCoulombPotential
from .susy import with_required_coefficients

SETS = ("I", "II")

# independent quartic parameters per set: (l, c, d, f)
_SET_PARAMS = {
    "I": dict(l=1, c=-1.0, d=0.5, f=0.1),
    "II": dict(l=1, c=-0.1, d=0.3, f=0.07),
}

# table 1: dependent coefficients (a, b) at rungs k = 0, 1, 2, with the
# number of decimals each reference value is printed to.
TABLE1 = {
    "I": (
        ((-1.5020, 4), (0.7831, 4)),
        ((-2.2662, 4), (0.7304, 4)),
        ((-2.9646, 4), (0.7040, 4)),
    ),
    "II": (
        ((-1.559, 3), (0.3346, 4)),
        ((-2.0977, 4), (0.3302, 4)),
        ((-2.6315, 4), (0.3280, 4)),
    ),
}

# table 2: ladder (analytic) energies per rung, printed to 2 decimals.
TABLE2_LADDER = {
    "I": (3.89, 7.09, 10.26),
    "II": (2.83, 5.10, 7.37),
}

# table 2: shooting energies, +-0.01.  Per member potential V_{m+1} (rung m):
# the base well contributes three states, its partner two, the next rung one.
TABLE2_SHOOTING = {
    "I": ((3.89, 7.06, 10.15), (7.08, 10.23), (10.24,)),
    "II": ((2.83, 5.06, 7.34), (5.09, 7.35), (7.36,)),
}


def set_params(name: str) -> dict:
    if name not in _SET_PARAMS:
        raise ValueError(f"unknown set {name!r}; expected one of {SETS}")
    return dict(_SET_PARAMS[name])


def set_potential(name: str) -> PolynomialCoulombPotential:
    """The quartic preset with dependent coefficients already satisfied."""
    p = set_params(name)
    template = PolynomialCoulombPotential.quartic(
        l=p["l"], c=p["c"], a=0.0, b=0.0, d=p["d"], f=p["f"]
    )
    return with_required_coefficients(template)
