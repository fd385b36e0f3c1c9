import numpy as np
import pytest

from polycoulomb import PolynomialCoulombPotential, with_required_coefficients


@pytest.fixture
def set1():
    # l=1, c=-1, d=0.5, f=0.1 with dependent coefficients satisfied
    return with_required_coefficients(
        PolynomialCoulombPotential.quartic(l=1, c=-1.0, a=0.0, b=0.0, d=0.5, f=0.1)
    )


@pytest.fixture
def set2():
    return with_required_coefficients(
        PolynomialCoulombPotential.quartic(l=1, c=-0.1, a=0.0, b=0.0, d=0.3, f=0.07)
    )


@pytest.fixture
def oscillator():
    # V = r^2 at l=0: radial levels 4k + 3
    return PolynomialCoulombPotential(l=0, c=0.0, coeffs=(0.0, 1.0))


@pytest.fixture
def sextic_flat():
    # f=1, g=2, h=1 makes the linear superpotential coefficient vanish
    return with_required_coefficients(
        PolynomialCoulombPotential.sextic(
            l=0, c=-1.0, a=0.0, b=0.0, d=0.0, f=1.0, g=2.0, h=1.0
        )
    )


def quartic_required(l, c, d, f):
    """Dependent quartic coefficients written out independently of the solver."""
    sf = np.sqrt(f)
    a = -c * d / (2.0 * sf * (l + 1)) - (2 * l + 4) * sf
    b = d * d / (4.0 * f) - c * sf / (l + 1)
    return a, b


def quartic_ladder_energy(l, c, d, f, k):
    """Closed-form rung energy written out independently of the solver."""
    sf = np.sqrt(f)
    lk = l + k + 1
    return -(c * c) / (4.0 * lk * lk) + d * lk / sf + d * (1 + 2 * k) / (2.0 * sf)
