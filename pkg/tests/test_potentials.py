import numpy as np
import pytest

from polycoulomb import CoulombPotential, NonConfiningError, PolynomialCoulombPotential


def test_evaluation_matches_direct_formula():
    pot = PolynomialCoulombPotential(l=1, c=-1.0, coeffs=(-1.5, 0.78, 0.5, 0.1), shift=0.25)
    r = 1.7
    expected = 2.0 / r**2 - 1.0 / r - 1.5 * r + 0.78 * r**2 + 0.5 * r**3 + 0.1 * r**4 + 0.25
    assert pot(r) == pytest.approx(expected, rel=1e-14)


def test_evaluation_vectorized():
    pot = PolynomialCoulombPotential(l=0, c=0.0, coeffs=(0.0, 1.0))
    r = np.array([0.5, 1.0, 2.0])
    assert pot(r) == pytest.approx(r**2)


def test_half_degree_and_coefficient_split():
    pot = PolynomialCoulombPotential.sextic(l=0, c=0.0, a=1, b=2, d=3, f=4, g=5, h=6)
    assert pot.n == 3
    assert pot.dependent_coeffs == (1.0, 2.0, 3.0)
    assert pot.independent_coeffs == (4.0, 5.0, 6.0)


def test_rejects_empty_and_odd_coefficient_lists():
    with pytest.raises(ValueError):
        PolynomialCoulombPotential(l=0, c=0.0, coeffs=())
    with pytest.raises(ValueError):
        PolynomialCoulombPotential(l=0, c=0.0, coeffs=(1.0, 2.0, 3.0))


def test_rejects_non_confining_leading_coefficient():
    with pytest.raises(NonConfiningError):
        PolynomialCoulombPotential(l=0, c=0.0, coeffs=(1.0, 0.0))
    with pytest.raises(NonConfiningError):
        PolynomialCoulombPotential(l=0, c=0.0, coeffs=(1.0, -0.3))


def test_rejects_negative_l():
    with pytest.raises(ValueError):
        PolynomialCoulombPotential(l=-1, c=0.0, coeffs=(0.0, 1.0))


def test_shift_is_additive():
    base = PolynomialCoulombPotential.quartic(l=1, c=-1.0, a=0.1, b=0.2, d=0.5, f=0.1)
    shifted = PolynomialCoulombPotential.quartic(
        l=1, c=-1.0, a=0.1, b=0.2, d=0.5, f=0.1, shift=2.5
    )
    r = np.linspace(0.2, 5.0, 7)
    assert shifted(r) - base(r) == pytest.approx(2.5)


def test_coulomb_potential():
    pot = CoulombPotential(l=1, c=-2.0)
    assert pot(2.0) == pytest.approx(2.0 / 4.0 - 1.0)
