"""Radial potentials with a centrifugal barrier, a Coulomb term and a polynomial tail."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NonConfiningError(ValueError):
    """Raised when the leading polynomial coefficient is not strictly positive."""


@dataclass(frozen=True)
class PolynomialCoulombPotential:
    """V(r) = l(l+1)/r^2 + c/r + sum_{i=1}^{2n} a_i r^i + shift.

    ``coeffs`` holds (a_1, ..., a_{2n}); the polynomial degree is even and the
    leading coefficient a_{2n} must be positive so the well is confining.
    ``shift`` is an additive constant used by the hierarchy bookkeeping.
    Instances are immutable and safe to share between threads.
    """

    l: int
    c: float
    coeffs: tuple[float, ...]
    shift: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "l", int(self.l))
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "coeffs", tuple(float(a) for a in self.coeffs))
        object.__setattr__(self, "shift", float(self.shift))
        if self.l < 0:
            raise ValueError(f"angular momentum l must be >= 0, got {self.l}")
        if not self.coeffs or len(self.coeffs) % 2 != 0:
            raise ValueError(
                "coeffs must hold a_1..a_{2n} for some n >= 1, "
                f"got {len(self.coeffs)} entries"
            )
        if self.coeffs[-1] <= 0.0:
            raise NonConfiningError(
                f"leading coefficient a_{len(self.coeffs)} = {self.coeffs[-1]} "
                "must be > 0 for a confining well"
            )

    @property
    def n(self) -> int:
        """Half-degree: the polynomial part runs up to r^(2n)."""
        return len(self.coeffs) // 2

    @property
    def independent_coeffs(self) -> tuple[float, ...]:
        """a_{n+1}..a_{2n}, the coefficients that may be chosen freely."""
        return self.coeffs[self.n:]

    @property
    def dependent_coeffs(self) -> tuple[float, ...]:
        """a_1..a_n, the coefficients pinned down by the solvability conditions."""
        return self.coeffs[: self.n]

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        v = self.l * (self.l + 1) / (r * r) + self.c / r + self.shift
        # Horner on the polynomial tail: a_1 r + ... + a_{2n} r^{2n}
        p = 0.0
        for a in reversed(self.coeffs):
            p = p * r + a
        return v + p * r

    @classmethod
    def quartic(cls, l, c, a, b, d, f, shift=0.0):
        """Quartic well l(l+1)/r^2 + c/r + a r + b r^2 + d r^3 + f r^4."""
        return cls(l=l, c=c, coeffs=(a, b, d, f), shift=shift)

    @classmethod
    def sextic(cls, l, c, a, b, d, f, g, h, shift=0.0):
        """Sextic well with polynomial tail a r + b r^2 + ... + h r^6."""
        return cls(l=l, c=c, coeffs=(a, b, d, f, g, h), shift=shift)


@dataclass(frozen=True)
class CoulombPotential:
    """Bare V(r) = l(l+1)/r^2 + c/r, used as a shooting-solver oracle."""

    l: int
    c: float
    shift: float = 0.0

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        return self.l * (self.l + 1) / (r * r) + self.c / r + self.shift
