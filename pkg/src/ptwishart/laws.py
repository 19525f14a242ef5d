"""Closed-form spectral limit laws.

Three laws cover the ensembles in this package: the semicircle law (the
limit of partially transposed Wishart spectra, shifted to mean 1), the
Marchenko-Pastur law (the limit of Wishart spectra themselves, aspect
parameterized so that alpha = p / n for a (1/p)-normalized sample
covariance), and the symmetric law with Catalan-squared even moments that
governs partially transposed pure states.

Moments are exact; CDFs and quadrature cross-checks integrate the densities
adaptively to absolute accuracy 1e-8.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, pi, sqrt

import numpy as np
from scipy import integrate

from .errors import ParameterError
from .partitions import catalan, mp_moment_via_noncrossing

CDF_ABS_TOL = 1e-8


def _scalar_or_array(values: np.ndarray):
    if values.ndim == 0:
        return float(values)
    return values


@dataclass(frozen=True)
class Semicircle:
    """Semicircle law with the given mean and variance.

    The support is [mean - 2*sigma, mean + 2*sigma] with sigma = sqrt(variance)
    and the density is sqrt(4*variance - (x - mean)^2) / (2*pi*variance).
    Even central moments are Catalan numbers times powers of the variance.
    """

    mean: float = 0.0
    variance: float = 1.0

    def __post_init__(self):
        if self.variance <= 0:
            raise ParameterError(f"variance must be positive, got {self.variance}")

    @property
    def support(self) -> tuple[float, float]:
        radius = 2.0 * sqrt(self.variance)
        return (self.mean - radius, self.mean + radius)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        rad = 4.0 * self.variance - (x - self.mean) ** 2
        val = np.sqrt(np.clip(rad, 0.0, None)) / (2.0 * pi * self.variance)
        return _scalar_or_array(np.where(rad >= 0.0, val, 0.0))

    def moment(self, k: int) -> float:
        """Exact k-th moment via binomial expansion around the mean."""
        if k < 0:
            raise ParameterError(f"moment order must be >= 0, got {k}")
        total = 0.0
        for j in range(0, k + 1, 2):
            total += comb(k, j) * self.mean ** (k - j) * catalan(j // 2) * self.variance ** (j // 2)
        return float(total)

    def cdf(self, x: float) -> float:
        lo, hi = self.support
        if x <= lo:
            return 0.0
        if x >= hi:
            return 1.0
        val, _ = integrate.quad(self.density, lo, x, epsabs=CDF_ABS_TOL / 10.0, limit=200)
        return min(max(float(val), 0.0), 1.0)


@dataclass(frozen=True)
class MarchenkoPastur:
    """Limit eigenvalue law of (1/p) G G^dagger Wishart matrices, alpha = p/n.

    For alpha < 1 the matrix is rank deficient and the law carries an atom of
    mass 1 - alpha at zero.  The continuous part occupies
    [(1 - 1/sqrt(alpha))^2, (1 + 1/sqrt(alpha))^2] for every alpha and has
    total mass min(alpha, 1); its density is
    alpha * sqrt((x - b_lo) * (b_hi - x)) / (2*pi*x).
    """

    alpha: float

    def __post_init__(self):
        if self.alpha <= 0:
            raise ParameterError(f"alpha must be positive, got {self.alpha}")

    @property
    def atom(self) -> float:
        """Mass of the atom at zero (nonzero only for alpha < 1)."""
        return max(0.0, 1.0 - self.alpha)

    @property
    def support(self) -> tuple[float, float]:
        r = 1.0 / sqrt(self.alpha)
        return ((1.0 - r) ** 2, (1.0 + r) ** 2)

    def density(self, x):
        lo, hi = self.support
        x = np.asarray(x, dtype=float)
        inside = (x > lo) & (x < hi) & (x > 0.0)
        rad = np.where(inside, (x - lo) * (hi - x), 0.0)
        safe_x = np.where(inside, x, 1.0)
        val = self.alpha * np.sqrt(rad) / (2.0 * pi * safe_x)
        return _scalar_or_array(np.where(inside, val, 0.0))

    def moment(self, k: int) -> float:
        """Exact k-th moment as the non-crossing partition sum."""
        return mp_moment_via_noncrossing(self.alpha, k)

    def cdf(self, x: float) -> float:
        lo, hi = self.support
        base = self.atom if x >= 0.0 else 0.0
        if x <= lo:
            return min(base, 1.0)
        if x >= hi:
            return 1.0
        val, _ = integrate.quad(self.density, lo, x, epsabs=CDF_ABS_TOL / 10.0, limit=200)
        return min(max(float(val) + base, 0.0), 1.0)


@dataclass(frozen=True)
class ProductSemicircle:
    """Law of the product of two independent standard semicircular variables.

    Odd moments vanish; moment 2k equals catalan(k)**2.  Only moments are
    exposed: the density involves special functions and is out of scope here.
    """

    def moment(self, k: int) -> float:
        if k < 0:
            raise ParameterError(f"moment order must be >= 0, got {k}")
        if k % 2 == 1:
            return 0.0
        return float(catalan(k // 2) ** 2)


def quadrature_moment(law, k: int) -> float:
    """Moment by adaptive quadrature of the density plus any atom at zero.

    Independent cross-check of the closed-form moments; the atom contributes
    only to the 0-th moment.
    """
    if k < 0:
        raise ParameterError(f"moment order must be >= 0, got {k}")
    lo, hi = law.support
    val, _ = integrate.quad(
        lambda x: x**k * law.density(x), lo, hi, epsabs=1e-12, epsrel=1e-11, limit=500
    )
    atom = getattr(law, "atom", 0.0)
    if k == 0:
        val += atom
    return float(val)
