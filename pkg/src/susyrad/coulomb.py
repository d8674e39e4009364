"""Bound radial eigenstates of the attractive 1/y problem in d dimensions.

States are L2-normalized on the half line in the y coordinate.  The effective
angular shift gamma = (d-3)/2 folds the dimension into a three-dimensional
looking radial equation; d = 3 reduces to hydrogen, where the familiar R_nl(r)
is exposed separately in the r coordinate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._laguerre_forms import ExponentialLaguerreForm
from .errors import AdmissibilityError, DomainError
from .specfun import SonineLaguerre, eval_sonine_laguerre
from .susy import RadialOperator


def _validate_dimension(dimension):
    if not isinstance(dimension, (int, np.integer)) or dimension < 2:
        raise AdmissibilityError(f"dimension must be an integer >= 2, got {dimension!r}")


def gamma_shift(dimension: int) -> float:
    _validate_dimension(dimension)
    return (dimension - 3) / 2.0


def coulomb_energy(dimension: int, principal: int) -> float:
    """E = -1/(2 (n + gamma)^2); independent of the angular number."""
    _validate_dimension(dimension)
    if not isinstance(principal, (int, np.integer)) or principal < 1:
        raise AdmissibilityError(f"principal number must be an integer >= 1, got {principal!r}")
    return -1.0 / (2.0 * (principal + gamma_shift(dimension)) ** 2)


@dataclass(frozen=True)
class CoulombState:
    dimension: int
    principal: int
    angular: int

    def __post_init__(self):
        _validate_dimension(self.dimension)
        if not isinstance(self.principal, (int, np.integer)) or self.principal < 1:
            raise AdmissibilityError(f"principal number must be >= 1, got {self.principal!r}")
        if not isinstance(self.angular, (int, np.integer)) or not (
            0 <= self.angular <= self.principal - 1
        ):
            raise AdmissibilityError(
                f"angular number must satisfy 0 <= l <= n-1, got l={self.angular!r} n={self.principal!r}"
            )

    @property
    def gamma(self) -> float:
        return gamma_shift(self.dimension)

    @cached_property
    def _form(self) -> ExponentialLaguerreForm:
        g = self.gamma
        return ExponentialLaguerreForm(
            scale=self.principal + g,
            exponent=self.angular + g + 1.0,
            degree=self.principal - self.angular - 1,
            order=2.0 * self.angular + 2.0 * g + 1.0,
        )

    @property
    def normalization(self) -> float:
        return self._form.norm

    @property
    def energy(self) -> float:
        return coulomb_energy(self.dimension, self.principal)

    def value(self, y):
        return self._form.value(y)

    __call__ = value

    def derivative(self, y):
        return self._form.derivative(y)

    def second_derivative(self, y):
        return self._form.second_derivative(y)

    def third_derivative(self, y):
        return self._form.third_derivative(y)

    def operator(self) -> RadialOperator:
        lg = self.angular + self.gamma
        return RadialOperator(
            coulomb_strength=1.0,
            oscillator_strength=0.0,
            centrifugal=lg * (lg + 1.0),
        )

    def operator_eigenvalue(self) -> float:
        """The bracket equation carries E/2, not E."""
        return 0.5 * self.energy


def eval_coulomb_state(state: CoulombState, y):
    return state.value(y)


def eval_hydrogen_R(principal: int, angular: int, r):
    """Three-dimensional R_nl(r), normalized so the integral of R^2 r^2 dr is 1."""
    n, l = principal, angular
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise AdmissibilityError(f"principal number must be >= 1, got {n!r}")
    if not isinstance(l, (int, np.integer)) or not (0 <= l <= n - 1):
        raise AdmissibilityError(f"angular number must satisfy 0 <= l <= n-1, got {l!r}")
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("radius must be finite")
    if np.any(arr <= 0.0):
        raise DomainError("radius must be positive")
    prefactor = (2.0 / n**2) * math.exp(0.5 * (math.lgamma(n - l) - math.lgamma(n + l + 1)))
    t = 2.0 * arr / n
    poly = eval_sonine_laguerre(SonineLaguerre(n - l - 1, 2 * l + 1), t)
    out = prefactor * t**l * np.exp(-arr / n) * poly
    return float(out) if np.ndim(r) == 0 else out


def partner_spectra(dimension: int, angular: int, count: int):
    """Analytic shifted spectra of the partner pair built at fixed l.

    Returns (bosonic, fermionic): the bosonic tower starts at zero by
    construction of the energy-zero offset 1/(4 (l+gamma+1)^2); the fermionic
    tower is the l+1 family under the same offset.
    """
    if count < 1:
        raise AdmissibilityError("count must be at least 1")
    g = gamma_shift(dimension)
    offset = 1.0 / (4.0 * (angular + g + 1.0) ** 2)
    bosonic = tuple(
        offset + 0.5 * coulomb_energy(dimension, n)
        for n in range(angular + 1, angular + 1 + count)
    )
    fermionic = tuple(
        offset + 0.5 * coulomb_energy(dimension, n)
        for n in range(angular + 2, angular + 1 + count)
    )
    return bosonic, fermionic
