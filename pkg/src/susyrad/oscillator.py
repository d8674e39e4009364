"""Radial eigenstates of the isotropic quadratic well in D dimensions.

Same bookkeeping as the Coulomb family: Gamma = (D-3)/2 folds the dimension
into the radial equation, and only N - L even is admissible (the polynomial
degree is (N-L)/2).  Operator-side eigenvalues are 2E.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._laguerre_forms import GaussianLaguerreForm
from .errors import AdmissibilityError, ParityError
from .susy import RadialOperator


def _validate_dimension(dimension):
    if not isinstance(dimension, (int, np.integer)) or dimension < 2:
        raise AdmissibilityError(f"dimension must be an integer >= 2, got {dimension!r}")


def gamma_shift(dimension: int) -> float:
    _validate_dimension(dimension)
    return (dimension - 3) / 2.0


def oscillator_energy(dimension: int, principal: int) -> float:
    """E = (2N + 2Gamma + 3)/2 in the family's dimensionless units."""
    _validate_dimension(dimension)
    if not isinstance(principal, (int, np.integer)) or principal < 0:
        raise AdmissibilityError(f"principal number must be an integer >= 0, got {principal!r}")
    return (2.0 * principal + 2.0 * gamma_shift(dimension) + 3.0) / 2.0


@dataclass(frozen=True)
class OscillatorState:
    dimension: int
    principal: int
    angular: int

    def __post_init__(self):
        _validate_dimension(self.dimension)
        if not isinstance(self.principal, (int, np.integer)) or self.principal < 0:
            raise AdmissibilityError(f"principal number must be >= 0, got {self.principal!r}")
        if not isinstance(self.angular, (int, np.integer)) or not (
            0 <= self.angular <= self.principal
        ):
            raise AdmissibilityError(
                f"angular number must satisfy 0 <= L <= N, got L={self.angular!r} N={self.principal!r}"
            )
        if (self.principal - self.angular) % 2:
            raise ParityError(
                f"N - L must be even, got N={self.principal} L={self.angular}"
            )

    @property
    def gamma(self) -> float:
        return gamma_shift(self.dimension)

    @cached_property
    def _form(self) -> GaussianLaguerreForm:
        g = self.gamma
        return GaussianLaguerreForm(
            exponent=self.angular + g + 1.0,
            degree=(self.principal - self.angular) // 2,
            order=self.angular + g + 0.5,
        )

    @property
    def normalization(self) -> float:
        return self._form.norm

    @property
    def energy(self) -> float:
        return oscillator_energy(self.dimension, self.principal)

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
            coulomb_strength=0.0,
            oscillator_strength=1.0,
            centrifugal=lg * (lg + 1.0),
        )

    def operator_eigenvalue(self) -> float:
        """The bracket equation carries 2E."""
        return 2.0 * self.energy


def eval_oscillator_state(state: OscillatorState, y):
    return state.value(y)


def partner_spectra(dimension: int, angular: int, count: int):
    """Analytic shifted spectra of the partner pair built at fixed L.

    Bosonic tower: 2E - (2L + 2Gamma + 3) over N = L, L+2, ...; fermionic
    tower: the L+1 family under the partner's constant 2L + 2Gamma + 1.
    """
    if count < 1:
        raise AdmissibilityError("count must be at least 1")
    g = gamma_shift(dimension)
    base = 2.0 * angular + 2.0 * g
    bosonic = tuple(
        2.0 * oscillator_energy(dimension, angular + 2 * k) - (base + 3.0)
        for k in range(count)
    )
    fermionic = tuple(
        2.0 * oscillator_energy(dimension, angular + 1 + 2 * k) - (base + 1.0)
        for k in range(count - 1)
    )
    return bosonic, fermionic
