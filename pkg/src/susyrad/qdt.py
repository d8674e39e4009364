"""Broken-symmetry families: quantum-defect and anharmonic radial models.

A defect model replaces (n, l) by (n* = n - delta, l* = l + i - delta) with a
real defect delta in [0, 1) and an integer shift i >= 0; the states keep the
Coulomb functional form with starred parameters and stay exactly solvable.
The anharmonic model is the oscillator-side mirror with (N* = N - 2*Delta,
L* = L + 2*I - 2*Delta).  The breaking potential is the exact difference
between the starred and unstarred radial operators plus the eigenvalue
bookkeeping constant, so the unstarred operator with the breaking potential
added has the starred functions as eigenfunctions at the rigid bracket
eigenvalue; the physical level shift lives in the starred decay scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._laguerre_forms import ExponentialLaguerreForm, GaussianLaguerreForm
from .coulomb import gamma_shift
from .errors import AdmissibilityError, ParityError
from .susy import RadialOperator


def _normalize_table(table, kind, value_check):
    out = {}
    for key, value in table.items():
        if isinstance(key, tuple):
            if len(key) != 2:
                raise AdmissibilityError(f"{kind} key must be l or (l, n), got {key!r}")
            lkey = (int(key[0]), int(key[1]))
        else:
            lkey = int(key)
        value_check(key, value)
        out[lkey] = value
    return out


class DefectModel:
    """Defect table keyed by l (asymptotic) or (l, n), plus integer shifts by l."""

    def __init__(self, dimension: int, defects: dict, shifts: dict):
        if not isinstance(dimension, (int, np.integer)) or dimension < 2:
            raise AdmissibilityError(f"dimension must be an integer >= 2, got {dimension!r}")
        self.dimension = int(dimension)
        self.gamma = gamma_shift(self.dimension)

        def check_delta(key, value):
            if not (0.0 <= value < 1.0):
                raise AdmissibilityError(f"defect for {key!r} must lie in [0, 1), got {value!r}")

        def check_shift(key, value):
            if not isinstance(value, (int, np.integer)) or value < 0:
                raise AdmissibilityError(f"shift for {key!r} must be an integer >= 0, got {value!r}")

        self.defect_table = _normalize_table(defects, "defect", check_delta)
        for key, value in shifts.items():
            check_shift(key, value)
        self.integer_shift_table = {int(k): int(v) for k, v in shifts.items()}

    def delta(self, angular: int, principal: int | None = None) -> float:
        """n-specific value when present, else the asymptotic l entry."""
        if principal is not None and (int(angular), int(principal)) in self.defect_table:
            return float(self.defect_table[(int(angular), int(principal))])
        try:
            return float(self.defect_table[int(angular)])
        except KeyError:
            raise AdmissibilityError(f"no defect entry for l={angular}") from None

    def shift(self, angular: int) -> int:
        try:
            return self.integer_shift_table[int(angular)]
        except KeyError:
            raise AdmissibilityError(f"no shift entry for l={angular}") from None

    def state(self, principal: int, angular: int) -> "DefectState":
        return DefectState(self, principal, angular)


def _defect_numbers(model: DefectModel, principal: int, angular: int):
    n, l = int(principal), int(angular)
    if n < 1:
        raise AdmissibilityError(f"principal number must be >= 1, got {principal!r}")
    if l < 0:
        raise AdmissibilityError(f"angular number must be >= 0, got {angular!r}")
    delta = model.delta(l, n)
    shift = model.shift(l)
    if n - l - shift - 1 < 0:
        raise AdmissibilityError(
            f"polynomial degree n-l-i-1 = {n - l - shift - 1} is negative for n={n} l={l} i={shift}"
        )
    n_star = n - delta
    l_star = l + shift - delta
    if not (l_star + model.gamma + 1.0 > 0.0):
        raise AdmissibilityError(
            f"l*+gamma+1 = {l_star + model.gamma + 1.0:g} must be positive (normalizability)"
        )
    if not (n_star + model.gamma > 0.0):
        raise AdmissibilityError(
            f"n*+gamma = {n_star + model.gamma:g} must be positive (bound-state scale)"
        )
    return delta, shift, n_star, l_star


class DefectState:
    """Coulomb-form state with starred quantum numbers from a DefectModel."""

    def __init__(self, model: DefectModel, principal: int, angular: int):
        self.model = model
        self.principal = int(principal)
        self.angular = int(angular)
        self.delta, self.shift, self.n_star, self.l_star = _defect_numbers(
            model, principal, angular
        )

    @property
    def gamma(self) -> float:
        return self.model.gamma

    @cached_property
    def _form(self) -> ExponentialLaguerreForm:
        g = self.gamma
        return ExponentialLaguerreForm(
            scale=self.n_star + g,
            exponent=self.l_star + g + 1.0,
            degree=self.principal - self.angular - self.shift - 1,
            order=2.0 * self.l_star + 2.0 * g + 1.0,
        )

    @property
    def normalization(self) -> float:
        return self._form.norm

    @property
    def energy(self) -> float:
        return -1.0 / (2.0 * (self.n_star + self.gamma) ** 2)

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
        lg = self.l_star + self.gamma
        return RadialOperator(
            coulomb_strength=1.0,
            oscillator_strength=0.0,
            centrifugal=lg * (lg + 1.0),
        )

    def operator_eigenvalue(self) -> float:
        return 0.5 * self.energy


def eval_defect_state(state: DefectState, y):
    return state.value(y)


def rydberg_energy(model: DefectModel, principal: int, angular: int) -> float:
    """E = -1/(2 (n* + gamma)^2) for the model's starred principal number."""
    _, _, n_star, _ = _defect_numbers(model, principal, angular)
    return -1.0 / (2.0 * (n_star + model.gamma) ** 2)


def breaking_potential_coulomb(model: DefectModel, principal: int, angular: int, y):
    """Exact operator difference turning the (n, l) problem into the starred one.

    Centrifugal part [(l*+g)(l*+g+1) - (l+g)(l+g+1)]/y^2 plus the eigenvalue
    bookkeeping constant [(n+g)^2 - (n*+g)^2] / (4 (n+g)^2 (n*+g)^2).
    """
    _, _, n_star, l_star = _defect_numbers(model, principal, angular)
    g = model.gamma
    arr = np.asarray(y, dtype=float)
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise AdmissibilityError("y grid must be strictly positive and finite")
    lg_star = l_star + g
    lg = angular + g
    nu = principal + g
    nu_star = n_star + g
    out = (lg_star * (lg_star + 1.0) - lg * (lg + 1.0)) / arr**2 + (
        nu**2 - nu_star**2
    ) / (4.0 * nu**2 * nu_star**2)
    return float(out) if np.ndim(y) == 0 else out


class AnharmonicModel:
    """Anharmonicity table keyed by L (asymptotic) or (L, N), plus shifts by L."""

    def __init__(self, dimension: int, anharmonicities: dict, shifts: dict):
        if not isinstance(dimension, (int, np.integer)) or dimension < 2:
            raise AdmissibilityError(f"dimension must be an integer >= 2, got {dimension!r}")
        self.dimension = int(dimension)
        self.gamma = gamma_shift(self.dimension)

        def check_delta(key, value):
            if not (value >= 0.0):
                raise AdmissibilityError(
                    f"anharmonicity for {key!r} must be >= 0, got {value!r}"
                )

        def check_shift(key, value):
            if not isinstance(value, (int, np.integer)) or value < 0:
                raise AdmissibilityError(f"shift for {key!r} must be an integer >= 0, got {value!r}")

        self.anharmonicity_table = _normalize_table(anharmonicities, "anharmonicity", check_delta)
        for key, value in shifts.items():
            check_shift(key, value)
        self.integer_shift_table = {int(k): int(v) for k, v in shifts.items()}

    def anharmonicity(self, angular: int, principal: int | None = None) -> float:
        if principal is not None and (int(angular), int(principal)) in self.anharmonicity_table:
            return float(self.anharmonicity_table[(int(angular), int(principal))])
        try:
            return float(self.anharmonicity_table[int(angular)])
        except KeyError:
            raise AdmissibilityError(f"no anharmonicity entry for L={angular}") from None

    def shift(self, angular: int) -> int:
        try:
            return self.integer_shift_table[int(angular)]
        except KeyError:
            raise AdmissibilityError(f"no shift entry for L={angular}") from None

    def state(self, principal: int, angular: int) -> "AnharmonicState":
        return AnharmonicState(self, principal, angular)


def _anharmonic_numbers(model: AnharmonicModel, principal: int, angular: int):
    n, l = int(principal), int(angular)
    if n < 0:
        raise AdmissibilityError(f"principal number must be >= 0, got {principal!r}")
    if not (0 <= l <= n):
        raise AdmissibilityError(f"angular number must satisfy 0 <= L <= N, got L={l} N={n}")
    if (n - l) % 2:
        raise ParityError(f"N - L must be even, got N={n} L={l}")
    delta = model.anharmonicity(l, n)
    shift = model.shift(l)
    degree = (n - l) // 2 - shift
    if degree < 0:
        raise AdmissibilityError(
            f"polynomial degree (N-L)/2 - I = {degree} is negative for N={n} L={l} I={shift}"
        )
    n_star = n - 2.0 * delta
    l_star = l + 2.0 * shift - 2.0 * delta
    if not (l_star + model.gamma + 1.0 > 0.0):
        raise AdmissibilityError(
            f"L*+Gamma+1 = {l_star + model.gamma + 1.0:g} must be positive (normalizability)"
        )
    return delta, shift, n_star, l_star, degree


class AnharmonicState:
    """Oscillator-form state with starred quantum numbers from an AnharmonicModel."""

    def __init__(self, model: AnharmonicModel, principal: int, angular: int):
        self.model = model
        self.principal = int(principal)
        self.angular = int(angular)
        (
            self.anharmonicity,
            self.shift,
            self.n_star,
            self.l_star,
            self.degree,
        ) = _anharmonic_numbers(model, principal, angular)

    @property
    def gamma(self) -> float:
        return self.model.gamma

    @cached_property
    def _form(self) -> GaussianLaguerreForm:
        g = self.gamma
        return GaussianLaguerreForm(
            exponent=self.l_star + g + 1.0,
            degree=self.degree,
            order=self.l_star + g + 0.5,
        )

    @property
    def normalization(self) -> float:
        return self._form.norm

    @property
    def energy(self) -> float:
        return (2.0 * self.n_star + 2.0 * self.gamma + 3.0) / 2.0

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
        lg = self.l_star + self.gamma
        return RadialOperator(
            coulomb_strength=0.0,
            oscillator_strength=1.0,
            centrifugal=lg * (lg + 1.0),
        )

    def operator_eigenvalue(self) -> float:
        return 2.0 * self.energy


def eval_anharmonic_state(state: AnharmonicState, y):
    return state.value(y)


def breaking_potential_oscillator(model: AnharmonicModel, principal: int, angular: int, y):
    """Oscillator-side mirror of the Coulomb breaking potential.

    Centrifugal part [(L*+G)(L*+G+1) - (L+G)(L+G+1)]/Y^2 plus the constant
    2(N - N*) = 4*Delta from the eigenvalue bookkeeping.
    """
    _, _, n_star, l_star, _ = _anharmonic_numbers(model, principal, angular)
    g = model.gamma
    arr = np.asarray(y, dtype=float)
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise AdmissibilityError("Y grid must be strictly positive and finite")
    lg_star = l_star + g
    lg = angular + g
    out = (lg_star * (lg_star + 1.0) - lg * (lg + 1.0)) / arr**2 + 2.0 * (principal - n_star)
    return float(out) if np.ndim(y) == 0 else out


def illustrative_defect_model(dimension: int = 3) -> DefectModel:
    """Synthetic defect table for exercising the interface.

    The numbers are round placeholders shaped like an alkali series (large s
    defect, small p defect, near-zero d defect); they are not measured
    constants and carry no physical authority.
    """
    return DefectModel(
        dimension,
        defects={0: 0.40, 1: 0.05, 2: 0.005, (0, 2): 0.41},
        shifts={0: 1, 1: 0, 2: 0},
    )
