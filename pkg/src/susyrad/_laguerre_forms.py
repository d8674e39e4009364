"""Internal radial waveform evaluators shared by the state families.

Both families are a power times a decaying exponential times a Sonine-Laguerre
polynomial; derivatives up to third order come from the product rule with the
polynomial derivative identity, never from finite differences.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .specfun import SonineLaguerre, eval_sonine_laguerre


def _poly_derivative_chain(degree, order):
    """L, L', L'', L''' as SonineLaguerre cards (None once the degree runs out)."""
    chain = [SonineLaguerre(degree, order)]
    for j in range(1, 4):
        if degree - j < 0:
            chain.append(None)
        else:
            chain.append(SonineLaguerre(degree - j, order + j))
    return chain


def _poly_values(chain, t, j):
    # d^j/dt^j L_k^(a)(t) = (-1)^j L_{k-j}^(a+j)(t)
    card = chain[j]
    if card is None:
        return np.zeros_like(t)
    val = eval_sonine_laguerre(card, t)
    return -val if j % 2 else val


def _check_positive_argument(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("radial coordinate must be finite")
    if np.any(arr <= 0.0):
        raise DomainError("radial coordinate must be positive")
    return arr


def _triple_product_derivatives(u, w, z, order):
    """Derivatives of u*w*z given per-factor derivative stacks u[j], w[j], z[j]."""
    if order == 0:
        return u[0] * w[0] * z[0]
    if order == 1:
        return u[1] * w[0] * z[0] + u[0] * w[1] * z[0] + u[0] * w[0] * z[1]
    if order == 2:
        return (
            u[2] * w[0] * z[0]
            + u[0] * w[2] * z[0]
            + u[0] * w[0] * z[2]
            + 2.0 * (u[1] * w[1] * z[0] + u[1] * w[0] * z[1] + u[0] * w[1] * z[1])
        )
    return (
        u[3] * w[0] * z[0]
        + u[0] * w[3] * z[0]
        + u[0] * w[0] * z[3]
        + 3.0 * (u[2] * w[1] * z[0] + u[2] * w[0] * z[1])
        + 3.0 * (u[1] * w[2] * z[0] + u[0] * w[2] * z[1])
        + 3.0 * (u[1] * w[0] * z[2] + u[0] * w[1] * z[2])
        + 6.0 * u[1] * w[1] * z[1]
    )


def _power_stack(x, exponent):
    u0 = np.power(x, exponent)
    u1 = exponent * np.power(x, exponent - 1.0)
    u2 = exponent * (exponent - 1.0) * np.power(x, exponent - 2.0)
    u3 = exponent * (exponent - 1.0) * (exponent - 2.0) * np.power(x, exponent - 3.0)
    return (u0, u1, u2, u3)


class ExponentialLaguerreForm:
    """norm * x**exponent * exp(-x/(2*scale)) * L_degree^(order)(x/scale)."""

    def __init__(self, scale, exponent, degree, order):
        if not (scale > 0.0):
            raise DomainError(f"exponential scale must be positive, got {scale!r}")
        if not (exponent > 0.0):
            raise DomainError(f"power exponent must be positive, got {exponent!r}")
        self.scale = float(scale)
        self.exponent = float(exponent)
        self.degree = int(degree)
        self.order = float(order)
        self._chain = _poly_derivative_chain(self.degree, self.order)
        # unit-L2-norm constant; requires 2*exponent == order + 1, which every
        # state family in this package satisfies by construction
        if not math.isclose(2.0 * self.exponent, self.order + 1.0, rel_tol=0.0, abs_tol=1e-12):
            raise DomainError("form violates the 2q = order + 1 normalization relation")
        log_sq = (
            (self.order + 2.0) * math.log(self.scale)
            + math.lgamma(self.degree + self.order + 1.0)
            + math.log(2.0 * self.degree + self.order + 1.0)
            - math.lgamma(self.degree + 1.0)
        )
        self.norm = math.exp(-0.5 * log_sq)

    def _derivative(self, x, order):
        arr = _check_positive_argument(x)
        u = _power_stack(arr, self.exponent)
        w0 = np.exp(-arr / (2.0 * self.scale))
        rate = -1.0 / (2.0 * self.scale)
        w = (w0, rate * w0, rate * rate * w0, rate**3 * w0)
        t = arr / self.scale
        p = [_poly_values(self._chain, t, j) for j in range(4)]
        inv = 1.0 / self.scale
        z = (p[0], p[1] * inv, p[2] * inv * inv, p[3] * inv**3)
        out = self.norm * _triple_product_derivatives(u, w, z, order)
        return float(out) if np.ndim(x) == 0 else out

    def value(self, x):
        return self._derivative(x, 0)

    def derivative(self, x):
        return self._derivative(x, 1)

    def second_derivative(self, x):
        return self._derivative(x, 2)

    def third_derivative(self, x):
        return self._derivative(x, 3)


class GaussianLaguerreForm:
    """norm * x**exponent * exp(-x**2/2) * L_degree^(order)(x**2)."""

    def __init__(self, exponent, degree, order):
        if not (exponent > 0.0):
            raise DomainError(f"power exponent must be positive, got {exponent!r}")
        self.exponent = float(exponent)
        self.degree = int(degree)
        self.order = float(order)
        self._chain = _poly_derivative_chain(self.degree, self.order)
        if not math.isclose(self.exponent, self.order + 0.5, rel_tol=0.0, abs_tol=1e-12):
            raise DomainError("form violates the q = order + 1/2 normalization relation")
        log_sq = (
            math.lgamma(self.degree + self.order + 1.0)
            - math.log(2.0)
            - math.lgamma(self.degree + 1.0)
        )
        self.norm = math.exp(-0.5 * log_sq)

    def _derivative(self, x, order):
        arr = _check_positive_argument(x)
        u = _power_stack(arr, self.exponent)
        w0 = np.exp(-0.5 * arr * arr)
        w = (w0, -arr * w0, (arr * arr - 1.0) * w0, (3.0 * arr - arr**3) * w0)
        t = arr * arr
        p = [_poly_values(self._chain, t, j) for j in range(4)]
        z = (
            p[0],
            2.0 * arr * p[1],
            2.0 * p[1] + 4.0 * t * p[2],
            12.0 * arr * p[2] + 8.0 * arr**3 * p[3],
        )
        out = self.norm * _triple_product_derivatives(u, w, z, order)
        return float(out) if np.ndim(x) == 0 else out

    def value(self, x):
        return self._derivative(x, 0)

    def derivative(self, x):
        return self._derivative(x, 1)

    def second_derivative(self, x):
        return self._derivative(x, 2)

    def third_derivative(self, x):
        return self._derivative(x, 3)
