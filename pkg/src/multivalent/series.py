"""Truncated power series with complex coefficients.

A :class:`TruncatedSeries` stores the coefficients ``c_p, ..., c_N`` of

    c_p z^p + c_{p+1} z^{p+1} + ... + c_N z^N

densely, indexed by absolute power.  ``N`` is the order up to which the
coefficients are known exactly; every operation propagates the largest
order it can certify, so no result ever claims more terms than its inputs
determine.
"""

from __future__ import annotations

import math
import numbers
import warnings
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import (
    BasePowerMismatch,
    NotUnitNormalized,
    ParameterError,
    ZeroLeadingCoefficient,
)

DEFAULT_ORDER = 64

# comparison policy for coefficient-wise checks
RTOL = 1e-10
ATOL = 1e-14

# log/pow accept a constant term this close to 1
UNIT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Immutable truncated series ``sum_{n=p}^{N} coeffs[n-p] z^n``."""

    p: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if int(self.p) != self.p or self.p < 0:
            raise ParameterError(f"base power must be a non-negative integer, got {self.p!r}")
        arr = np.array(self.coeffs, dtype=complex).reshape(-1)
        if arr.size == 0:
            raise ParameterError("a series needs at least one coefficient")
        if not np.all(np.isfinite(arr)):
            raise ParameterError("series coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "coeffs", arr)

    @property
    def N(self) -> int:
        return self.p + self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def coefficient(self, n: int) -> complex:
        """Coefficient of ``z**n``; zero below the base power."""
        if n < self.p:
            return 0j
        if n > self.N:
            raise IndexError(f"z^{n} is beyond truncation order {self.N}")
        return complex(self.coeffs[n - self.p])

    def powers(self) -> np.ndarray:
        return np.arange(self.p, self.N + 1)

    def window(self, p: int, N: int) -> np.ndarray:
        """Dense coefficients for powers ``p..N`` (zeros below the base power)."""
        if N > self.N:
            raise IndexError(f"z^{N} is beyond truncation order {self.N}")
        out = np.zeros(N - p + 1, dtype=complex)
        lo = max(p, self.p)
        if lo <= N:
            out[lo - p:] = self.coeffs[lo - self.p:N - self.p + 1]
        return out

    def truncate(self, N: int) -> TruncatedSeries:
        if N < self.p:
            raise ParameterError(f"cannot truncate below base power {self.p}")
        if N > self.N:
            raise ParameterError(f"cannot extend order {self.N} to {N}")
        return TruncatedSeries(self.p, self.coeffs[: N - self.p + 1])

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``z**k``; negative ``k`` divides by a power of z."""
        if self.p + k < 0:
            raise ParameterError(f"z^{k} shift would give a negative base power")
        return TruncatedSeries(self.p + k, self.coeffs)

    def scale(self, c: complex) -> TruncatedSeries:
        return TruncatedSeries(self.p, self.coeffs * c)

    @property
    def is_normalized(self) -> bool:
        """True when the leading coefficient is exactly 1 (class A_p form)."""
        return self.coeffs[0] == 1

    def __add__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return add(self, other)
        if isinstance(other, numbers.Number):
            return add(self, constant(other, self.N))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return self.scale(-1)

    def __sub__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, (TruncatedSeries, numbers.Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return cauchy_mul(self, other)
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return divide(self, other)
        if isinstance(other, numbers.Number):
            return self.scale(1 / other)
        return NotImplemented

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.4g}" for c in self.coeffs[:4])
        more = ", ..." if len(self) > 4 else ""
        return f"TruncatedSeries(p={self.p}, N={self.N}, [{head}{more}])"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "N": self.N,
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, payload: dict) -> TruncatedSeries:
        if not isinstance(payload, dict) or "coeffs" not in payload:
            raise ParameterError("series JSON must be an object with 'coeffs'")
        p = payload.get("p", 0)
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParameterError("series 'p' must be an integer")
        coeffs = [parse_complex(c) for c in payload["coeffs"]]
        series = cls(p, coeffs)
        if "N" in payload:
            N = payload["N"]
            if not isinstance(N, int) or N < p:
                raise ParameterError("series 'N' must be an integer >= p")
            if N < series.N:
                series = series.truncate(N)
            elif N > series.N:
                series = TruncatedSeries(p, np.concatenate([series.coeffs, np.zeros(N - series.N)]))
        return series


def parse_complex(value: Any) -> complex:
    """Accept ``x``, ``[re, im]`` or ``{"re":..,"im":..}``."""
    if isinstance(value, bool):
        raise ParameterError(f"not a number: {value!r}")
    if isinstance(value, numbers.Number):
        out = complex(value)
    elif isinstance(value, (list, tuple)) and len(value) == 2:
        out = complex(float(value[0]), float(value[1]))
    elif isinstance(value, dict) and "re" in value:
        out = complex(float(value["re"]), float(value.get("im", 0.0)))
    else:
        raise ParameterError(f"cannot read a complex number from {value!r}")
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise ParameterError("complex values must be finite")
    return out


def series(coeffs: Iterable[complex], p: int = 0, N: int | None = None) -> TruncatedSeries:
    """Build a series from leading coefficients, zero-padded to order ``N``."""
    arr = np.asarray(list(coeffs), dtype=complex)
    if N is not None:
        size = N - p + 1
        if size < arr.size:
            arr = arr[:size]
        else:
            arr = np.concatenate([arr, np.zeros(size - arr.size, dtype=complex)])
    return TruncatedSeries(p, arr)


def monomial(p: int, N: int = DEFAULT_ORDER, c: complex = 1.0) -> TruncatedSeries:
    return series([c], p=p, N=N)


def constant(c: complex, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    return series([c], p=0, N=N)


def zero(p: int = 0, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    return series([0.0], p=p, N=N)


def geometric(N: int = DEFAULT_ORDER, p: int = 0, ratio: complex = 1.0) -> TruncatedSeries:
    """``z^p / (1 - ratio z)`` truncated at order ``N``."""
    return TruncatedSeries(p, ratio ** np.arange(N - p + 1, dtype=complex))


def binomial(eta: float, N: int = DEFAULT_ORDER, sign: float = 1.0) -> TruncatedSeries:
    """``(1 + sign*z)**eta`` from the generalized binomial coefficients."""
    out = np.empty(N + 1, dtype=complex)
    out[0] = 1.0
    for k in range(1, N + 1):
        out[k] = out[k - 1] * (eta - k + 1) / k * sign
    return TruncatedSeries(0, out)


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    p = min(f.p, g.p)
    N = min(f.N, g.N)
    if N < p:
        raise ParameterError("series share no common coefficient range")
    return TruncatedSeries(p, f.window(p, N) + g.window(p, N))


def cauchy_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    p = f.p + g.p
    N = min(f.N + g.p, g.N + f.p)
    prod = np.convolve(f.coeffs, g.coeffs)[: N - p + 1]
    return TruncatedSeries(p, prod)


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise (convolution) product of two series of equal base power."""
    if f.p != g.p:
        raise BasePowerMismatch(f"hadamard needs equal base powers, got {f.p} and {g.p}")
    N = min(f.N, g.N)
    n = N - f.p + 1
    return TruncatedSeries(f.p, f.coeffs[:n] * g.coeffs[:n])


def z_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """``z f'(z)``."""
    return TruncatedSeries(f.p, f.coeffs * f.powers())


def _reciprocal_solve(a: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Solve ``h * g = a`` (Cauchy product) for ``h``, ``len(h) == len(a)``."""
    n = a.size
    h = np.zeros(n, dtype=complex)
    g0 = g[0]
    for k in range(n):
        m = min(k, g.size - 1)
        acc = a[k]
        if m:
            acc -= np.dot(g[1:m + 1], h[k - 1::-1][:m])
        h[k] = acc / g0
    return h


def divide(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Series ``h`` with ``cauchy_mul(h, g) == f`` to truncation order."""
    g0 = g.coeffs[0]
    if g0 == 0:
        raise ZeroLeadingCoefficient(f"divisor has zero coefficient at its base power z^{g.p}")
    p = f.p - g.p
    if p < 0:
        raise ParameterError(f"quotient would start at z^{p}; Laurent series are not supported")
    N = min(f.N, g.N + f.p - g.p) - g.p
    h = _reciprocal_solve(f.coeffs[: N - p + 1], g.coeffs)
    return TruncatedSeries(p, h)


def _check_unit(u: TruncatedSeries) -> None:
    if u.p != 0 or abs(u.coeffs[0] - 1) > UNIT_TOL:
        raise NotUnitNormalized(
            f"expected a series 1 + c_1 z + ..., got base power {u.p} and constant term {u.coefficient(u.p)}"
        )


def log_unit(u: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1."""
    _check_unit(u)
    c = u.coeffs / u.coeffs[0]
    n = c.size
    out = np.zeros(n, dtype=complex)
    k = np.arange(n)
    # u * (z log u)' = z u'
    for m in range(1, n):
        acc = m * c[m]
        if m > 1:
            acc -= np.dot(k[1:m] * out[1:m], c[m - 1:0:-1])
        out[m] = acc / m
    return TruncatedSeries(0, out)


def exp_unit(g: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with base power 0."""
    if g.p != 0:
        g = add(g, zero(0, g.N))
    n = len(g)
    k = np.arange(n)
    kg = k * g.coeffs
    out = np.zeros(n, dtype=complex)
    out[0] = np.exp(g.coeffs[0])
    for m in range(1, n):
        out[m] = np.dot(kg[1:m + 1], out[m - 1::-1]) / m
    return TruncatedSeries(0, out)


def pow_real(u: TruncatedSeries, t: float) -> TruncatedSeries:
    """Principal power ``u**t`` of a series with constant term 1."""
    _check_unit(u)
    if isinstance(t, complex) and t.imag != 0:
        raise ParameterError("pow_real takes a real exponent")
    t = float(t.real if isinstance(t, complex) else t)
    if t == 0:
        return constant(1.0, u.N)
    if t == 1:
        return u
    return exp_unit(log_unit(u).scale(t))


def evaluate(f: TruncatedSeries, z):
    """Horner evaluation of the truncated polynomial at scalar or array ``z``."""
    z_arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(z_arr) >= 1):
        warnings.warn("evaluating a truncated series on or outside the unit circle", RuntimeWarning, stacklevel=2)
    acc = np.zeros_like(z_arr)
    for c in f.coeffs[::-1]:
        acc = acc * z_arr + c
    out = acc * z_arr ** f.p if f.p else acc
    if np.ndim(z) == 0:
        return complex(out)
    return out


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial ``a (a+1) ... (a+n-1)`` with ``(a)_0 = 1``."""
    if n < 0 or int(n) != n:
        raise ParameterError(f"Pochhammer index must be a non-negative integer, got {n!r}")
    out = 1.0 + 0j if isinstance(a, complex) else 1.0
    for k in range(int(n)):
        out *= a + k
    return out


def pochhammer_ratios(a: complex, n_max: int) -> np.ndarray:
    """``[(a)_0, (a)_1, ..., (a)_{n_max}]`` by cumulative product."""
    steps = np.concatenate([[1.0 + 0j], a + np.arange(n_max, dtype=complex)])
    return np.cumprod(steps)


def coefficient_errors(x: TruncatedSeries, y: TruncatedSeries, atol: float = ATOL) -> np.ndarray:
    """Per-coefficient relative error of ``x`` against ``y``.

    Differences at or below ``atol`` count as zero, so exact-zero
    coefficients reproduced up to rounding do not register.
    """
    p = min(x.p, y.p)
    N = min(x.N, y.N)
    a = x.window(p, N)
    b = y.window(p, N)
    diff = np.abs(a - b)
    scale = np.maximum(np.abs(a), np.abs(b))
    err = np.zeros(diff.size)
    big = diff > atol
    err[big] = diff[big] / scale[big]
    return err


def max_relative_error(x: TruncatedSeries, y: TruncatedSeries, atol: float = ATOL) -> float:
    return float(np.max(coefficient_errors(x, y, atol)))


def allclose(x: TruncatedSeries, y: TruncatedSeries, rtol: float = RTOL, atol: float = ATOL) -> bool:
    return max_relative_error(x, y, atol) <= rtol


def as_array(values: Sequence[complex]) -> np.ndarray:
    return np.asarray(values, dtype=complex)
