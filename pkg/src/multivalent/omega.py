"""The functional Omega and the differential expressions built from it.

For an operator family ``L`` with index ``a``

    Omega^a_{mu,nu}(f) = (L^{a+1} f / z^p)^mu (z^p / L^a f)^nu

with principal powers.  ``phi_theorem1`` and ``psi_theorem2`` compose the
defining products directly; the ``*_sides`` helpers give the
``(c q + z q') `` forms so the two constructions can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    InvalidParameter,
    NotUnitNormalized,
    ParameterError,
    UnsupportedDominant,
    ZeroAlpha,
)
from .operators import MultiplierOperator, apply
from .regions import DominantRegion, HalfPlane, Lemniscate, Sector, janowski_region
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    binomial,
    divide,
    pow_real,
    series,
    z_derivative,
)
from .transforms import bernardi

CONSTANT_TOL = 1e-10
PSI_VARIANTS = ("printed", "identity_consistent")


@dataclass(frozen=True)
class OmegaParams:
    mu: float
    nu: float
    a: complex | None = None

    def __post_init__(self):
        for name in ("mu", "nu"):
            v = getattr(self, name)
            if isinstance(v, complex) or not np.isfinite(v):
                raise InvalidParameter(f"{name} must be a finite real number, got {v!r}")
        if self.mu == 0 and self.nu == 0:
            raise InvalidParameter("mu and nu cannot both be zero")

    def to_json(self) -> dict:
        d = {"mu": float(self.mu), "nu": float(self.nu)}
        if self.a is not None:
            d["a"] = self.a
        return d


def _at_index(op: MultiplierOperator, params: OmegaParams) -> MultiplierOperator:
    if params.a is None:
        return op
    return op.with_index(params.a)


def _check_constant(s: TruncatedSeries, expected: complex, what: str) -> TruncatedSeries:
    got = s.coefficient(0)
    if abs(got - expected) > CONSTANT_TOL * max(1.0, abs(expected)):
        raise NotUnitNormalized(f"{what}: constant term {got} differs from expected {expected}")
    return s


def _normalized(op: MultiplierOperator, f: TruncatedSeries) -> TruncatedSeries:
    """``L f / z^p``, required to start with 1."""
    g = apply(op, f).shift(-op.p)
    if abs(g.coeffs[0] - 1) > CONSTANT_TOL:
        raise NotUnitNormalized(f"L f / z^p has constant term {g.coeffs[0]}; normalize f first")
    return g


def omega(op: MultiplierOperator, params: OmegaParams, f: TruncatedSeries) -> TruncatedSeries:
    op = _at_index(op, params)
    upper = _normalized(op.shift_index(1), f)
    lower = _normalized(op, f)
    return pow_real(upper, params.mu) * pow_real(lower, -params.nu)


def omega_ratio(op: MultiplierOperator, params: OmegaParams, f: TruncatedSeries, F: TruncatedSeries) -> TruncatedSeries:
    """``Omega(f) / Omega(F)``."""
    return divide(omega(op, params, f), omega(op, params, F))


def _alphas(op: MultiplierOperator) -> tuple[complex, complex]:
    return op.alpha_a, op.shift_index(1).alpha_a


def phi_theorem1(op: MultiplierOperator, params: OmegaParams, f: TruncatedSeries) -> TruncatedSeries:
    """``Omega^a(f) [mu Omega^{a+1}_{1,1}(f) - (alpha_a nu / alpha_{a+1}) Omega^a_{1,1}(f)]``."""
    op = _at_index(op, params)
    alpha, alpha1 = _alphas(op)
    if alpha1 == 0:
        raise ZeroAlpha("alpha_{a+1} vanishes")
    one_one = OmegaParams(1.0, 1.0)
    bracket = omega(op.shift_index(1), one_one, f).scale(params.mu) - omega(op, one_one, f).scale(
        alpha * params.nu / alpha1
    )
    out = omega(op, OmegaParams(params.mu, params.nu), f) * bracket
    return _check_constant(out, params.mu - alpha * params.nu / alpha1, "Phi")


def log_derivative_sides(op: MultiplierOperator, params: OmegaParams, f: TruncatedSeries):
    """``z Omega'/Omega`` against its expansion through the logarithmic derivatives."""
    op = _at_index(op, params)
    q = omega(op, OmegaParams(params.mu, params.nu), f)
    lhs = divide(z_derivative(q), q)
    upper = apply(op.shift_index(1), f)
    lower = apply(op, f)
    rhs = (
        divide(z_derivative(upper), upper).scale(params.mu)
        - divide(z_derivative(lower), lower).scale(params.nu)
        + op.p * (params.nu - params.mu)
    )
    return lhs, rhs


def phi_identity_sides(op: MultiplierOperator, params: OmegaParams, f: TruncatedSeries):
    """Phi against ``((alpha_{a+1} mu - alpha_a nu) q + z q') / alpha_{a+1}``."""
    op = _at_index(op, params)
    alpha, alpha1 = _alphas(op)
    phi = phi_theorem1(op, OmegaParams(params.mu, params.nu), f)
    q = omega(op, OmegaParams(params.mu, params.nu), f)
    rhs = (q.scale(alpha1 * params.mu - alpha * params.nu) + z_derivative(q)).scale(1 / alpha1)
    return phi, rhs


def _psi_alpha(op: MultiplierOperator, variant: str) -> complex:
    if variant not in PSI_VARIANTS:
        raise ParameterError(f"unknown variant {variant!r}; expected one of {PSI_VARIANTS}")
    alpha, alpha1 = _alphas(op)
    return alpha1 if variant == "printed" else alpha


def psi_theorem2(
    op: MultiplierOperator,
    params: OmegaParams,
    f: TruncatedSeries,
    F: TruncatedSeries | None = None,
    variant: str = "printed",
) -> TruncatedSeries:
    """``Omega^a(F) [mu alpha' Omega_{1,0}(f,F) - nu alpha_a Omega_{0,-1}(f,F)]``.

    ``alpha'`` is ``alpha_{a+1}`` for ``variant="printed"`` and ``alpha_a``
    for ``"identity_consistent"``; the two coincide when alpha does not
    depend on the index.  ``F`` defaults to the Bernardi transform of f.
    """
    op = _at_index(op, params)
    alpha = op.alpha_a
    lead = _psi_alpha(op, variant)
    if F is None:
        F = bernardi(f, alpha)
    upper = omega_ratio(op, OmegaParams(1.0, 0.0), f, F)
    lower = omega_ratio(op, OmegaParams(0.0, -1.0), f, F)
    bracket = upper.scale(params.mu * lead) - lower.scale(params.nu * alpha)
    out = omega(op, OmegaParams(params.mu, params.nu), F) * bracket
    return _check_constant(out, params.mu * lead - params.nu * alpha, "Psi")


def psi_identity_sides(
    op: MultiplierOperator,
    params: OmegaParams,
    f: TruncatedSeries,
    variant: str = "printed",
):
    """Psi against ``(mu alpha' - nu alpha_a) q + z q'`` with ``q = Omega^a(F)``."""
    op = _at_index(op, params)
    alpha = op.alpha_a
    lead = _psi_alpha(op, variant)
    F = bernardi(f, alpha)
    psi = psi_theorem2(op, OmegaParams(params.mu, params.nu), f, F, variant)
    q = omega(op, OmegaParams(params.mu, params.nu), F)
    rhs = q.scale(params.mu * lead - params.nu * alpha) + z_derivative(q)
    return psi, rhs


DOMINANT_KINDS = ("janowski", "power_sector", "sqrt_shift", "half_plane_map")


@dataclass(frozen=True)
class DominantSpec:
    """A convex univalent dominant psi with psi(0) = 1.

    ``params``: ``A, B`` for janowski, ``eta`` for power_sector and
    ``alpha`` for half_plane_map, where psi = (1 + (1 - 2 alpha) z)/(1 - z).
    """

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in DOMINANT_KINDS:
            raise UnsupportedDominant(f"unknown dominant {self.kind!r}; expected one of {DOMINANT_KINDS}")
        params = {k: float(v) for k, v in self.params.items()}
        object.__setattr__(self, "params", params)
        if self.kind == "janowski":
            A, B = params.get("A"), params.get("B")
            if A is None or B is None or not -1 <= B < A <= 1:
                raise InvalidParameter(f"janowski dominant needs -1 <= B < A <= 1, got {params}")
        elif self.kind == "power_sector":
            eta = params.get("eta")
            if eta is None or not 0 < eta <= 1:
                raise InvalidParameter(f"power_sector needs 0 < eta <= 1, got {params}")
        elif self.kind == "half_plane_map":
            a = params.get("alpha")
            if a is None or not 0 <= a < 1:
                raise InvalidParameter(f"half_plane_map needs 0 <= alpha < 1, got {params}")

    @classmethod
    def from_json(cls, d: dict) -> DominantSpec:
        if not isinstance(d, dict) or "kind" not in d:
            raise ParameterError("dominant JSON needs a 'kind'")
        return cls(d["kind"], {k: v for k, v in d.items() if k != "kind"})

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.params}

    def region(self) -> DominantRegion:
        if self.kind == "janowski":
            return janowski_region(self.params["A"], self.params["B"])
        if self.kind == "power_sector":
            return Sector(self.params["eta"])
        if self.kind == "sqrt_shift":
            return Lemniscate(0.5)
        return HalfPlane(self.params["alpha"])

    def series(self, N: int = DEFAULT_ORDER) -> TruncatedSeries:
        if self.kind == "janowski":
            A, B = self.params["A"], self.params["B"]
            return divide(series([1, A], N=N), series([1, B], N=N))
        if self.kind == "power_sector":
            eta = self.params["eta"]
            return binomial(eta, N) * binomial(-eta, N, sign=-1.0)
        if self.kind == "sqrt_shift":
            return binomial(0.5, N)
        a = 1 - 2 * self.params["alpha"]
        return divide(series([1, a], N=N), series([1, -1], N=N))

    def values(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.kind == "janowski":
            return (1 + self.params["A"] * z) / (1 + self.params["B"] * z)
        if self.kind == "power_sector":
            return ((1 + z) / (1 - z)) ** self.params["eta"]
        if self.kind == "sqrt_shift":
            return np.sqrt(1 + z)
        return (1 + (1 - 2 * self.params["alpha"]) * z) / (1 - z)

    def z_derivative_values(self, z) -> np.ndarray:
        """``z psi'(z)`` in closed form."""
        z = np.asarray(z, dtype=complex)
        if self.kind == "janowski":
            A, B = self.params["A"], self.params["B"]
            return (A - B) * z / (1 + B * z) ** 2
        if self.kind == "power_sector":
            eta = self.params["eta"]
            return 2 * eta * z / (1 - z**2) * ((1 + z) / (1 - z)) ** eta
        if self.kind == "sqrt_shift":
            return z / (2 * np.sqrt(1 + z))
        return 2 * (1 - self.params["alpha"]) * z / (1 - z) ** 2


def chi_coefficients_theorem1(alpha_a: complex, alpha_a1: complex, params: OmegaParams) -> tuple[complex, complex]:
    """``(b, c)`` with ``chi = b psi + c z psi'``."""
    if alpha_a1 == 0:
        raise ZeroAlpha("alpha_{a+1} vanishes")
    return (alpha_a1 * params.mu - alpha_a * params.nu) / alpha_a1, 1 / alpha_a1


def chi_coefficients_theorem2(
    alpha_a: complex, alpha_a1: complex, params: OmegaParams, variant: str = "printed"
) -> tuple[complex, complex]:
    if variant not in PSI_VARIANTS:
        raise ParameterError(f"unknown variant {variant!r}; expected one of {PSI_VARIANTS}")
    lead = alpha_a1 if variant == "printed" else alpha_a
    return params.mu * lead - params.nu * alpha_a, 1.0


def _chi_series(dominant: DominantSpec, b: complex, c: complex, N: int) -> TruncatedSeries:
    psi = dominant.series(N)
    return psi.scale(b) + z_derivative(psi).scale(c)


def chi_theorem1(
    dominant: DominantSpec, alpha_a: complex, alpha_a1: complex, params: OmegaParams, N: int = DEFAULT_ORDER
) -> TruncatedSeries:
    """``((alpha_{a+1} mu - alpha_a nu) psi + z psi') / alpha_{a+1}``."""
    b, c = chi_coefficients_theorem1(alpha_a, alpha_a1, params)
    return _chi_series(dominant, b, c, N)


def chi_theorem2(
    dominant: DominantSpec,
    alpha_a: complex,
    alpha_a1: complex,
    params: OmegaParams,
    N: int = DEFAULT_ORDER,
    variant: str = "printed",
) -> TruncatedSeries:
    """``(mu alpha_{a+1} - nu alpha_a) psi + z psi'`` (or alpha_a in both slots)."""
    b, c = chi_coefficients_theorem2(alpha_a, alpha_a1, params, variant)
    return _chi_series(dominant, b, c, N)


def chi_values(dominant: DominantSpec, b: complex, c: complex) -> Callable[[np.ndarray], np.ndarray]:
    """Closed-form ``z -> b psi(z) + c z psi'(z)``."""
    return lambda z: b * dominant.values(z) + c * dominant.z_derivative_values(z)
