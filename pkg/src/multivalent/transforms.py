"""The Bernardi-type integral transform and the index-shift relation it induces.

    F(z) = alpha / z^(alpha - p) * integral_0^z t^(alpha - p - 1) f(t) dt

integrates exactly on monomials, so F is computed term by term:
``F_n = alpha a_n / (alpha + n - p)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlphaNotConstant, VanishingDenominator
from .operators import MultiplierOperator, apply
from .reports import VerificationReport
from .series import RTOL, TruncatedSeries, max_relative_error, z_derivative

DENOMINATOR_TOL = 1e-9


@dataclass(frozen=True)
class BernardiParams:
    alpha_a: complex
    p: int


def bernardi(f: TruncatedSeries, alpha_a: complex | BernardiParams) -> TruncatedSeries:
    if isinstance(alpha_a, BernardiParams):
        alpha_a = alpha_a.alpha_a
    alpha = complex(alpha_a)
    n = f.powers()
    denom = alpha + n - f.p
    if np.any(np.abs(denom) < DENOMINATOR_TOL):
        bad = n[np.abs(denom) < DENOMINATOR_TOL][0]
        raise VanishingDenominator(f"alpha + n - p vanishes at n = {bad} for alpha = {alpha}")
    return TruncatedSeries(f.p, alpha * f.coeffs / denom)


def bernardi_identity_sides(f: TruncatedSeries, alpha_a: complex) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``alpha f`` against ``(alpha - p) F + z F'``."""
    F = bernardi(f, alpha_a)
    return f.scale(alpha_a), F.scale(alpha_a - f.p) + z_derivative(F)


def theorem5_shift_check(
    op: MultiplierOperator,
    f: TruncatedSeries,
    mu: float = 1.0,
    nu: float = 1.0,
    tol: float = RTOL,
) -> VerificationReport:
    """Check ``L^a f = L^{a+1} F``, ``alpha L^{a+1} f = alpha L^{a+2} F`` and
    ``Omega^a(f) = Omega^{a+1}(F)`` for an operator whose alpha does not
    depend on the index."""
    from .omega import OmegaParams, omega

    if not op.alpha_independent_of_index:
        raise AlphaNotConstant(f"family {op.family} has alpha_a depending on a")
    alpha = op.alpha_a
    F = bernardi(f, alpha)
    up1 = op.shift_index(1)
    up2 = op.shift_index(2)
    shift_err = max_relative_error(apply(op, f), apply(up1, F))
    next_err = max_relative_error(apply(up1, f).scale(alpha), apply(up2, F).scale(up1.alpha_a))
    params = OmegaParams(mu, nu)
    omega_err = max_relative_error(omega(op, params, f), omega(up1, params, F))
    worst = max(shift_err, next_err, omega_err)
    return VerificationReport(
        id=f"shift_relation:{op.family}",
        kind="identity",
        passed=worst <= tol,
        max_error=worst,
        samples_tested=len(f),
        config_echo={"operator": op.descriptor(), "N": f.N, "mu": mu, "nu": nu, "tol": tol},
        details={"shift": shift_err, "next_index": next_err, "omega": omega_err},
    )
