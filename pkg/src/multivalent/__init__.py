"""Multiplier operators on p-valent power series and differential subordination checks."""

from __future__ import annotations

from .errors import MultivalentError, NumericalError, ParameterError
from .omega import DominantSpec, OmegaParams, chi_theorem1, chi_theorem2, omega, omega_ratio, phi_theorem1, psi_theorem2
from .operators import (
    HypergeometricParams,
    MultiplierOperator,
    apply,
    dziok_srivastava,
    from_descriptor,
    identity_operator,
    j_kappa,
    multiplier_transform,
    q_liu,
    recurrence_check,
    shift_index,
    t_kappa,
)
from .regions import (
    Disk,
    HalfPlane,
    JanowskiDisk,
    Lemniscate,
    ParabolaExterior,
    ReciprocalHalfPlane,
    SamplingGrid,
    Sector,
    boundary_curve,
    class_check,
    contains,
    min_arg_bound,
    min_boundary_modulus_squared_k,
    parabola_threshold,
    subordinate_to,
)
from .reports import VerificationReport
from .series import (
    TruncatedSeries,
    add,
    cauchy_mul,
    divide,
    evaluate,
    exp_unit,
    hadamard,
    log_unit,
    pochhammer,
    pow_real,
    series,
    z_derivative,
)
from .transforms import bernardi, theorem5_shift_check
from .verify import random_function, reproduce_constants, run_identity_suite, run_implication_trial

__version__ = "0.1.0"
