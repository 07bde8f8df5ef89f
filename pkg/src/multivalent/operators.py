"""Linear operators on p-valent series as diagonal coefficient multipliers.

Every family here satisfies the common recurrence

    z (L^a f)' = alpha_a L^{a+1} f - (alpha_a - p) L^a f

once its index is oriented so that ``a -> a+1`` is the step the family's
own identity raises to.  For the Dziok-Srivastava family H and the
multiplier transform I this is the natural parameter; J, T and Q lower their
natural parameter, so their index is stored negated:

    H: a = alpha_1     I: a = r     J: a = -alpha_1     T: a = -r     Q: a = -alpha
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .errors import (
    BasePowerMismatch,
    InvalidBeta,
    InvalidLambda,
    InvalidParameter,
    ParameterError,
    ZeroAlpha,
    ZeroAlphaPochhammer,
)
from .reports import VerificationReport
from .series import (
    RTOL,
    TruncatedSeries,
    max_relative_error,
    parse_complex,
    z_derivative,
)

POLE_TOL = 1e-12


def _near_nonpositive_integer(x: complex, tol: float = POLE_TOL) -> bool:
    if abs(x.imag) > tol or x.real > tol:
        return False
    return abs(x.real - round(x.real)) <= tol


def _step_products(values, n_steps: int) -> np.ndarray:
    """Rows of ``values[i] + k`` for ``k = 0..n_steps-1``, multiplied over i."""
    k = np.arange(n_steps, dtype=complex)
    out = np.ones(n_steps, dtype=complex)
    for v in values:
        out *= v + k
    return out


def _pochhammer_sequence(num, den, n_max: int, factorial: bool) -> np.ndarray:
    """``prod (num_i)_k / prod (den_j)_k [/ k!]`` for ``k = 0..n_max``."""
    ratio = _step_products(num, n_max) / _step_products(den, n_max)
    if factorial:
        ratio = ratio / np.arange(1, n_max + 1)
    return np.concatenate([[1.0 + 0j], np.cumprod(ratio)])


def _binomial_weights(kappa: float, p: int, n_max: int) -> np.ndarray:
    """Coefficients of ``(1 - z)^-(kappa + p - 1)``: ``(kappa+p-1)_k / k!``."""
    return _pochhammer_sequence([kappa + p - 1], [], n_max, factorial=True)


@dataclass(frozen=True)
class HypergeometricParams:
    """Numerator and denominator parameters of ``lFm``."""

    alphas: tuple
    betas: tuple = ()

    def __post_init__(self) -> None:
        alphas = tuple(complex(a) for a in self.alphas)
        betas = tuple(complex(b) for b in self.betas)
        if not alphas:
            raise InvalidParameter("at least one numerator parameter alpha_1 is required")
        if len(alphas) > len(betas) + 1:
            raise InvalidParameter(f"need l <= m + 1, got l={len(alphas)}, m={len(betas)}")
        for b in betas:
            if _near_nonpositive_integer(b):
                raise InvalidBeta(f"beta = {b} is a non-positive integer")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "betas", betas)

    def with_alpha1(self, alpha1: complex) -> HypergeometricParams:
        return HypergeometricParams((complex(alpha1),) + self.alphas[1:], self.betas)

    def to_json(self) -> dict:
        return {"alphas": [_num(a) for a in self.alphas], "betas": [_num(b) for b in self.betas]}


def _num(x: complex):
    x = complex(x)
    return x.real if x.imag == 0 else [x.real, x.imag]


@dataclass(frozen=True)
class MultiplierOperator:
    """Base class: ``apply`` multiplies coefficient ``a_n`` by ``multipliers[n-p]``."""

    p: int

    family: ClassVar[str] = "?"
    alpha_independent_of_index: ClassVar[bool] = False

    def __post_init__(self) -> None:
        if int(self.p) != self.p or self.p < 0:
            raise InvalidParameter(f"valence p must be a non-negative integer, got {self.p!r}")
        self._check_poles()

    def _check_poles(self) -> None:
        pass

    @property
    def index(self) -> complex:
        raise NotImplementedError

    @property
    def alpha_a(self) -> complex:
        raise NotImplementedError

    def with_index(self, a: complex) -> MultiplierOperator:
        raise NotImplementedError

    def shift_index(self, delta: int) -> MultiplierOperator:
        if int(delta) != delta:
            raise InvalidParameter("index shifts are integers")
        if delta == 0:
            return self
        return self.with_index(self.index + delta)

    def multipliers(self, N: int) -> np.ndarray:
        """Multipliers for powers ``p..N``."""
        raise NotImplementedError

    def multiplier(self, n: int) -> complex:
        if n < self.p:
            raise InvalidParameter(f"multipliers start at n = p = {self.p}")
        return complex(self.multipliers(n)[n - self.p])

    def kernel(self, N: int) -> TruncatedSeries:
        """The series whose Hadamard product with f gives ``L f``."""
        return TruncatedSeries(self.p, self.multipliers(N))

    def params_json(self) -> dict:
        raise NotImplementedError

    def descriptor(self) -> dict:
        d = {"family": self.family, "p": self.p, "params": self.params_json()}
        variant = getattr(self, "variant", None)
        if variant is not None:
            d["variant"] = variant
        return d


@dataclass(frozen=True)
class DziokSrivastava(MultiplierOperator):
    hyper: HypergeometricParams = HypergeometricParams((1.0,))

    family: ClassVar[str] = "H"

    @property
    def index(self) -> complex:
        return self.hyper.alphas[0]

    @property
    def alpha_a(self) -> complex:
        return self.hyper.alphas[0]

    def with_index(self, a: complex) -> DziokSrivastava:
        return dataclasses.replace(self, hyper=self.hyper.with_alpha1(a))

    def multipliers(self, N: int) -> np.ndarray:
        return _pochhammer_sequence(self.hyper.alphas, self.hyper.betas, N - self.p, factorial=True)

    def params_json(self) -> dict:
        return self.hyper.to_json()


@dataclass(frozen=True)
class MultiplierTransform(MultiplierOperator):
    r: int = 0
    lam: complex = 0.0

    family: ClassVar[str] = "I"
    alpha_independent_of_index: ClassVar[bool] = True

    def _check_poles(self) -> None:
        object.__setattr__(self, "lam", complex(self.lam))
        if int(self.r) != self.r:
            raise InvalidParameter(f"r must be an integer, got {self.r!r}")
        object.__setattr__(self, "r", int(self.r))
        if abs(self.lam + self.p) <= POLE_TOL:
            raise InvalidLambda("p + lambda must be non-zero")
        if _near_nonpositive_integer(self.lam) and abs(self.lam) > POLE_TOL:
            raise InvalidLambda(f"lambda = {self.lam} is a negative integer")

    @property
    def index(self) -> int:
        return self.r

    @property
    def alpha_a(self) -> complex:
        return self.p + self.lam

    def with_index(self, a) -> MultiplierTransform:
        return dataclasses.replace(self, r=a)

    def multipliers(self, N: int) -> np.ndarray:
        n = np.arange(self.p, N + 1)
        out = ((n + self.lam) / (self.p + self.lam)) ** self.r
        out[0] = 1.0
        return out

    def params_json(self) -> dict:
        return {"r": self.r, "lambda": _num(self.lam)}


@dataclass(frozen=True)
class KappaOperator(MultiplierOperator):
    """J_kappa: reciprocal of the H multipliers times ``(kappa+p-1)_k/k!``."""

    hyper: HypergeometricParams = HypergeometricParams((1.0,))
    kappa: float = 1.0

    family: ClassVar[str] = "J"

    def _check_poles(self) -> None:
        if not np.isfinite(self.kappa):
            raise InvalidParameter("kappa must be finite")

    @property
    def index(self) -> complex:
        return -self.hyper.alphas[0]

    @property
    def alpha_a(self) -> complex:
        return self.hyper.alphas[0] - 1

    def with_index(self, a: complex) -> KappaOperator:
        return dataclasses.replace(self, hyper=self.hyper.with_alpha1(-a))

    def multipliers(self, N: int) -> np.ndarray:
        k_max = N - self.p
        for a in self.hyper.alphas:
            steps = a + np.arange(k_max)
            if np.any(np.abs(steps) <= POLE_TOL):
                raise ZeroAlphaPochhammer(f"(alpha)_k vanishes for alpha = {a} within order {N}")
        # (kappa+p-1)_k/k! divided by prod(alpha)_k/(prod(beta)_k k!): the k! cancels
        num = (self.kappa + self.p - 1,) + self.hyper.betas
        return _pochhammer_sequence(num, self.hyper.alphas, k_max, factorial=False)

    def params_json(self) -> dict:
        return {**self.hyper.to_json(), "kappa": self.kappa}


@dataclass(frozen=True)
class KappaTransform(MultiplierOperator):
    """T_kappa(r, lambda): binomial weights divided by the I multipliers."""

    r: int = 0
    lam: complex = 0.0
    kappa: float = 1.0

    family: ClassVar[str] = "T"
    alpha_independent_of_index: ClassVar[bool] = True

    def _check_poles(self) -> None:
        MultiplierTransform._check_poles(self)

    @property
    def index(self) -> int:
        return -self.r

    @property
    def alpha_a(self) -> complex:
        return self.p + self.lam

    def with_index(self, a) -> KappaTransform:
        return dataclasses.replace(self, r=-a)

    def multipliers(self, N: int) -> np.ndarray:
        n = np.arange(self.p, N + 1)
        out = _binomial_weights(self.kappa, self.p, N - self.p) * ((self.p + self.lam) / (n + self.lam)) ** self.r
        out[0] = 1.0
        return out

    def params_json(self) -> dict:
        return {"r": self.r, "lambda": _num(self.lam), "kappa": self.kappa}


Q_VARIANTS = ("identity_consistent", "printed")


@dataclass(frozen=True)
class LiuOperator(MultiplierOperator):
    """Q^alpha_{beta,p}.

    ``identity_consistent`` uses ``(beta+p)_{n-p} / (alpha+beta+p)_{n-p}``;
    ``printed`` keeps the Gamma arguments shifted by p, i.e.
    ``(beta+p)_n / (alpha+beta+p)_n`` for ``n > p``.
    """

    alpha: float = 0.0
    beta: float = 0.0
    variant: str = "identity_consistent"

    family: ClassVar[str] = "Q"

    def _check_poles(self) -> None:
        if self.variant not in Q_VARIANTS:
            raise InvalidParameter(f"unknown Q variant {self.variant!r}")
        base = self.alpha + self.beta + self.p
        if _near_nonpositive_integer(complex(base)):
            raise InvalidParameter(f"alpha + beta + p = {base} is a non-positive integer")

    @property
    def index(self) -> float:
        return -self.alpha

    @property
    def alpha_a(self) -> float:
        return self.alpha + self.beta + self.p - 1

    def with_index(self, a) -> LiuOperator:
        return dataclasses.replace(self, alpha=-a)

    def multipliers(self, N: int) -> np.ndarray:
        k_max = N - self.p
        b = self.beta + self.p
        c = self.alpha + self.beta + self.p
        if self.variant == "identity_consistent":
            return _pochhammer_sequence([b], [c], k_max, factorial=False)
        full = _pochhammer_sequence([b], [c], N, factorial=False)
        out = full[self.p:N + 1].copy()
        out[0] = 1.0
        return out

    def params_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}


def dziok_srivastava(params: HypergeometricParams, p: int = 1) -> DziokSrivastava:
    return DziokSrivastava(p=p, hyper=params)


def multiplier_transform(r: int, lam: complex, p: int = 1) -> MultiplierTransform:
    return MultiplierTransform(p=p, r=r, lam=lam)


def j_kappa(params: HypergeometricParams, kappa: float, p: int = 1) -> KappaOperator:
    if not kappa > 0:
        raise InvalidParameter(f"kappa must be positive, got {kappa}")
    return KappaOperator(p=p, hyper=params, kappa=float(kappa))


def t_kappa(r: int, lam: complex, kappa: float, p: int = 1) -> KappaTransform:
    if not kappa > 0:
        raise InvalidParameter(f"kappa must be positive, got {kappa}")
    return KappaTransform(p=p, r=r, lam=lam, kappa=float(kappa))


def q_liu(alpha: float, beta: float, p: int = 1, variant: str = "identity_consistent") -> LiuOperator:
    if not alpha >= 0:
        raise InvalidParameter(f"Q needs alpha >= 0, got {alpha}")
    if not beta > -1:
        raise InvalidParameter(f"Q needs beta > -1, got {beta}")
    return LiuOperator(p=p, alpha=float(alpha), beta=float(beta), variant=variant)


def identity_operator(p: int = 1) -> MultiplierTransform:
    return MultiplierTransform(p=p, r=0, lam=0.0)


def apply(op: MultiplierOperator, f: TruncatedSeries) -> TruncatedSeries:
    if f.p != op.p:
        raise BasePowerMismatch(f"operator acts on A_{op.p}, series starts at z^{f.p}")
    return TruncatedSeries(f.p, f.coeffs * op.multipliers(f.N))


def shift_index(op: MultiplierOperator, delta: int) -> MultiplierOperator:
    return op.shift_index(delta)


def recurrence_sides(op: MultiplierOperator, f: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of ``z(L^a f)' = alpha_a L^{a+1} f - (alpha_a - p) L^a f``."""
    alpha = op.alpha_a
    la = apply(op, f)
    la1 = apply(op.shift_index(1), f)
    lhs = z_derivative(la)
    # alpha (L^{a+1} - L^a) + p L^a: same value, exact at n = p
    rhs = TruncatedSeries(f.p, alpha * (la1.coeffs - la.coeffs) + op.p * la.coeffs)
    return lhs, rhs


def recurrence_check(op: MultiplierOperator, f: TruncatedSeries, tol: float = RTOL) -> VerificationReport:
    if op.alpha_a == 0:
        raise ZeroAlpha(f"alpha_a vanishes for {op.descriptor()}")
    lhs, rhs = recurrence_sides(op, f)
    err = max_relative_error(lhs, rhs)
    return VerificationReport(
        id=f"recurrence:{op.family}",
        kind="identity",
        passed=err <= tol,
        max_error=err,
        samples_tested=len(f),
        config_echo={"operator": op.descriptor(), "N": f.N, "tol": tol},
    )


_FAMILY_KEYS = {
    "H": ("alphas", "betas"),
    "I": ("r", "lambda"),
    "J": ("alphas", "betas", "kappa"),
    "T": ("r", "lambda", "kappa"),
    "Q": ("alpha", "beta"),
}


def from_descriptor(desc: dict) -> MultiplierOperator:
    """Build an operator from ``{"family", "p", "params", "variant"}``."""
    if not isinstance(desc, dict):
        raise ParameterError("operator descriptor must be a JSON object")
    family = desc.get("family")
    if family not in _FAMILY_KEYS:
        raise ParameterError(f"unknown operator family {family!r}; expected one of H, I, J, T, Q")
    p = desc.get("p", 1)
    if not isinstance(p, int) or isinstance(p, bool):
        raise ParameterError("descriptor 'p' must be an integer")
    params = desc.get("params", {})
    if not isinstance(params, dict):
        raise ParameterError("descriptor 'params' must be an object")
    unknown = set(params) - set(_FAMILY_KEYS[family])
    if unknown:
        raise ParameterError(f"unexpected parameters for {family}: {sorted(unknown)}")

    def hyper() -> HypergeometricParams:
        alphas = [parse_complex(a) for a in params.get("alphas", [1.0])]
        betas = [parse_complex(b) for b in params.get("betas", [])]
        return HypergeometricParams(tuple(alphas), tuple(betas))

    def real(key: str, default: float) -> float:
        value = parse_complex(params.get(key, default))
        if value.imag != 0:
            raise ParameterError(f"{key} must be real")
        return value.real

    def integer(key: str) -> int:
        value = params.get(key, 0)
        if not isinstance(value, (int, float)) or isinstance(value, bool) or int(value) != value:
            raise ParameterError(f"{key} must be an integer")
        return int(value)

    if family == "H":
        return dziok_srivastava(hyper(), p)
    if family == "I":
        return multiplier_transform(integer("r"), parse_complex(params.get("lambda", 0.0)), p)
    if family == "J":
        return j_kappa(hyper(), real("kappa", 1.0), p)
    if family == "T":
        return t_kappa(integer("r"), parse_complex(params.get("lambda", 0.0)), real("kappa", 1.0), p)
    return q_liu(real("alpha", 0.0), real("beta", 0.0), p, desc.get("variant", "identity_consistent"))
