"""Dominant regions, sampled subordination checks and boundary computations.

Membership is always reported with a signed margin, positive inside.  The
subordination checks here sample a function on concentric circles; they are
a numerical screen, not a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.spatial import cKDTree

from .errors import CrossCheckError, InvalidParameter, ParameterError, ZeroOnGrid
from .search import golden_section, scan_then_golden
from .series import (
    TruncatedSeries,
    _check_unit,
    divide,
    evaluate,
    z_derivative,
)

MEMBERSHIP_TOL = 1e-9


def _boundary_params(n_points: int) -> np.ndarray:
    if n_points < 2:
        raise ParameterError("boundary curves need at least 2 points")
    # open interval, symmetric about 0; contains 0 when n_points is odd
    return np.linspace(-math.pi, math.pi, n_points + 2)[1:-1]


class DominantRegion:
    """Interface: ``margins`` (vectorized, positive inside) and ``boundary``."""

    kind: str = "?"

    def margins(self, w: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def branch_risk(self, w: np.ndarray) -> np.ndarray:
        return np.zeros(np.shape(w), dtype=bool)

    def boundary(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class HalfPlane(DominantRegion):
    """``Re w > alpha``."""

    alpha: float
    kind = "half_plane"

    def margins(self, w):
        return np.real(w) - self.alpha

    def boundary(self, t):
        return self.alpha + 1j * np.tan(t / 2)

    def to_json(self):
        return {"kind": self.kind, "alpha": self.alpha}


@dataclass(frozen=True)
class LeftHalfPlane(DominantRegion):
    """``Re w < alpha``."""

    alpha: float
    kind = "left_half_plane"

    def margins(self, w):
        return self.alpha - np.real(w)

    def boundary(self, t):
        return self.alpha - 1j * np.tan(t / 2)

    def to_json(self):
        return {"kind": self.kind, "alpha": self.alpha}


@dataclass(frozen=True)
class ReciprocalHalfPlane(DominantRegion):
    """``Re(1/w) > alpha``."""

    alpha: float
    kind = "reciprocal_half_plane"

    def margins(self, w):
        w = np.asarray(w, dtype=complex)
        out = np.full(w.shape, -np.inf)
        nz = w != 0
        out[nz] = np.real(1 / w[nz]) - self.alpha
        return out

    def boundary(self, t):
        return 1 / (self.alpha + 1j * np.tan(t / 2))

    def to_json(self):
        return {"kind": self.kind, "alpha": self.alpha}


@dataclass(frozen=True)
class Disk(DominantRegion):
    """``|w - center| < radius``."""

    center: complex
    radius: float
    kind = "disk"

    def margins(self, w):
        return self.radius - np.abs(np.asarray(w) - self.center)

    def boundary(self, t):
        return self.center + self.radius * np.exp(1j * t)

    def to_json(self):
        c = complex(self.center)
        return {"kind": self.kind, "center": [c.real, c.imag], "radius": self.radius}


@dataclass(frozen=True)
class JanowskiDisk(DominantRegion):
    """Image of the unit disk under ``(1 + A z)/(1 + B z)``, ``-1 <= B < A <= 1``.

    For ``B = -1`` the image is the half-plane ``Re w > (1 - A)/2``.
    """

    A: float
    B: float
    kind = "janowski"

    def __post_init__(self):
        if not (-1 <= self.B < self.A <= 1):
            raise InvalidParameter(f"Janowski parameters need -1 <= B < A <= 1, got A={self.A}, B={self.B}")

    @property
    def shape(self) -> DominantRegion:
        if self.B == -1:
            return HalfPlane((1 - self.A) / 2)
        d = 1 - self.B**2
        return Disk((1 - self.A * self.B) / d, (self.A - self.B) / d)

    def margins(self, w):
        return self.shape.margins(w)

    def boundary(self, t):
        if self.B == -1:
            return self.shape.boundary(t)
        z = np.exp(1j * t)
        return (1 + self.A * z) / (1 + self.B * z)

    def to_json(self):
        return {"kind": self.kind, "A": self.A, "B": self.B}


def janowski_region(A: float, B: float) -> DominantRegion:
    return JanowskiDisk(A, B).shape


@dataclass(frozen=True)
class Sector(DominantRegion):
    """``|arg w| < eta pi / 2``; margin measured in radians."""

    eta: float
    kind = "sector"

    def __post_init__(self):
        if not 0 < self.eta <= 2:
            raise InvalidParameter(f"sector opening eta must be in (0, 2], got {self.eta}")

    def margins(self, w):
        w = np.asarray(w, dtype=complex)
        out = self.eta * np.pi / 2 - np.abs(np.angle(w))
        return np.where(w == 0, 0.0, out)

    def boundary(self, t):
        s = np.tan(t / 2)
        return np.abs(s) ** self.eta * np.exp(1j * np.sign(s) * self.eta * np.pi / 2)

    def to_json(self):
        return {"kind": self.kind, "eta": self.eta}


@dataclass(frozen=True)
class Lemniscate(DominantRegion):
    """``|w^(1/eta) - 1| < 1``, the image of ``(1 + z)^eta``; eta = 1/2 is SL.

    Samples with ``|arg w| >= eta pi`` make the principal power wrap; they are
    flagged as branch risk instead of being scored.
    """

    eta: float = 0.5
    kind = "lemniscate"

    def __post_init__(self):
        if not self.eta > 0:
            raise InvalidParameter(f"lemniscate exponent must be positive, got {self.eta}")

    def margins(self, w):
        w = np.asarray(w, dtype=complex)
        return 1 - np.abs(w ** (1 / self.eta) - 1)

    def branch_risk(self, w):
        w = np.asarray(w, dtype=complex)
        return (np.abs(np.angle(w)) >= self.eta * np.pi) | (w == 0)

    def boundary(self, t):
        return (1 + np.exp(1j * t)) ** self.eta

    def to_json(self):
        return {"kind": self.kind, "eta": self.eta}


@dataclass(frozen=True)
class ParabolaExterior(DominantRegion):
    """Image of ``b psi + z psi'`` with ``psi = (1 + a z)/(1 - z)``.

    Its boundary is ``v^2 = -b^2 (1 + a)(u - u0)``, ``u0 = (2b(1-a) - (1+a))/4``,
    a parabola opening to the left; the region is the side containing the
    half-plane ``u > u0``.  For ``b = 0`` the parabola collapses to the slit
    ``(-inf, u0]``.  The margin is the horizontal distance to the parabola.
    """

    a: float
    b: float
    kind = "parabola_exterior"

    def __post_init__(self):
        if not self.a > -1:
            raise InvalidParameter(f"parabola needs a > -1, got {self.a}")

    @property
    def vertex(self) -> float:
        return (2 * self.b * (1 - self.a) - (self.a + 1)) / 4

    @property
    def width(self) -> float:
        return self.b**2 * (1 + self.a)

    def margins(self, w):
        w = np.asarray(w, dtype=complex)
        u, v = w.real, w.imag
        if self.width > 0:
            return u - (self.vertex - v**2 / self.width)
        return np.where(u > self.vertex, np.abs(w - self.vertex), np.abs(v))

    def boundary(self, t):
        # z = -e^{it}: parameter 0 lands on the vertex (z = -1)
        theta = np.asarray(t) + np.pi
        c, s = np.cos(theta), np.sin(theta)
        a, b = self.a, self.b
        with np.errstate(divide="ignore", invalid="ignore"):
            u = ((1 + a - b + a * b) + (1 - a) * b * c) / (2 * (c - 1))
            v = (1 + a) * b * s / (2 * (1 - c))
        return u + 1j * v

    def to_json(self):
        return {"kind": self.kind, "a": self.a, "b": self.b}


@dataclass(frozen=True, eq=False)
class CurveInterior(DominantRegion):
    """Interior of a closed polygonal curve, by winding number.

    The margin is the distance to the curve, signed positive inside.
    """

    points: np.ndarray
    kind = "curve_interior"
    _tree: cKDTree = field(init=False, repr=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex).reshape(-1)
        if pts.size < 3:
            raise ParameterError("a closed curve needs at least 3 points")
        if pts[0] == pts[-1]:
            pts = pts[:-1]
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_tree", cKDTree(np.column_stack([pts.real, pts.imag])))

    def winding_numbers(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=complex).reshape(-1)
        order = np.argsort(w.imag)
        ys = w.imag[order]
        xs = w.real[order]
        wn = np.zeros(w.size, dtype=int)
        start = self.points
        end = np.roll(self.points, -1)
        for p0, p1 in zip(start, end):
            y0, y1 = p0.imag, p1.imag
            if y0 == y1:
                continue
            upward = y0 < y1
            lo, hi = (y0, y1) if upward else (y1, y0)
            # half-open rule: an edge owns its lower endpoint
            i = np.searchsorted(ys, lo, side="left")
            j = np.searchsorted(ys, hi, side="left")
            if i == j:
                continue
            px, py = xs[i:j], ys[i:j]
            side = (p1.real - p0.real) * (py - y0) - (px - p0.real) * (y1 - y0)
            if upward:
                wn[order[i:j]] += side > 0
            else:
                wn[order[i:j]] -= side < 0
        return wn

    def distances(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=complex).reshape(-1)
        _, idx = self._tree.query(np.column_stack([w.real, w.imag]))
        n = self.points.size
        best = np.full(w.size, np.inf)
        for nb in (-1, 0):
            a = self.points[(idx + nb) % n]
            b = self.points[(idx + nb + 1) % n]
            d = b - a
            denom = np.abs(d) ** 2
            t = np.clip(np.real((w - a) * np.conj(d)) / np.where(denom == 0, 1, denom), 0, 1)
            best = np.minimum(best, np.abs(w - (a + t * d)))
        return best

    def margins(self, w):
        w_arr = np.asarray(w, dtype=complex)
        inside = self.winding_numbers(w_arr) != 0
        dist = self.distances(w_arr)
        return np.where(inside, dist, -dist).reshape(w_arr.shape)

    def boundary(self, t):
        idx = np.round((np.asarray(t) + np.pi) / (2 * np.pi) * (self.points.size - 1)).astype(int)
        return self.points[idx]

    def to_json(self):
        return {"kind": self.kind, "n_points": int(self.points.size)}


REGION_KINDS = {
    "half_plane": lambda d: HalfPlane(float(d["alpha"])),
    "left_half_plane": lambda d: LeftHalfPlane(float(d["alpha"])),
    "reciprocal_half_plane": lambda d: ReciprocalHalfPlane(float(d["alpha"])),
    "disk": lambda d: Disk(_complex(d.get("center", 0.0)), float(d["radius"])),
    "janowski": lambda d: JanowskiDisk(float(d["A"]), float(d["B"])),
    "sector": lambda d: Sector(float(d["eta"])),
    "lemniscate": lambda d: Lemniscate(float(d.get("eta", 0.5))),
    "parabola": lambda d: ParabolaExterior(float(d["a"]), float(d["b"])),
    "parabola_exterior": lambda d: ParabolaExterior(float(d["a"]), float(d["b"])),
}


def _complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        return complex(float(x[0]), float(x[1]))
    return complex(x)


def region_from_json(d: dict) -> DominantRegion:
    if not isinstance(d, dict) or d.get("kind") not in REGION_KINDS:
        raise ParameterError(f"unknown region {d!r}; kinds: {sorted(REGION_KINDS)}")
    try:
        return REGION_KINDS[d["kind"]](d)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ParameterError(f"bad parameters for region {d['kind']}: {exc}") from exc


def contains(region: DominantRegion, w: complex) -> tuple[bool, float]:
    margin = float(np.asarray(region.margins(np.asarray([w], dtype=complex)))[0])
    return margin > 0, margin


@dataclass(frozen=True)
class SamplingGrid:
    """Concentric circles ``|z| = r`` with equally spaced angles."""

    radii: tuple = tuple(round(0.10 + 0.05 * k, 10) for k in range(18))
    angular_samples: int = 720

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if not radii or any(not 0 < r < 1 for r in radii):
            raise ParameterError("grid radii must lie strictly inside (0, 1)")
        if self.angular_samples < 16:
            raise ParameterError("need at least 16 samples per circle")
        object.__setattr__(self, "radii", radii)

    def points(self) -> np.ndarray:
        theta = 2 * np.pi * np.arange(self.angular_samples) / self.angular_samples
        return (np.asarray(self.radii)[:, None] * np.exp(1j * theta)[None, :]).reshape(-1)

    def to_json(self) -> dict:
        return {"radii": list(self.radii), "angular_samples": self.angular_samples}


@dataclass
class SubordinationVerdict:
    holds: bool
    worst_z: complex
    worst_w: complex
    margin: float
    branch_risk_count: int = 0
    samples: int = 0

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "worst": {
                "z": [self.worst_z.real, self.worst_z.imag],
                "w": [self.worst_w.real, self.worst_w.imag],
                "margin": self.margin,
            },
            "branch_risk": self.branch_risk_count,
            "samples": self.samples,
        }


def verdict_from_samples(
    z: np.ndarray, w: np.ndarray, region: DominantRegion, tol: float = MEMBERSHIP_TOL
) -> SubordinationVerdict:
    """Score sampled values ``w = q(z)`` against ``region``."""
    w = np.asarray(w, dtype=complex).reshape(-1)
    z = np.asarray(z, dtype=complex).reshape(-1)
    risky = np.asarray(region.branch_risk(w), dtype=bool)
    with np.errstate(all="ignore"):
        margins = np.asarray(region.margins(w), dtype=float).reshape(-1)
    margins = np.where(np.isnan(margins) | ~np.isfinite(w), -np.inf, margins)
    scored = np.where(risky, np.inf, margins)
    if np.all(risky):
        i = 0
        worst = -np.inf
    else:
        i = int(np.argmin(scored))
        worst = float(scored[i])
    return SubordinationVerdict(
        holds=bool(worst > -tol),
        worst_z=complex(z[i]),
        worst_w=complex(w[i]),
        margin=worst,
        branch_risk_count=int(risky.sum()),
        samples=int(w.size),
    )


def subordinate_to(
    q: TruncatedSeries, region: DominantRegion, grid: SamplingGrid | None = None, tol: float = MEMBERSHIP_TOL
) -> SubordinationVerdict:
    """Sampled check that ``q(U_r)`` lies in ``region`` for every grid radius.

    ``q`` must be normalized as ``1 + c_1 z + ...`` to match ``psi(0) = 1``.
    """
    _check_unit(q)
    grid = grid or SamplingGrid()
    z = grid.points()
    return verdict_from_samples(z, evaluate(q, z), region, tol)


CLASS_IDS = ("R", "S*", "S*[A,B]", "SS*", "SL", "Sr*")


def class_region(class_id: str, alpha: float = 0.0, A: float = 1.0, B: float = -1.0, eta: float | None = None):
    if class_id in ("R", "S*", "Sr*"):
        if not 0 <= alpha < 1:
            raise InvalidParameter(f"order alpha must be in [0, 1), got {alpha}")
        return HalfPlane(alpha)
    if class_id == "S*[A,B]":
        return janowski_region(A, B)
    if class_id == "SS*":
        eta = 1.0 if eta is None else eta
        if not 0 < eta <= 1:
            raise InvalidParameter(f"SS* needs 0 < eta <= 1, got {eta}")
        return Sector(eta)
    if class_id == "SL":
        return Lemniscate(0.5 if eta is None else eta)
    raise ParameterError(f"unknown class {class_id!r}; expected one of {CLASS_IDS}")


def class_functional(f: TruncatedSeries, class_id: str) -> TruncatedSeries:
    """The defining expression: f/z for R, zf'/f for starlike types, f/(zf') for Sr*."""
    if class_id == "R":
        return f.shift(-1)
    if class_id == "Sr*":
        return divide(f, z_derivative(f))
    return divide(z_derivative(f), f)


def class_check(
    f: TruncatedSeries,
    class_id: str,
    alpha: float = 0.0,
    A: float = 1.0,
    B: float = -1.0,
    eta: float | None = None,
    grid: SamplingGrid | None = None,
) -> SubordinationVerdict:
    if f.p != 1 or f.coeffs[0] != 1:
        raise ParameterError("class checks take f(z) = z + a_2 z^2 + ... (p = 1, normalized)")
    region = class_region(class_id, alpha, A, B, eta)
    grid = grid or SamplingGrid()
    z = grid.points()
    if class_id != "R":
        f_over_z = evaluate(f.shift(-1), z)
        f_prime = evaluate(z_derivative(f).shift(-1), z)
        if np.min(np.abs(f_over_z)) < 1e-12 or np.min(np.abs(f_prime)) < 1e-12:
            raise ZeroOnGrid(f"f or f' vanishes on the sampling grid for class {class_id}")
    return subordinate_to(class_functional(f, class_id), region, grid)


def boundary_curve(region: DominantRegion, n_points: int) -> list[tuple[float, float, float]]:
    """``(parameter, u, v)`` samples of the region's boundary."""
    t = _boundary_params(n_points)
    w = np.asarray(region.boundary(t), dtype=complex)
    return [(float(ti), float(wi.real), float(wi.imag)) for ti, wi in zip(t, w)]


def sqrt_dominant_values(z, b: float, c: float = 1.0):
    """``b sqrt(1+z) + c z / (2 sqrt(1+z))``."""
    s = np.sqrt(1 + np.asarray(z, dtype=complex))
    return b * s + c * z / (2 * s)


def boundary_modulus_squared_k(theta):
    """``|h(e^{i theta})|^2`` for ``h(z) = (3z + 2)/(2 sqrt(1+z))``."""
    return (13 + 12 * np.cos(theta)) / (8 * np.cos(theta / 2))


def min_boundary_modulus_squared_k(tol: float = 1e-10) -> tuple[float, float]:
    """Minimize ``k(theta) = (13 + 12 cos theta)/(8 cos(theta/2))``.

    k is even in theta and unimodal on ``[0, pi)``, so the search runs there;
    ``-theta_star`` is the mirror minimizer.
    """
    theta, k = golden_section(lambda t: float(boundary_modulus_squared_k(t)), 0.0, math.pi - 1e-9, tol=tol)
    return theta, k


def sqrt_dominant_min_modulus(b: float, c: float = 1.0, tol: float = 1e-10) -> tuple[float, float]:
    """Smallest ``|h(e^{i theta})|`` for ``h = b sqrt(1+z) + c z/(2 sqrt(1+z))``.

    The disk of that radius about 0 lies in ``h(U)``.  Real b and c make the
    boundary symmetric, so ``theta`` is searched on ``[0, pi)``.
    """
    fun = lambda t: float(abs(sqrt_dominant_values(np.exp(1j * t), b, c)))  # noqa: E731
    return scan_then_golden(fun, 0.0, math.pi - 1e-9, tol=tol)


def sector_bound(b: float, eta: float) -> float:
    """``delta = eta + 1 - (2/pi) arctan(b/eta)``."""
    if not 0 < eta <= 1:
        raise InvalidParameter(f"need 0 < eta <= 1, got {eta}")
    if b < 0:
        raise InvalidParameter(f"need a non-negative linear coefficient, got {b}")
    return eta + 1 - 2 / math.pi * math.atan(b / eta)


def sector_dominant_values(z, b: float, eta: float):
    """``(b + 2 eta z/(1 - z^2)) ((1+z)/(1-z))^eta``."""
    z = np.asarray(z, dtype=complex)
    return (b + 2 * eta * z / (1 - z**2)) * ((1 + z) / (1 - z)) ** eta


def sector_bound_numeric(b: float, eta: float, tol: float = 1e-12) -> float:
    """Minimize ``arg h(e^{i theta})`` over ``0 < theta < pi`` directly.

    The argument is accumulated factor by factor so it never wraps at pi.
    """

    def arg_h(theta: float) -> float:
        z = complex(math.cos(theta), math.sin(theta))
        first = b + 2 * eta * z / (1 - z * z)
        second = (1 + z) / (1 - z)
        return math.atan2(first.imag, first.real) + eta * math.atan2(second.imag, second.real)

    _, m = scan_then_golden(arg_h, 1e-6, math.pi - 1e-6, tol=tol)
    return 2 * m / math.pi


def min_arg_bound(mu: float, nu: float, eta: float) -> float:
    """delta for the strongly-starlike corollary with the H(alpha_1 = 1) chain."""
    if 2 * mu < nu:
        raise InvalidParameter(f"need 2 mu >= nu, got mu={mu}, nu={nu}")
    b = 2 * mu - nu
    delta = sector_bound(b, eta)
    numeric = sector_bound_numeric(b, eta)
    if abs(delta - numeric) > 1e-6:
        raise CrossCheckError(f"delta closed form {delta} vs boundary minimum {numeric}")
    return delta


def half_plane_threshold(alpha: float, b: float, c: float = 1.0) -> float:
    """Largest ``Re h`` on the boundary for ``h = b psi + c z psi'``, psi = (1+(1-2alpha)z)/(1-z)."""
    return b * alpha - c * (1 - alpha) / 2


def half_plane_threshold_numeric(alpha: float, b: float, c: float = 1.0, tol: float = 1e-12) -> float:
    def neg_re_h(theta: float) -> float:
        z = complex(math.cos(theta), math.sin(theta))
        psi = (1 + (1 - 2 * alpha) * z) / (1 - z)
        zpsi = 2 * (1 - alpha) * z / (1 - z) ** 2
        return -(b * psi + c * zpsi).real

    _, m = golden_section(neg_re_h, 1e-6, math.pi, tol=tol)
    return -m


def parabola_threshold(alpha: float, mu: float, nu: float) -> float:
    """``(2(2mu - nu) alpha - (1 - alpha))/2``, cross-checked on the boundary."""
    if not 0 <= alpha < 1:
        raise InvalidParameter(f"need 0 <= alpha < 1, got {alpha}")
    b = 2 * mu - nu
    value = half_plane_threshold(alpha, b)
    numeric = half_plane_threshold_numeric(alpha, b)
    if abs(value - numeric) > 1e-6:
        raise CrossCheckError(f"threshold closed form {value} vs boundary maximum {numeric}")
    return value


def minimize_boundary(fun: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10):
    return scan_then_golden(fun, lo, hi, tol=tol)
