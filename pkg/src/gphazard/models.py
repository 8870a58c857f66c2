"""Six hazard-rate models driven by gamma process draws.

Each model evaluates its hazard, cumulative hazard, density and survival
in closed form, and samples failure times exactly by solving
``cum_hazard(T) = -log(U)``.  Four of the models have piecewise-linear
cumulative hazards (knots at atom locations), the log-convex model is
piecewise exponential, and the mixture model inverts its cumulative
hazard numerically.

A failure draw can be infinite when the total cumulative hazard is
finite (a defective failure distribution); ``math.inf`` is the sentinel
for that outcome, never an exception.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.optimize import brentq
from scipy.special import logsumexp

from .datasets import Dataset
from .gamma_process import GammaProcessDraw
from .likelihood import HyperParams
from .rng import RandomStream

__all__ = [
    "HazardModel",
    "IncreasingFailureRate",
    "DecreasingFailureRate",
    "LoWengBathtub",
    "SuperpositionBathtub",
    "MixtureBathtub",
    "LogConvexHazard",
    "simulate_dataset",
    "draw_model_params",
    "model_to_dict",
    "model_from_dict",
]

_ZERO_RATE = 1e-12  # below this, exponential segments are treated as linear

_BRENTQ_RTOL = 4.0 * np.finfo(float).eps


def _as_times(t) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0):
        raise ValueError("t must be non-negative")
    return arr


def _maybe_scalar(out: np.ndarray, like) -> float | np.ndarray:
    return float(out) if np.ndim(like) == 0 else out


@dataclass(eq=False)
class _SortedAtoms:
    """Sorted atom locations with zero-prefixed mass and first-moment sums."""

    thetas: np.ndarray
    mass: np.ndarray    # mass[j] = total weight of the j smallest atoms
    moment: np.ndarray  # moment[j] = corresponding sum of weight * location

    @classmethod
    def of(cls, draw: GammaProcessDraw) -> "_SortedAtoms":
        o = draw.ordered
        return cls(
            thetas=o.thetas,
            mass=np.concatenate(([0.0], o.cum_mass)),
            moment=np.concatenate(([0.0], o.cum_moment)),
        )

    @property
    def total(self) -> float:
        return float(self.mass[-1])

    def count_le(self, t) -> np.ndarray:
        return np.searchsorted(self.thetas, t, side="right")

    def count_lt(self, t) -> np.ndarray:
        return np.searchsorted(self.thetas, t, side="left")


@dataclass(eq=False)
class _PiecewiseLinear:
    """Non-decreasing piecewise-linear function through (knots, values) with given slopes.

    ``slopes[i]`` applies on [knots[i], knots[i+1]); the last slope extends
    to infinity.  Zero-slope tails make the function defective: inverting
    past the last attained value yields ``inf``.
    """

    knots: np.ndarray
    values: np.ndarray
    slopes: np.ndarray

    def value(self, t):
        arr = _as_times(t)
        idx = np.searchsorted(self.knots, arr, side="right") - 1
        out = self.values[idx] + self.slopes[idx] * (arr - self.knots[idx])
        return _maybe_scalar(out, t)

    def limit(self) -> float:
        return math.inf if self.slopes[-1] > 0.0 else float(self.values[-1])

    def invert(self, x):
        arr = np.asarray(x, dtype=float)
        if np.any(arr < 0.0):
            raise ValueError("target must be non-negative")
        idx = np.searchsorted(self.values, arr, side="right") - 1
        idx = np.maximum(idx, 0)
        base = self.values[idx]
        slope = self.slopes[idx]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = self.knots[idx] + (arr - base) / slope
        flat = slope <= 0.0
        if np.any(flat):
            t = np.where(flat & (arr == base), self.knots[idx], t)
            t = np.where(flat & (arr > base), np.inf, t)
        t = np.where(arr == 0.0, 0.0, t)
        return _maybe_scalar(t, x)


@dataclass(eq=False)
class _PiecewiseExponential:
    """Cumulative hazard whose log-slope is constant on each segment.

    On segment l the hazard is ``coeffs[l] * exp(rates[l] * (t - knots[l]))``,
    so the increment of the cumulative hazard uses expm1 for stability and
    falls back to the linear form when the rate is (numerically) zero.
    """

    knots: np.ndarray
    values: np.ndarray
    rates: np.ndarray
    coeffs: np.ndarray

    @staticmethod
    def _increment(coeff, rate, dt):
        coeff, rate, dt = np.broadcast_arrays(
            np.atleast_1d(np.asarray(coeff, dtype=float)),
            np.atleast_1d(np.asarray(rate, dtype=float)),
            np.atleast_1d(np.asarray(dt, dtype=float)),
        )
        out = np.empty(coeff.shape)
        lin = np.abs(rate) < _ZERO_RATE
        out[lin] = coeff[lin] * dt[lin]
        out[~lin] = coeff[~lin] * np.expm1(rate[~lin] * dt[~lin]) / rate[~lin]
        return out

    def value(self, t):
        arr = np.atleast_1d(_as_times(t))
        idx = np.searchsorted(self.knots, arr, side="right") - 1
        dt = arr - self.knots[idx]
        out = self.values[idx] + self._increment(self.coeffs[idx], self.rates[idx], dt)
        return _maybe_scalar(out[0] if np.ndim(t) == 0 else out, t)

    def limit(self) -> float:
        rate = float(self.rates[-1])
        if rate >= -_ZERO_RATE:
            return math.inf
        return float(self.values[-1] + self.coeffs[-1] / (-rate))

    def invert(self, x):
        arr = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(arr < 0.0):
            raise ValueError("target must be non-negative")
        idx = np.searchsorted(self.values, arr, side="right") - 1
        idx = np.maximum(idx, 0)
        excess = arr - self.values[idx]
        rate = self.rates[idx]
        coeff = self.coeffs[idx]
        t = np.empty(arr.shape)
        lin = np.abs(rate) < _ZERO_RATE
        t[lin] = (self.knots[idx] + excess / coeff)[lin]
        with np.errstate(divide="ignore", invalid="ignore"):
            arg = rate * excess / coeff
            grown = self.knots[idx] + np.log1p(np.maximum(arg, -1.0)) / rate
        t[~lin] = grown[~lin]
        # a negative-rate tail saturates: targets at or past the limit are unreachable
        t = np.where((~lin) & (arg <= -1.0), np.inf, t)
        t = np.where(arr == 0.0, 0.0, t)
        return _maybe_scalar(t[0] if np.ndim(x) == 0 else t, x)


class HazardModel(ABC):
    """Common evaluation and sampling surface of all six models."""

    variant: str

    @abstractmethod
    def hazard(self, t):
        """Instantaneous failure rate at t (scalar or array)."""

    @abstractmethod
    def cum_hazard(self, t):
        """Integral of the hazard over [0, t]."""

    @abstractmethod
    def cum_hazard_limit(self) -> float:
        """Total cumulative hazard as t grows without bound; finite means defective."""

    @abstractmethod
    def invert_cum_hazard(self, target):
        """Smallest-segment solution T of cum_hazard(T) = target, or inf past the limit."""

    @abstractmethod
    def breakpoints(self) -> np.ndarray:
        """Sorted locations where the hazard jumps or kinks."""

    @abstractmethod
    def to_dict(self) -> dict: ...

    def survival(self, t):
        out = np.exp(-np.asarray(self.cum_hazard(t), dtype=float))
        return _maybe_scalar(out, t)

    def density(self, t):
        return self.hazard(t) * self.survival(t)

    def sample_failure(self, stream: RandomStream) -> float:
        """One failure time via inverse transform; may be inf for defective models."""
        u = stream.uniform()
        return float(self.invert_cum_hazard(-math.log(u)))


def _linear_skeleton(model: HazardModel, inner_knots: np.ndarray) -> _PiecewiseLinear:
    """Knots, accumulated cumulative-hazard values, and slopes for a step-hazard model.

    Slopes come from the (piecewise-constant) hazard at segment midpoints,
    the final one from one unit past the last knot; both are exact for
    step hazards.  Accumulating the knot values from non-negative
    increments keeps the function weakly monotone even at rounding scale,
    so evaluation and inversion share one consistent skeleton.
    """
    knots = np.unique(np.concatenate(([0.0], np.asarray(inner_knots, dtype=float))))
    if knots.size > 1:
        interior = np.asarray(model.hazard(0.5 * (knots[:-1] + knots[1:])), dtype=float)
        values = np.concatenate(([0.0], np.cumsum(interior * np.diff(knots))))
    else:
        interior = np.array([])
        values = np.array([0.0])
    final = model.hazard(knots[-1] + 1.0)
    return _PiecewiseLinear(knots=knots, values=values, slopes=np.append(interior, final))


@dataclass(eq=False)
class IncreasingFailureRate(HazardModel):
    """Non-decreasing hazard: a background rate plus the atom mass at or below t."""

    lambda0: float
    draw: GammaProcessDraw
    variant = "ifr"

    def __post_init__(self):
        if self.lambda0 < 0.0:
            raise ValueError(f"lambda0 must be non-negative, got {self.lambda0}")

    @cached_property
    def _atoms(self) -> _SortedAtoms:
        return _SortedAtoms.of(self.draw)

    @cached_property
    def _pwl(self) -> _PiecewiseLinear:
        return _linear_skeleton(self, self._atoms.thetas)

    def hazard(self, t):
        arr = _as_times(t)
        a = self._atoms
        return _maybe_scalar(self.lambda0 + a.mass[a.count_le(arr)], t)

    def cum_hazard(self, t):
        # lambda0*t + sum_k w_k * max(0, t - theta_k), evaluated segment-wise
        return self._pwl.value(t)

    def cum_hazard_limit(self) -> float:
        return self._pwl.limit()

    def invert_cum_hazard(self, target):
        return self._pwl.invert(target)

    def breakpoints(self) -> np.ndarray:
        return np.unique(self._atoms.thetas)

    def to_dict(self) -> dict:
        return {"model": self.variant, "lambda0": self.lambda0, "draw": self.draw.to_dict()}


@dataclass(eq=False)
class DecreasingFailureRate(HazardModel):
    """Non-increasing hazard: a background rate plus the atom mass strictly above t."""

    lambda0: float
    draw: GammaProcessDraw
    variant = "dfr"

    def __post_init__(self):
        if self.lambda0 < 0.0:
            raise ValueError(f"lambda0 must be non-negative, got {self.lambda0}")

    @cached_property
    def _atoms(self) -> _SortedAtoms:
        return _SortedAtoms.of(self.draw)

    @cached_property
    def _pwl(self) -> _PiecewiseLinear:
        return _linear_skeleton(self, self._atoms.thetas)

    def hazard(self, t):
        arr = _as_times(t)
        a = self._atoms
        return _maybe_scalar(self.lambda0 + a.total - a.mass[a.count_le(arr)], t)

    def cum_hazard(self, t):
        # lambda0*t + sum_k w_k * min(t, theta_k), evaluated segment-wise
        return self._pwl.value(t)

    def cum_hazard_limit(self) -> float:
        return self._pwl.limit()

    def invert_cum_hazard(self, target):
        return self._pwl.invert(target)

    def breakpoints(self) -> np.ndarray:
        return np.unique(self._atoms.thetas)

    def to_dict(self) -> dict:
        return {"model": self.variant, "lambda0": self.lambda0, "draw": self.draw.to_dict()}


@dataclass(eq=False)
class LoWengBathtub(HazardModel):
    """Bathtub hazard symmetric about its minimum at t = a.

    Decreasing on [0, a), minimum value lambda0 at t = a, then mirrored
    increases: each atom at theta steps the hazard down at a - theta and
    up at a + theta.
    """

    lambda0: float
    a: float
    draw: GammaProcessDraw
    variant = "lwb"

    def __post_init__(self):
        if self.lambda0 < 0.0:
            raise ValueError(f"lambda0 must be non-negative, got {self.lambda0}")
        if self.a < 0.0:
            raise ValueError(f"a must be non-negative, got {self.a}")

    @cached_property
    def _atoms(self) -> _SortedAtoms:
        return _SortedAtoms.of(self.draw)

    @cached_property
    def _pwl(self) -> _PiecewiseLinear:
        return _linear_skeleton(self, self.breakpoints())

    def hazard(self, t):
        arr = _as_times(t)
        at = self._atoms
        early = at.mass[at.count_lt(self.a - arr)]   # atoms below a - t
        late = at.mass[at.count_le(arr - self.a)]    # atoms at or below t - a
        return _maybe_scalar(self.lambda0 + np.where(arr < self.a, early, late), t)

    def cum_hazard(self, t):
        # the hazard steps down at each a - theta_k and up at each a + theta_k,
        # so the cumulative hazard is linear between those pooled breakpoints
        return self._pwl.value(t)

    def cum_hazard_limit(self) -> float:
        return self._pwl.limit()

    def invert_cum_hazard(self, target):
        return self._pwl.invert(target)

    def breakpoints(self) -> np.ndarray:
        th = self._atoms.thetas
        return np.unique(np.concatenate((self.a - th[th < self.a], [self.a], self.a + th)))

    def to_dict(self) -> dict:
        return {
            "model": self.variant,
            "lambda0": self.lambda0,
            "a": self.a,
            "draw": self.draw.to_dict(),
        }


@dataclass(eq=False)
class SuperpositionBathtub(HazardModel):
    """Sum of a decreasing and an increasing hazard from two independent draws."""

    lambda0: float
    draw_decreasing: GammaProcessDraw
    draw_increasing: GammaProcessDraw
    variant = "sbt"

    def __post_init__(self):
        if self.lambda0 < 0.0:
            raise ValueError(f"lambda0 must be non-negative, got {self.lambda0}")

    @cached_property
    def _atoms1(self) -> _SortedAtoms:
        return _SortedAtoms.of(self.draw_decreasing)

    @cached_property
    def _atoms2(self) -> _SortedAtoms:
        return _SortedAtoms.of(self.draw_increasing)

    @cached_property
    def _pwl(self) -> _PiecewiseLinear:
        return _linear_skeleton(self, self.breakpoints())

    def hazard(self, t):
        arr = _as_times(t)
        a1, a2 = self._atoms1, self._atoms2
        out = (
            self.lambda0
            + a1.total
            - a1.mass[a1.count_le(arr)]
            + a2.mass[a2.count_le(arr)]
        )
        return _maybe_scalar(out, t)

    def cum_hazard(self, t):
        # lambda0*t + sum_k w1k*min(t, theta1k) + sum_k w2k*max(0, t - theta2k),
        # evaluated segment-wise over the pooled atom locations
        return self._pwl.value(t)

    def cum_hazard_limit(self) -> float:
        return self._pwl.limit()

    def invert_cum_hazard(self, target):
        return self._pwl.invert(target)

    def breakpoints(self) -> np.ndarray:
        return np.unique(np.concatenate((self._atoms1.thetas, self._atoms2.thetas)))

    def to_dict(self) -> dict:
        return {
            "model": self.variant,
            "lambda0": self.lambda0,
            "draw1": self.draw_decreasing.to_dict(),
            "draw2": self.draw_increasing.to_dict(),
        }


@dataclass(eq=False)
class MixtureBathtub(HazardModel):
    """Two-component survival mixture of a decreasing and an increasing model.

    The survival function is the pi-weighted mixture of the component
    survivals; the hazard is density/survival and is not itself a bathtub
    in general.  Sampling picks a component, then inverts it; inverting
    the mixture cumulative hazard is done numerically.
    """

    pi: float
    lambda01: float
    draw1: GammaProcessDraw
    lambda02: float
    draw2: GammaProcessDraw
    variant = "mbt"

    def __post_init__(self):
        if not (0.0 < self.pi <= 1.0):
            raise ValueError(f"pi must be in (0, 1], got {self.pi}")
        self._decreasing = DecreasingFailureRate(self.lambda01, self.draw1)
        self._increasing = IncreasingFailureRate(self.lambda02, self.draw2)

    @property
    def components(self) -> tuple[DecreasingFailureRate, IncreasingFailureRate]:
        return self._decreasing, self._increasing

    def survival(self, t):
        out = self.pi * np.asarray(self._decreasing.survival(t)) + (1.0 - self.pi) * np.asarray(
            self._increasing.survival(t)
        )
        return _maybe_scalar(out, t)

    def density(self, t):
        out = self.pi * np.asarray(self._decreasing.density(t)) + (1.0 - self.pi) * np.asarray(
            self._increasing.density(t)
        )
        return _maybe_scalar(out, t)

    def hazard(self, t):
        out = np.asarray(self.density(t)) / np.asarray(self.survival(t))
        return _maybe_scalar(out, t)

    def cum_hazard(self, t):
        arr = _as_times(t)
        l1 = np.asarray(self._decreasing.cum_hazard(arr))
        l2 = np.asarray(self._increasing.cum_hazard(arr))
        stacked = np.stack([-l1, -l2])
        b = np.array([self.pi, 1.0 - self.pi]).reshape((2,) + (1,) * arr.ndim)
        out = -logsumexp(stacked, axis=0, b=b)
        return _maybe_scalar(out, t)

    def cum_hazard_limit(self) -> float:
        tail = self.pi * math.exp(-self._decreasing.cum_hazard_limit()) + (
            1.0 - self.pi
        ) * math.exp(-self._increasing.cum_hazard_limit())
        return math.inf if tail == 0.0 else -math.log(tail)

    def breakpoints(self) -> np.ndarray:
        return np.unique(
            np.concatenate((self.draw1.ordered.thetas, self.draw2.ordered.thetas))
        )

    @cached_property
    def _knot_values(self) -> tuple[np.ndarray, np.ndarray]:
        knots = np.unique(np.concatenate(([0.0], self.breakpoints())))
        return knots, np.asarray(self.cum_hazard(knots))

    def invert_cum_hazard(self, target):
        arr = np.asarray(target, dtype=float)
        if np.any(arr < 0.0):
            raise ValueError("target must be non-negative")
        limit = self.cum_hazard_limit()
        knots, kvals = self._knot_values
        out = np.empty(arr.shape)
        for pos, x in np.ndenumerate(arr):
            out[pos] = self._invert_scalar(float(x), limit, knots, kvals)
        return _maybe_scalar(out, target)

    def _invert_scalar(self, x, limit, knots, kvals) -> float:
        if x == 0.0:
            return 0.0
        if x >= limit:
            return math.inf
        idx = int(np.searchsorted(kvals, x, side="right")) - 1
        idx = max(idx, 0)
        lo = float(knots[idx])
        if kvals[idx] == x:
            return lo
        if idx + 1 < knots.size:
            hi = float(knots[idx + 1])
        else:
            hi = lo + 1.0
            for _ in range(200):
                if self.cum_hazard(hi) >= x:
                    break
                hi = 2.0 * hi + 1.0
            else:
                # the evaluated curve plateaus below x (target within rounding
                # of a defective limit): unreachable
                return math.inf
        f = lambda s: self.cum_hazard(s) - x
        f_hi = f(hi)
        if f_hi == 0.0:
            return hi
        return float(brentq(f, lo, hi, xtol=1e-14, rtol=_BRENTQ_RTOL, maxiter=200))

    def sample_failure(self, stream: RandomStream) -> float:
        if self.pi == 1.0:  # degenerate mixture, no component pick needed
            return self._decreasing.sample_failure(stream)
        c = stream.categorical((self.pi, 1.0 - self.pi))
        return self.components[c].sample_failure(stream)

    def to_dict(self) -> dict:
        return {
            "model": self.variant,
            "pi": self.pi,
            "lambda01": self.lambda01,
            "draw1": self.draw1.to_dict(),
            "lambda02": self.lambda02,
            "draw2": self.draw2.to_dict(),
        }


@dataclass(eq=False)
class LogConvexHazard(HazardModel):
    """Hazard whose logarithm is piecewise linear and convex.

    log hazard(t) = log(lambda0) + w0*t + sum_k w_k * max(0, t - theta_k):
    a negative w0 gives a bathtub, and the log-slope on each segment is w0
    plus the atom mass accumulated so far.
    """

    lambda0: float
    w0: float
    draw: GammaProcessDraw
    variant = "lcv"

    def __post_init__(self):
        if self.lambda0 <= 0.0:
            raise ValueError(f"lambda0 must be positive, got {self.lambda0}")

    @cached_property
    def _atoms(self) -> _SortedAtoms:
        return _SortedAtoms.of(self.draw)

    @cached_property
    def _pex(self) -> _PiecewiseExponential:
        at = self._atoms
        knots = np.concatenate(([0.0], at.thetas))
        rates = self.w0 + at.mass
        coeffs = self.lambda0 * np.exp(rates * knots - at.moment)
        widths = np.diff(knots)
        if widths.size:
            incs = _PiecewiseExponential._increment(coeffs[:-1], rates[:-1], widths)
            values = np.concatenate(([0.0], np.cumsum(incs)))
        else:
            values = np.array([0.0])
        return _PiecewiseExponential(knots=knots, values=values, rates=rates, coeffs=coeffs)

    def hazard(self, t):
        arr = _as_times(t)
        a = self._atoms
        j = a.count_le(arr)
        out = self.lambda0 * np.exp(self.w0 * arr + arr * a.mass[j] - a.moment[j])
        return _maybe_scalar(out, t)

    def cum_hazard(self, t):
        return self._pex.value(t)

    def cum_hazard_limit(self) -> float:
        return self._pex.limit()

    def invert_cum_hazard(self, target):
        return self._pex.invert(target)

    def breakpoints(self) -> np.ndarray:
        return np.unique(self._atoms.thetas)

    def to_dict(self) -> dict:
        return {
            "model": self.variant,
            "lambda0": self.lambda0,
            "w0": self.w0,
            "draw": self.draw.to_dict(),
        }


def simulate_dataset(
    model: HazardModel, n: int, tau: float | None, stream: RandomStream
) -> Dataset:
    """n independent failure draws, censored at tau when given.

    Draws beyond tau (including infinite ones from defective models) are
    recorded as censored at tau.  A defective model without tau cannot
    produce a complete dataset and is rejected.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if tau is not None and tau <= 0.0:
        raise ValueError(f"tau must be positive, got {tau}")
    if tau is None and math.isfinite(model.cum_hazard_limit()):
        raise ValueError(
            "model is defective (finite total cumulative hazard): "
            "set tau so unbounded draws can be recorded as censored"
        )
    times = np.empty(n)
    observed = np.empty(n, dtype=bool)
    for i in range(n):
        t = model.sample_failure(stream)
        if tau is not None and t > tau:
            times[i] = tau
            observed[i] = False
        else:
            times[i] = t
            observed[i] = True
    return Dataset(times=times, observed=observed, tau=tau)


def draw_model_params(
    variant: str,
    draws,
    hyper: HyperParams,
    stream: RandomStream,
    *,
    a: float | None = None,
    pi: float | None = None,
    draw_pi: bool = False,
) -> HazardModel:
    """Fill a model's scalar parameters from their conditional priors.

    Rate offsets are exponential with mean gamma/nu given each draw's
    total mass; the log-convex model draws log(lambda0) and w0 from
    centred normals with sd gamma/nu.  The bathtub minimum ``a`` and the
    mixture weight ``pi`` have no standard prior and must be supplied
    (``draw_pi=True`` draws pi uniformly as an extension).
    """
    draws = list(draws)
    expected = 2 if variant in ("sbt", "mbt") else 1
    if len(draws) != expected:
        raise ValueError(f"{variant} needs {expected} draw(s), got {len(draws)}")

    def offset(draw: GammaProcessDraw) -> float:
        if draw.gamma <= 0.0:
            raise ValueError("draw has zero total mass; offset prior is undefined")
        return stream.exponential(hyper.nu / draw.gamma)

    if variant == "ifr":
        return IncreasingFailureRate(offset(draws[0]), draws[0])
    if variant == "dfr":
        return DecreasingFailureRate(offset(draws[0]), draws[0])
    if variant == "lwb":
        if a is None:
            raise ValueError("lwb requires the symmetry point a (no prior is defined)")
        return LoWengBathtub(offset(draws[0]), a, draws[0])
    if variant == "sbt":
        return SuperpositionBathtub(offset(draws[1]), draws[0], draws[1])
    if variant == "mbt":
        lam1 = offset(draws[0])
        lam2 = offset(draws[1])
        if pi is None:
            if not draw_pi:
                raise ValueError(
                    "mbt requires the mixture weight pi (or draw_pi=True for a "
                    "uniform draw, an extension with no standard prior)"
                )
            pi = stream.uniform()
        return MixtureBathtub(pi, lam1, draws[0], lam2, draws[1])
    if variant == "lcv":
        if draws[0].gamma <= 0.0:
            raise ValueError("draw has zero total mass; scalar priors are undefined")
        scale = draws[0].gamma / hyper.nu
        lam0 = math.exp(stream.normal(0.0, scale))
        w0 = stream.normal(0.0, scale)
        return LogConvexHazard(lam0, w0, draws[0])
    raise ValueError(f"unknown model variant: {variant!r}")


def model_to_dict(model: HazardModel) -> dict:
    return model.to_dict()


def model_from_dict(d: dict) -> HazardModel:
    variant = d.get("model")
    if variant == "ifr":
        return IncreasingFailureRate(float(d["lambda0"]), GammaProcessDraw.from_dict(d["draw"]))
    if variant == "dfr":
        return DecreasingFailureRate(float(d["lambda0"]), GammaProcessDraw.from_dict(d["draw"]))
    if variant == "lwb":
        return LoWengBathtub(
            float(d["lambda0"]), float(d["a"]), GammaProcessDraw.from_dict(d["draw"])
        )
    if variant == "sbt":
        return SuperpositionBathtub(
            float(d["lambda0"]),
            GammaProcessDraw.from_dict(d["draw1"]),
            GammaProcessDraw.from_dict(d["draw2"]),
        )
    if variant == "mbt":
        return MixtureBathtub(
            float(d["pi"]),
            float(d["lambda01"]),
            GammaProcessDraw.from_dict(d["draw1"]),
            float(d["lambda02"]),
            GammaProcessDraw.from_dict(d["draw2"]),
        )
    if variant == "lcv":
        return LogConvexHazard(
            float(d["lambda0"]), float(d["w0"]), GammaProcessDraw.from_dict(d["draw"])
        )
    raise ValueError(f"unknown model variant: {variant!r}")
