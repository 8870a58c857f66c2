"""Model-free estimators and goodness-of-fit statistics.

Kaplan-Meier product-limit survival curves (as right-continuous step
functions), the one-sample Kolmogorov-Smirnov distance against an
analytic CDF, and simple fixed-width histograms over [0, max].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .datasets import Dataset

__all__ = ["StepFunction", "kaplan_meier", "ks_distance", "histogram"]


@dataclass(eq=False)
class StepFunction:
    """Right-continuous piecewise-constant function.

    ``values[i]`` is the level from ``breakpoints[i]`` (inclusive) up to
    the next breakpoint; ``initial`` is the level before the first
    breakpoint.
    """

    breakpoints: np.ndarray
    values: np.ndarray
    initial: float

    def __post_init__(self):
        self.breakpoints = np.asarray(self.breakpoints, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.breakpoints.shape != self.values.shape or self.breakpoints.ndim != 1:
            raise ValueError("breakpoints and values must be 1-d arrays of equal length")
        if np.any(np.diff(self.breakpoints) <= 0.0):
            raise ValueError("breakpoints must be strictly increasing")

    def __call__(self, t):
        levels = np.concatenate(([self.initial], self.values))
        idx = np.searchsorted(self.breakpoints, t, side="right")
        out = levels[idx]
        return float(out) if np.ndim(t) == 0 else out

    def to_csv(self, path) -> None:
        lines = ["t,value"]
        for b, v in zip(self.breakpoints, self.values):
            lines.append(f"{float(b)!r},{float(v)!r}")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def kaplan_meier(dataset: Dataset) -> StepFunction:
    """Product-limit survival estimate.

    At each distinct observed failure time the survival drops by the
    factor (1 - deaths/at-risk); censored records only shrink the risk
    sets.  Records censored exactly at a failure time still count as at
    risk there (deaths are processed first).  The running product is
    accumulated in exact rational arithmetic, so with no censoring the
    estimate telescopes to (at risk)/(n) without rounding drift.
    """
    if dataset.n == 0:
        raise ValueError("dataset must be non-empty")
    times = dataset.times
    observed = dataset.observed
    event_times = np.unique(times[observed])
    if event_times.size == 0:
        # everything censored: the estimate never leaves 1
        return StepFunction(breakpoints=np.array([]), values=np.array([]), initial=1.0)
    surv = np.empty(event_times.size)
    s = Fraction(1)
    for i, t in enumerate(event_times):
        at_risk = int(np.sum(times >= t))
        deaths = int(np.sum((times == t) & observed))
        s *= Fraction(at_risk - deaths, at_risk)
        surv[i] = float(s)
    return StepFunction(breakpoints=event_times, values=surv, initial=1.0)


def ks_distance(samples, cdf) -> float:
    """One-sample Kolmogorov-Smirnov statistic against a (vectorized) CDF.

    sup over the sorted sample of max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|).
    """
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.size
    if n == 0:
        raise ValueError("samples must be non-empty")
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))


def histogram(samples, bin_count: int | None = None, bin_width: float | None = None):
    """Equal-width histogram over [0, max(samples)]; counts sum to the sample size.

    Returns (edges, counts) with len(edges) == len(counts) + 1.
    """
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise ValueError("samples must be non-empty")
    if np.any(x < 0.0):
        raise ValueError("samples must be non-negative")
    if (bin_count is None) == (bin_width is None):
        raise ValueError("give exactly one of bin_count or bin_width")
    hi = float(x.max())
    if hi <= 0.0:
        raise ValueError("samples must have a positive maximum")
    if bin_count is not None:
        if bin_count < 1:
            raise ValueError(f"bin_count must be >= 1, got {bin_count}")
        edges = np.linspace(0.0, hi, bin_count + 1)
    else:
        if bin_width <= 0.0:
            raise ValueError(f"bin_width must be positive, got {bin_width}")
        m = max(1, int(np.ceil(hi / bin_width)))
        edges = bin_width * np.arange(m + 1)
        if edges[-1] < hi:  # guard against ceil rounding under fp division
            edges = np.append(edges, edges[-1] + bin_width)
    counts, edges = np.histogram(x, bins=edges)
    return edges, counts
