"""Reliability over time for networks with decaying edges.

Edge e survives to time t with probability p_e(t) = exp(-lambda_e t) (or
holds a constant probability, for profiles frozen in time).  Pushing these
probabilities through the threshold assessment gives a decreasing curve
Rel_c(t); the time at which it crosses the percolation threshold p_c is one
lifetime notion, the integral of the curve (mean time to failure) another,
and the slope of 1 - Rel_c(t) gives the failure density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assessment import AssessmentConfig, rel_c_heterogeneous, rel_c_homogeneous


class NoCrossingError(RuntimeError):
    """Raised when Rel_c(t) never reaches the threshold inside the horizon."""


@dataclass(frozen=True)
class ExponentialDecayProfile:
    """Per-edge exponential survival: p_e(t) = exp(-rates[e] * t)."""

    rates: tuple

    def __post_init__(self):
        rates = tuple(float(r) for r in self.rates)
        if not rates:
            raise ValueError("profile needs at least one edge")
        if any(not math.isfinite(r) or r < 0.0 for r in rates):
            raise ValueError("decay rates must be finite and >= 0")
        object.__setattr__(self, "rates", rates)

    @classmethod
    def shared(cls, rate, edge_count):
        return cls(rates=(float(rate),) * int(edge_count))

    @property
    def edge_count(self):
        return len(self.rates)

    @property
    def is_homogeneous(self):
        return len(set(self.rates)) == 1

    def probabilities(self, t):
        t = float(t)
        if t < 0.0:
            raise ValueError(f"time must be >= 0, got {t}")
        return np.exp(-np.asarray(self.rates) * t)


@dataclass(frozen=True)
class ConstantProfile:
    """Time-independent edge probabilities (degenerate profile)."""

    probs: tuple

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        if not probs:
            raise ValueError("profile needs at least one edge")
        if any(not (0.0 <= p <= 1.0) for p in probs):
            raise ValueError("probabilities must lie in [0, 1]")
        object.__setattr__(self, "probs", probs)

    @property
    def edge_count(self):
        return len(self.probs)

    @property
    def is_homogeneous(self):
        return len(set(self.probs)) == 1

    def probabilities(self, t):
        if float(t) < 0.0:
            raise ValueError(f"time must be >= 0, got {t}")
        return np.asarray(self.probs, dtype=np.float64)


def evaluate_profile(profile, t):
    """Edge survival probabilities at time t."""
    return profile.probabilities(t)


def _rel_c_at(profile, config, t):
    probs = profile.probabilities(t)
    if profile.is_homogeneous:
        return rel_c_homogeneous(config.N, config.M_c, float(probs[0]))
    return rel_c_heterogeneous(probs, config.M_c)


@dataclass(frozen=True)
class ReliabilityCurve:
    """Rel_c sampled on an increasing time grid."""

    times: tuple
    values: tuple

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        values = tuple(float(v) for v in self.values)
        if len(times) != len(values):
            raise ValueError("times and values must have equal length")
        if len(times) < 2:
            raise ValueError("curve needs at least two samples")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("times must be strictly increasing")
        if any(not (0.0 <= v <= 1.0) for v in values):
            raise ValueError("curve values must lie in [0, 1]")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)


def time_grid(start, end, step):
    """Inclusive-start grid; the end point is included when the step lands on it."""
    start = float(start)
    end = float(end)
    step = float(step)
    if step <= 0.0:
        raise ValueError("step must be > 0")
    if end <= start:
        raise ValueError("end must exceed start")
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    return tuple(start + i * step for i in range(count))


def reliability_curve(profile, config, grid):
    """Sample Rel_c under the profile on the given time grid."""
    if profile.edge_count != config.N:
        raise ValueError(
            f"profile has {profile.edge_count} edges but config expects {config.N}"
        )
    times = tuple(float(t) for t in grid)
    values = tuple(_rel_c_at(profile, config, t) for t in times)
    return ReliabilityCurve(times=times, values=values)


@dataclass(frozen=True)
class CrossingResult:
    """Where Rel_c(t) falls to the percolation threshold.

    ``edge_level_time`` solves p(t) = p_c directly and is reported for
    shared-rate exponential profiles only; with many edges the operational
    count concentrates and the two times nearly coincide.
    """

    time: float
    edge_level_time: float | None


_DEFAULT_HORIZON_FLOOR = 1e4


def lifetime_threshold_crossing(profile, config, tol=1e-6, horizon=None):
    """First time Rel_c(t) falls to p_c, located by bracketing and bisection.

    Returns time 0.0 when the curve already starts at or below the threshold.
    Raises NoCrossingError when the curve stays above p_c over the whole
    horizon (by default: long enough for every decaying edge to fall to 1e-4).
    """
    if profile.edge_count != config.N:
        raise ValueError(
            f"profile has {profile.edge_count} edges but config expects {config.N}"
        )
    target = config.p_c

    edge_level = None
    if isinstance(profile, ExponentialDecayProfile) and profile.is_homogeneous:
        rate = profile.rates[0]
        if rate > 0.0 and target > 0.0:
            edge_level = math.log(1.0 / target) / rate if target < 1.0 else 0.0

    if _rel_c_at(profile, config, 0.0) <= target:
        return CrossingResult(time=0.0, edge_level_time=edge_level)

    if horizon is None:
        if isinstance(profile, ExponentialDecayProfile):
            positive = [r for r in profile.rates if r > 0.0]
            horizon = _DEFAULT_HORIZON_FLOOR
            if positive:
                horizon = min(horizon, math.log(1e4) / min(positive))
        else:
            horizon = _DEFAULT_HORIZON_FLOOR
    horizon = float(horizon)

    lo = 0.0
    hi = None
    steps = 256
    for i in range(1, steps + 1):
        t = horizon * i / steps
        if _rel_c_at(profile, config, t) <= target:
            hi = t
            break
        lo = t
    if hi is None:
        raise NoCrossingError(
            f"Rel_c stays above p_c = {target} out to t = {horizon}; "
            "pass a larger horizon if the curve decays further"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _rel_c_at(profile, config, mid) <= target:
            hi = mid
        else:
            lo = mid
    return CrossingResult(time=0.5 * (lo + hi), edge_level_time=edge_level)


@dataclass(frozen=True)
class IntegralResult:
    """Trapezoidal integral of a reliability curve (mean time to failure).

    ``tail_bound`` extrapolates the leftover area past the grid geometrically
    from the last two samples; ``decayed`` records whether the curve ended at
    or below the requested tail tolerance.
    """

    value: float
    tail_bound: float
    decayed: bool


def lifetime_integral(curve, tail_tolerance=1e-4):
    """Integrate Rel_c over the sampled grid by the trapezoid rule."""
    times = np.asarray(curve.times)
    values = np.asarray(curve.values)
    area = float(np.trapezoid(values, times))
    last = float(values[-1])
    prev = float(values[-2])
    decayed = last <= tail_tolerance
    if last == 0.0:
        tail = 0.0
    elif last < prev:
        ratio = last / prev
        tail = last * (times[-1] - times[-2]) * ratio / (1.0 - ratio)
    else:
        tail = math.inf
    return IntegralResult(value=area, tail_bound=float(tail), decayed=decayed)


@dataclass(frozen=True)
class FailureDensity:
    """Sampled failure density f(t) = d/dt [1 - Rel_c(t)]."""

    times: tuple
    values: tuple


def failure_density(curve):
    """Differentiate 1 - Rel_c(t) by central differences (one-sided at the ends)."""
    times = np.asarray(curve.times)
    failure = 1.0 - np.asarray(curve.values)
    if times.size < 3:
        raise ValueError("need at least three samples to differentiate")
    out = np.gradient(failure, times)
    return FailureDensity(times=tuple(times.tolist()), values=tuple(out.tolist()))
