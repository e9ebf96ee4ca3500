"""Bond percolation thresholds on random graphs with given degree distribution.

The threshold for a configuration-model graph is p_c = <k> / (<k^2> - <k>):
above it a giant component occupies a finite fraction of an infinite graph.
A giant component exists at all only when the Molloy-Reed condition
<k^2>/<k> > 2 holds; when the second moment diverges (scale-free tails with
gamma <= 3) the threshold vanishes and any positive retention percolates.

Closed forms are provided for the power-law-with-cutoff family (polylogarithm
ratios), the pure power law (zeta ratios), and a continuum approximation for
power laws truncated to [k_min, k_max].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .degree import (
    DivergenceError,
    TruncatedPowerLaw,
    polylog,
    zeta,
)


class NoGiantComponentError(ValueError):
    """Raised when the degree distribution cannot sustain a giant component."""


class FixedPointError(RuntimeError):
    """Raised when the generating-function fixed point cannot be located."""


@dataclass(frozen=True)
class ThresholdReport:
    """Bond percolation threshold with the context needed to read it.

    p_c is the occupation probability above which a giant component appears;
    g_c = 1 - p_c is the matching removal-fraction threshold.  ``meaningful``
    flags p_c in (0, 1): a vanishing threshold means the graph percolates at
    any positive retention, and p_c >= 1 means it never does.
    """

    p_c: float
    molloy_reed_satisfied: bool
    second_moment_divergent: bool

    @property
    def g_c(self):
        return 1.0 - self.p_c

    @property
    def meaningful(self):
        return 0.0 < self.p_c < 1.0

    def to_dict(self):
        return {
            "p_c": self.p_c,
            "g_c": self.g_c,
            "molloy_reed_satisfied": self.molloy_reed_satisfied,
            "second_moment_divergent": self.second_moment_divergent,
            "meaningful": self.meaningful,
        }


def bond_threshold(dist):
    """Threshold from the distribution's moments: p_c = <k> / (<k^2> - <k>)."""
    mom = dist.moments()
    if mom.mean_divergent:
        raise DivergenceError("mean degree diverges; threshold undefined")
    if mom.mean <= 0.0:
        raise NoGiantComponentError("mean degree is zero; no giant component possible")
    if mom.second_moment_divergent:
        # diverging second moment drives the threshold to zero
        return ThresholdReport(
            p_c=0.0, molloy_reed_satisfied=True, second_moment_divergent=True
        )
    denom = mom.second_moment - mom.mean
    if denom <= 0.0:
        raise NoGiantComponentError(
            "all degrees are 0 or 1 (<k^2> <= <k>); no giant component possible"
        )
    return ThresholdReport(
        p_c=mom.mean / denom,
        molloy_reed_satisfied=mom.second_moment / mom.mean > 2.0,
        second_moment_divergent=False,
    )


def threshold_power_cutoff(gamma, kappa):
    """Closed-form threshold for p_k ~ k^-gamma e^(-k/kappa).

    p_c = Li_{gamma-1}(x) / (Li_{gamma-2}(x) - Li_{gamma-1}(x)) at x = e^(-1/kappa).
    """
    kappa = float(kappa)
    if not math.isfinite(kappa) or kappa <= 0.0:
        raise ValueError(f"kappa must be finite and > 0, got {kappa}")
    x = math.exp(-1.0 / kappa)
    li_1 = polylog(float(gamma) - 1.0, x)
    li_2 = polylog(float(gamma) - 2.0, x)
    denom = li_2 - li_1
    if denom <= 0.0:
        raise NoGiantComponentError(
            "cutoff too sharp: <k^2> <= <k>, no giant component possible"
        )
    return ThresholdReport(
        p_c=li_1 / denom,
        molloy_reed_satisfied=li_2 / li_1 > 2.0,
        second_moment_divergent=False,
    )


def threshold_zeta(gamma):
    """Closed-form threshold for the pure power law p_k ~ k^-gamma.

    For gamma <= 3 the second moment diverges and p_c = 0; for gamma > 3,
    p_c = zeta(gamma-1) / (zeta(gamma-2) - zeta(gamma-1)).  gamma <= 2 leaves
    the mean divergent and the threshold undefined.
    """
    gamma = float(gamma)
    if gamma <= 2.0:
        raise DivergenceError(
            f"mean degree diverges for gamma <= 2 (got {gamma}); threshold undefined"
        )
    if gamma <= 3.0:
        return ThresholdReport(
            p_c=0.0, molloy_reed_satisfied=True, second_moment_divergent=True
        )
    z1 = zeta(gamma - 1.0)
    z2 = zeta(gamma - 2.0)
    return ThresholdReport(
        p_c=z1 / (z2 - z1),
        molloy_reed_satisfied=z2 / z1 > 2.0,
        second_moment_divergent=False,
    )


def threshold_truncated(gamma, k_min, k_max):
    """Continuum-approximation threshold for a power law on [k_min, k_max].

    For 2 < gamma < 3:
        p_c = 1 / ((gamma-2)/(3-gamma) * k_min^(gamma-2) * k_max^(3-gamma) - 1)
    and for gamma > 3 the k_max dependence drops out:
        p_c = 1 / ((gamma-2)/(gamma-3) * k_min - 1).
    gamma <= 2 (divergent mean) and gamma = 3 (logarithmic marginal case) are
    not covered by either branch.
    """
    gamma = float(gamma)
    k_min = int(k_min)
    k_max = int(k_max)
    if k_min < 1 or k_max < k_min:
        raise ValueError(f"need 1 <= k_min <= k_max, got [{k_min}, {k_max}]")
    if gamma <= 2.0 or gamma == 3.0:
        raise ValueError(
            f"closed form requires 2 < gamma < 3 or gamma > 3, got {gamma}"
        )
    if gamma < 3.0:
        ratio = (gamma - 2.0) / (3.0 - gamma) * k_min ** (gamma - 2.0) * k_max ** (
            3.0 - gamma
        )
    else:
        ratio = (gamma - 2.0) / (gamma - 3.0) * k_min
    denom = ratio - 1.0
    if denom <= 0.0:
        raise NoGiantComponentError(
            "degenerate support: continuum moment ratio <= 1, threshold undefined"
        )
    # flags reflect the actual discrete distribution on [k_min, k_max]
    mom = TruncatedPowerLaw(gamma, k_min, k_max).moments()
    return ThresholdReport(
        p_c=1.0 / denom,
        molloy_reed_satisfied=mom.second_moment / mom.mean > 2.0,
        second_moment_divergent=False,
    )


class FixedPointResult(NamedTuple):
    """Smallest fixed point of the edge-occupation generating function."""

    root: float
    nontrivial: bool


_NONTRIVIAL_MARGIN = 1e-8


def solve_fixed_point(dist, p_e, tol=1e-12, max_iter=10**6):
    """Solve x = 1 - p_e + p_e * sum_k q_k x^(k-1) for the smallest root in [0, 1].

    q_k is the excess degree pmf (over the adaptively truncated support,
    renormalized so x = 1 is a fixed point to machine precision).  The root is
    the extinction probability of the branching process that explores a
    component edge by edge: a root below 1 means a giant component survives
    occupation probability p_e.  Iteration starts at 0, which converges to the
    smallest root from below; a geometric remaining-distance correction is
    applied at the stopping point and bisection serves as a fallback.
    """
    p_e = float(p_e)
    if not (0.0 <= p_e <= 1.0):
        raise ValueError(f"p_e must lie in [0, 1], got {p_e}")
    mom = dist.moments()
    if mom.mean_divergent:
        raise DivergenceError("excess degrees undefined: mean degree diverges")
    if mom.mean <= 0.0:
        raise ValueError("excess degrees undefined: mean degree is zero")
    ks, ps = dist.support()
    live = ks >= 1
    weights = ks[live] * ps[live]
    weights = weights / weights.sum()
    expo = ks[live].astype(np.float64) - 1.0

    def h(x):
        return 1.0 - p_e + p_e * float(np.dot(weights, x**expo))

    if p_e == 0.0:
        return FixedPointResult(root=1.0, nontrivial=False)

    x = 0.0
    prev_delta = None
    root = None
    for _ in range(int(max_iter)):
        x_new = h(x)
        delta = x_new - x
        if delta <= tol:
            root = x_new
            if prev_delta is not None and prev_delta > 0.0:
                rate = delta / prev_delta
                if 0.0 < rate < 1.0:
                    root = min(1.0, x_new + delta * rate / (1.0 - rate))
            break
        prev_delta = delta
        x = x_new
    if root is None:
        # iteration budget exhausted; fall back to bisection on g(t) = h(t) - t
        lo = x
        hi = None
        for t in np.linspace(x, 1.0, 4097)[1:-1]:
            if h(float(t)) - float(t) < 0.0:
                hi = float(t)
                break
            lo = float(t)
        if hi is None:
            root = 1.0
        else:
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                if h(mid) - mid < 0.0:
                    hi = mid
                else:
                    lo = mid
            root = 0.5 * (lo + hi)
    residual = abs(h(root) - root)
    if residual > 1e-6:
        raise FixedPointError(f"fixed point not located: residual {residual:.3e}")
    if root > 1.0 - _NONTRIVIAL_MARGIN:
        return FixedPointResult(root=1.0, nontrivial=False)
    return FixedPointResult(root=float(root), nontrivial=True)
