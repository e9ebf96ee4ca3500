"""Threshold-based reliability assessment of finite networks.

A network with N edges is judged operational while more than
M_c = floor(p_c * N) of them work, where p_c is a percolation threshold for
the graph's degree structure.  The resulting reliability

    Rel_c = P(X > M_c),  X = number of operational edges,

needs only the distribution of the operational-edge count: a binomial tail
when all edges share one probability, a Poisson-binomial tail in general, and
a truncated Poisson tail as a cheap approximation whose total-variation error
is bounded by 2 * sum(p_e^2) (Le Cam).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels

# tolerates float artifacts like 6 * (1/3) = 1.9999...; a true p_c * N within
# 1e-9 below an integer counts as reaching it
_FLOOR_EPS = 1e-9


def critical_edge_count(n_edges, p_c):
    """M_c = floor(p_c * N), the highest operational-edge count that still fails."""
    n_edges = int(n_edges)
    if n_edges < 0:
        raise ValueError("edge count must be nonnegative")
    p_c = float(p_c)
    if not (0.0 <= p_c <= 1.0):
        raise ValueError(f"p_c must lie in [0, 1], got {p_c}")
    return min(n_edges, int(math.floor(p_c * n_edges + _FLOOR_EPS)))


@dataclass(frozen=True)
class AssessmentConfig:
    """Edge count and threshold driving a Rel_c assessment."""

    N: int
    p_c: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 0:
            raise ValueError("N must be a nonnegative integer")
        if not (0.0 <= self.p_c <= 1.0):
            raise ValueError(f"p_c must lie in [0, 1], got {self.p_c}")

    @property
    def M_c(self):
        return critical_edge_count(self.N, self.p_c)


def _validate_m_c(m_c, n):
    m_c = int(m_c)
    if not (0 <= m_c <= n):
        raise ValueError(f"M_c must lie in [0, {n}], got {m_c}")
    return m_c


def _binomial_pmf(n, p):
    # mode-anchored multiplicative recurrence: underflows far from the mode
    # instead of overflowing, then self-normalizes
    mode = min(n, int(math.floor((n + 1) * p)))
    i_up = np.arange(mode + 1, n + 1, dtype=np.float64)
    up = np.cumprod((n - i_up + 1.0) / i_up * (p / (1.0 - p))) if i_up.size else i_up
    i_dn = np.arange(mode, 0, -1, dtype=np.float64)
    down = np.cumprod(i_dn / (n - i_dn + 1.0) * ((1.0 - p) / p)) if i_dn.size else i_dn
    pmf = np.concatenate([down[::-1], [1.0], up])
    return pmf / pmf.sum()


def rel_c_homogeneous(n_edges, m_c, p):
    """P(X > M_c) for X ~ Binomial(N, p)."""
    n = int(n_edges)
    if n < 0:
        raise ValueError("edge count must be nonnegative")
    m_c = _validate_m_c(m_c, n)
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if m_c == n:
        return 0.0
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0
    pmf = _binomial_pmf(n, p)
    return float(min(1.0, max(0.0, pmf[m_c + 1 :].sum())))


def rel_c_heterogeneous(probs, m_c):
    """P(X > M_c) for X a sum of independent Bernoulli(p_e) indicators."""
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 1:
        raise ValueError("probs must be a 1-d sequence")
    if not np.all((probs >= 0.0) & (probs <= 1.0)):
        raise ValueError("edge probabilities must lie in [0, 1]")
    m_c = _validate_m_c(m_c, probs.size)
    if m_c == probs.size:
        return 0.0
    pmf = kernels.poisson_binomial_pmf(probs)
    return float(min(1.0, max(0.0, pmf[m_c + 1 :].sum())))


def rel_c_poisson_approx(probs, m_c):
    """Poisson approximation of the heterogeneous tail, truncated at N.

    X is approximated by Poisson(mu) with mu = sum(p_e), and the tail
    P(M_c < X <= N) is returned together with mu.
    """
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 1:
        raise ValueError("probs must be a 1-d sequence")
    if not np.all((probs >= 0.0) & (probs <= 1.0)):
        raise ValueError("edge probabilities must lie in [0, 1]")
    n = probs.size
    m_c = _validate_m_c(m_c, n)
    mu = float(probs.sum())
    if m_c == n or mu == 0.0:
        return 0.0, mu
    ks = np.arange(m_c + 1, n + 1, dtype=np.float64)
    log_terms = ks * math.log(mu) - mu - np.array([math.lgamma(k + 1.0) for k in ks])
    tail = float(np.exp(log_terms).sum())
    return float(min(1.0, max(0.0, tail))), mu


def le_cam_bound(probs):
    """Le Cam bound 2 * sum(p_e^2) on the Poisson approximation's total variation."""
    probs = np.asarray(probs, dtype=np.float64)
    if not np.all((probs >= 0.0) & (probs <= 1.0)):
        raise ValueError("edge probabilities must lie in [0, 1]")
    return float(2.0 * np.sum(probs * probs))


def node_voting_reliability(n_nodes, p_c, r):
    """Majority-style comparator: P(more than floor(p_c * n) of n nodes work).

    Treats nodes as the redundant components, each operational independently
    with probability r.
    """
    n_nodes = int(n_nodes)
    if n_nodes <= 0:
        raise ValueError("node count must be positive")
    cutoff = critical_edge_count(n_nodes, p_c)
    return rel_c_homogeneous(n_nodes, cutoff, r)
