"""Monte Carlo oracles: reliability estimation, inverse percolation, generators.

All randomness flows through numpy's counter-based Philox generator, so every
result is reproducible from (seed, trial count) alone and identical across
kernel backends: uniform draws happen in the numpy layer and only the
deterministic connectivity work moves into the compiled kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph

RNG_ALGORITHM = "philox4x64"

_TRIAL_BLOCK = 1 << 16


def _rng(seed):
    return np.random.Generator(np.random.Philox(key=int(seed)))


@dataclass(frozen=True)
class SimulationResult:
    """Monte Carlo estimate with its binomial standard error."""

    estimate: float
    standard_error: float
    trials: int
    seed: int


def estimate_reliability(g, probs, trials, seed=0):
    """Estimate all-terminal reliability by sampling edge states.

    Each trial keeps edge e with probability probs[e] and scores whether the
    kept edges connect all nodes.  Uniform draws are consumed in row-major
    trial order, so estimates for a given seed are prefix-consistent in the
    trial count.
    """
    trials = int(trials)
    if trials <= 0:
        raise ValueError("trials must be positive")
    probs = np.asarray(probs, dtype=np.float64)
    if probs.shape != (g.edge_count,):
        raise ValueError(
            f"expected {g.edge_count} edge probabilities, got shape {probs.shape}"
        )
    if not np.all((probs >= 0.0) & (probs <= 1.0)):
        raise ValueError("edge probabilities must lie in [0, 1]")
    eu, ev = g.edge_arrays()
    rng = _rng(seed)
    hits = 0
    if g.edge_count == 0 or g.node_count <= 1:
        hits = trials if g.node_count <= 1 else 0
    else:
        done = 0
        while done < trials:
            block = min(_TRIAL_BLOCK, trials - done)
            u = rng.random((block, g.edge_count))
            masks = (u < probs).astype(np.uint8)
            hits += kernels.count_connected_masks(g.node_count, eu, ev, masks)
            done += block
    estimate = hits / trials
    stderr = math.sqrt(estimate * (1.0 - estimate) / trials)
    return SimulationResult(
        estimate=float(estimate),
        standard_error=float(stderr),
        trials=trials,
        seed=int(seed),
    )


@dataclass(frozen=True)
class PercolationSweep:
    """Mean largest-component fraction against removed-edge fraction.

    ``g_c`` is the smallest swept fraction at which the mean fraction drops
    below the giant-component cutoff used for the sweep (None if it never
    does).
    """

    fractions: tuple
    mean_largest_fractions: tuple
    g_c: float | None


def inverse_percolation_sweep(g, fractions, trials, seed=0, giant_threshold=0.05):
    """Estimate the giant-component breakdown under random edge removal.

    For each trial one random edge permutation is drawn and the largest
    component is tracked while edges are inserted one by one; every removal
    fraction is then read off the same growth curve (removing a fraction f
    means keeping the first |E| - ceil(f |E|) edges of the permutation).
    """
    trials = int(trials)
    if trials <= 0:
        raise ValueError("trials must be positive")
    if g.node_count == 0:
        raise ValueError("graph has no nodes")
    fr = [float(f) for f in fractions]
    if not fr:
        raise ValueError("no removal fractions given")
    if any(not (0.0 <= f <= 1.0) for f in fr):
        raise ValueError("removal fractions must lie in [0, 1]")
    if any(b <= a for a, b in zip(fr, fr[1:])):
        raise ValueError("removal fractions must be strictly increasing")
    m = g.edge_count
    eu, ev = g.edge_arrays()
    # kept-edge count per fraction; the 1e-9 slack absorbs float grid artifacts
    kept = [m - min(m, int(math.ceil(f * m - 1e-9))) for f in fr]
    rng = _rng(seed)
    acc = np.zeros(len(fr), dtype=np.float64)
    for _ in range(trials):
        order = rng.permutation(m).astype(np.int64)
        growth = kernels.largest_component_growth(g.node_count, eu, ev, order)
        acc += growth[kept] / g.node_count
    means = acc / trials
    g_c = None
    for f, mean in zip(fr, means):
        if mean < giant_threshold:
            g_c = f
            break
    return PercolationSweep(
        fractions=tuple(fr),
        mean_largest_fractions=tuple(float(v) for v in means),
        g_c=g_c,
    )


def sample_degrees(dist, count, seed=0):
    """Draw a degree sequence i.i.d. from a distribution by inverse CDF."""
    count = int(count)
    if count <= 0:
        raise ValueError("count must be positive")
    ks, ps = dist.support()
    cdf = np.cumsum(ps)
    cdf[-1] = max(cdf[-1], 1.0)
    rng = _rng(seed)
    draws = rng.random(count)
    idx = np.searchsorted(cdf, draws, side="right")
    return [int(k) for k in ks[np.minimum(idx, ks.size - 1)]]


def degrees_for_target_edges(dist, target_edges, seed=0):
    """Draw degrees until their sum reaches 2 * target_edges, then fix parity.

    Grows the sequence node by node, so the realized edge count of a
    configuration-model graph built from it lands at the target up to the
    final node's degree (and any erased collisions).
    """
    target_edges = int(target_edges)
    if target_edges <= 0:
        raise ValueError("target_edges must be positive")
    ks, ps = dist.support()
    cdf = np.cumsum(ps)
    cdf[-1] = max(cdf[-1], 1.0)
    rng = _rng(seed)
    degrees = []
    total = 0
    while total < 2 * target_edges:
        draws = rng.random(256)
        idx = np.minimum(np.searchsorted(cdf, draws, side="right"), ks.size - 1)
        for k in ks[idx]:
            degrees.append(int(k))
            total += int(k)
            if total >= 2 * target_edges:
                break
    if total % 2 == 1:
        degrees.append(1)
    return degrees


def generate_configuration_model(degrees, seed=0):
    """Configuration-model graph with erasure of self-loops and duplicates.

    Stubs are paired by one random permutation; collisions are dropped, so
    realized degrees can fall slightly below the requested ones.  The result
    is always a simple graph.
    """
    degrees = [int(d) for d in degrees]
    if not degrees:
        raise ValueError("degree sequence is empty")
    if min(degrees) < 0:
        raise ValueError("degrees must be nonnegative")
    if sum(degrees) % 2 != 0:
        raise ValueError("degree sum must be even to pair stubs")
    stubs = np.repeat(np.arange(len(degrees)), degrees)
    rng = _rng(seed)
    stubs = rng.permutation(stubs)
    edges = []
    seen = set()
    for a, b in stubs.reshape(-1, 2):
        u, v = int(a), int(b)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return Graph(len(degrees), edges)


def generate_inhomogeneous(n, edge_probs, seed=0):
    """Independent-edge random graph: pair (u, v) appears with its own probability.

    ``edge_probs`` maps node pairs to probabilities; pairs are sampled in
    sorted order for reproducibility.
    """
    n = int(n)
    if n < 0:
        raise ValueError("node count must be nonnegative")
    pairs = []
    for (u, v), p in edge_probs.items():
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"pair ({u}, {v}) is a self-loop")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"pair ({u}, {v}) out of range for {n} nodes")
        key = (u, v) if u < v else (v, u)
        p = float(p)
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"probability for pair {key} must lie in [0, 1]")
        pairs.append((key, p))
    pairs.sort()
    for (a, _), (b, _) in zip(pairs, pairs[1:]):
        if a == b:
            raise ValueError(f"pair {a} given twice")
    rng = _rng(seed)
    draws = rng.random(len(pairs))
    edges = [key for (key, p), x in zip(pairs, draws) if x < p]
    return Graph(n, edges)


def uniform_pair_probs(n, p):
    """All-pairs probability map for generate_inhomogeneous."""
    p = float(p)
    return {(i, j): p for i in range(int(n)) for j in range(i + 1, int(n))}
