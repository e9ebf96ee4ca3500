"""Exact all-terminal reliability.

Two routes are provided.  Subset enumeration walks all 2^m edge subsets (via
the compiled kernel when available) and yields both the reliability value and
the F-coefficients of the reliability polynomial

    Rel(p) = sum_i F_i (1-p)^i p^(m-i),

where F_i counts connected spanning subgraphs with m-i edges present.
Deletion-contraction factoring handles heterogeneous probabilities without
the exponential table and is often far cheaper thanks to bridge and
parallel-edge shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph, GraphError, _DisjointSet

DEFAULT_ENUMERATION_CAP = 24


class EnumerationCapError(ValueError):
    """Raised when a graph is too large for exact subset enumeration."""


@dataclass(frozen=True)
class FCoefficients:
    """F-form coefficients of the reliability polynomial.

    ``counts[i]`` is the number of connected spanning subgraphs with i edges
    *failed* (m - i present).  ``counts`` has length m + 1.
    """

    counts: tuple
    node_count: int
    edge_count: int

    def __post_init__(self):
        if len(self.counts) != self.edge_count + 1:
            raise ValueError("counts must have length edge_count + 1")

    @property
    def spanning_trees(self):
        """Number of spanning trees (the last nonzero coefficient for connected graphs)."""
        idx = self.edge_count - (self.node_count - 1)
        if idx < 0:
            return 0
        return self.counts[idx]


def _check_cap(m, cap):
    if m > cap:
        raise EnumerationCapError(
            f"graph has {m} edges, above the exact enumeration cap of {cap}; "
            "raise the cap or use factoring / Monte Carlo"
        )


def _popcounts(size):
    return np.bitwise_count(np.arange(size, dtype=np.uint32))


def f_coefficients(g, cap=DEFAULT_ENUMERATION_CAP):
    """Count connected spanning subgraphs by number of failed edges.

    Enumerates all 2^m edge subsets; m is limited by ``cap`` (default 24).
    """
    m = g.edge_count
    _check_cap(m, cap)
    eu, ev = g.edge_arrays()
    table = kernels.connectivity_table(g.node_count, eu, ev)
    present = _popcounts(1 << m)[table != 0]
    by_present = np.bincount(present, minlength=m + 1)
    counts = tuple(int(by_present[m - i]) for i in range(m + 1))
    return FCoefficients(counts=counts, node_count=g.node_count, edge_count=m)


def _validate_prob(p, what="p"):
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"{what} must lie in [0, 1], got {p}")
    return p


def _validate_probs(probs, m):
    arr = np.asarray(probs, dtype=np.float64)
    if arr.shape != (m,):
        raise ValueError(f"expected {m} edge probabilities, got shape {arr.shape}")
    if not np.all((arr >= 0.0) & (arr <= 1.0)):
        raise ValueError("edge probabilities must lie in [0, 1]")
    return arr


def reliability_homogeneous(f, p):
    """Evaluate the reliability polynomial at a shared edge probability p."""
    p = _validate_prob(p)
    m = f.edge_count
    q = 1.0 - p
    total = 0.0
    for i, c in enumerate(f.counts):
        if c:
            total += c * q**i * p ** (m - i)
    return float(min(1.0, max(0.0, total)))


def _subset_weights(probs):
    # weight of subset s = prod over present edges p_e * prod over absent (1-p_e);
    # bit k of the subset index corresponds to probs[k]
    w = np.array([1.0])
    for p in probs:
        w = np.concatenate([w * (1.0 - p), w * p])
    return w


def reliability_heterogeneous(g, probs, cap=DEFAULT_ENUMERATION_CAP):
    """Exact reliability with per-edge probabilities, by subset enumeration.

    The 2^m subset weights are assembled as a low-bits x high-bits product so
    the table is consumed in one pass of dense linear algebra.
    """
    m = g.edge_count
    _check_cap(m, cap)
    probs = _validate_probs(probs, m)
    if g.node_count <= 1:
        return 1.0
    eu, ev = g.edge_arrays()
    table = kernels.connectivity_table(g.node_count, eu, ev)
    lo = m // 2
    w_lo = _subset_weights(probs[:lo])
    w_hi = _subset_weights(probs[lo:])
    rows = table.reshape(len(w_hi), len(w_lo))
    total = 0.0
    block = 4096
    for start in range(0, len(w_hi), block):
        part = rows[start : start + block].astype(np.float64) @ w_lo
        total += float(w_hi[start : start + block] @ part)
    return float(min(1.0, max(0.0, total)))


def _merge_parallel(edges):
    # combine parallel edges: operational iff any copy is, 1 - prod(1 - p_i)
    merged = {}
    for u, v, p in edges:
        key = (u, v) if u < v else (v, u)
        if key in merged:
            merged[key] = 1.0 - (1.0 - merged[key]) * (1.0 - p)
        else:
            merged[key] = p
    return [(u, v, p) for (u, v), p in merged.items()]


def _contract(nodes, edges, a, b):
    # merge node b into node a, dropping the loop and merging parallels
    keep = a
    out = []
    for u, v, p in edges:
        u2 = keep if u == b else u
        v2 = keep if v == b else v
        if u2 != v2:
            out.append((u2, v2, p))
    return nodes - {b}, _merge_parallel(out)


def _factor(nodes, edges):
    if len(nodes) <= 1:
        return 1.0

    # drop dead edges, contract certain ones
    changed = True
    while changed:
        changed = False
        live = [e for e in edges if e[2] > 0.0]
        if len(live) != len(edges):
            edges = live
        for u, v, p in edges:
            if p >= 1.0:
                nodes, edges = _contract(nodes, edges, u, v)
                changed = True
                break
        if len(nodes) <= 1:
            return 1.0

    # structural connectivity
    index = {x: i for i, x in enumerate(nodes)}
    ds = _DisjointSet(len(nodes))
    for u, v, _ in edges:
        ds.union(index[u], index[v])
    if ds.components > 1:
        return 0.0

    # every bridge must work; contract it and fold its probability in
    for i, (u, v, p) in enumerate(edges):
        ds = _DisjointSet(len(nodes))
        for j, (a, b, _) in enumerate(edges):
            if j != i:
                ds.union(index[a], index[b])
        if ds.components > 1:
            nodes, edges = _contract(nodes, edges, u, v)
            return p * _factor(nodes, edges)

    # all edges lie on cycles; pivot on the first one
    u, v, p = edges[0]
    rest = edges[1:]
    contracted = _contract(nodes, rest, u, v)
    return p * _factor(*contracted) + (1.0 - p) * _factor(nodes, rest)


def reliability_factoring(g, probs):
    """Exact reliability via deletion-contraction with shortcuts.

    Bridges are contracted (multiplying their probability in), parallel edges
    merged with p = 1 - (1-p1)(1-p2), and certain/dead edges absorbed before
    each pivot.  No edge-count cap applies, though dense cyclic graphs still
    cost exponential time in the worst case.
    """
    probs = _validate_probs(probs, g.edge_count)
    if g.node_count <= 1:
        return 1.0
    edges = [(u, v, float(p)) for (u, v), p in zip(g.edges, probs)]
    value = _factor(set(range(g.node_count)), _merge_parallel(edges))
    return float(min(1.0, max(0.0, value)))
