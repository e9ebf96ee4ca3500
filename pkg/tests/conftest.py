"""Shared fixtures and independent brute-force oracles.

The oracles deliberately use different algorithms from the library (DFS
instead of union-find, direct subset products instead of convolutions) so
agreement is meaningful.
"""

import itertools

import numpy as np
import pytest

from relperc import Graph, complete_graph


@pytest.fixture
def k4():
    return complete_graph(4)


def dfs_connected(n, edges):
    """Reachability check by depth-first search."""
    if n <= 1:
        return True
    adj = {i: [] for i in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def brute_reliability(g, probs):
    """State-sum reliability: enumerate every edge subset."""
    m = g.edge_count
    total = 0.0
    for state in itertools.product((0, 1), repeat=m):
        weight = 1.0
        active = []
        for e, bit in enumerate(state):
            if bit:
                weight *= probs[e]
                active.append(g.edges[e])
            else:
                weight *= 1.0 - probs[e]
        if dfs_connected(g.node_count, active):
            total += weight
    return total


def brute_count_tail(probs, m_c):
    """P(more than m_c successes) by enumerating all outcome subsets."""
    n = len(probs)
    total = 0.0
    for state in itertools.product((0, 1), repeat=n):
        k = sum(state)
        if k > m_c:
            weight = 1.0
            for p, bit in zip(probs, state):
                weight *= p if bit else 1.0 - p
            total += weight
    return total


def brute_pmf(probs):
    """Poisson-binomial pmf by enumerating all outcome subsets."""
    n = len(probs)
    pmf = np.zeros(n + 1)
    for state in itertools.product((0, 1), repeat=n):
        weight = 1.0
        for p, bit in zip(probs, state):
            weight *= p if bit else 1.0 - p
        pmf[sum(state)] += weight
    return pmf


def random_connected_graph(rng, max_nodes=7, max_edges=12):
    """Random simple graph that is structurally connected."""
    while True:
        n = int(rng.integers(2, max_nodes + 1))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        want = int(rng.integers(n - 1, min(max_edges, len(pairs)) + 1))
        idx = rng.permutation(len(pairs))[:want]
        edges = [pairs[i] for i in idx]
        if dfs_connected(n, edges):
            return Graph(n, edges)
