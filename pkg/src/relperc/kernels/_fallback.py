"""NumPy reference implementations of the hot kernels.

These are selected at import time when the compiled extension has not been
built.  Integer outputs (connectivity decisions, counts, component sizes) are
identical to the compiled versions; floating-point outputs may differ by
rounding only.

The subset/trial connectivity kernels pack node reachability into machine
words: bit b of ``reach`` says "node b is reachable from node 0", and one
sweep over the edge list propagates reachability for every subset (or trial)
at once.  Graphs with more nodes than fit in a word fall back to a plain
union-find loop.
"""

import numpy as np

_CHUNK_BITS = 16


def _connected_rows(n, eu, ev, active_iter):
    """Union-find connectivity count over an iterable of active-edge lists."""
    hits = 0
    for active in active_iter:
        parent = list(range(n))
        merges = 0
        for e in active:
            x = eu[e]
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = ev[e]
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x != y:
                parent[x] = y
                merges += 1
        hits += merges == n - 1
    return hits


def connectivity_table(n, eu, ev):
    """Connectivity flag for every subset of the edge set.

    Returns a uint8 array of length 2**m whose entry s is 1 iff the spanning
    subgraph with edge set {e : bit e of s is set} connects all n nodes.
    """
    eu = np.asarray(eu, dtype=np.int32)
    ev = np.asarray(ev, dtype=np.int32)
    m = eu.shape[0]
    size = 1 << m
    if n <= 1:
        return np.ones(size, dtype=np.uint8)
    if n > 32:
        out = np.zeros(size, dtype=np.uint8)
        eu_l = eu.tolist()
        ev_l = ev.tolist()
        for s in range(size):
            active = [e for e in range(m) if (s >> e) & 1]
            out[s] = _connected_rows(n, eu_l, ev_l, [active])
        return out

    out = np.empty(size, dtype=np.uint8)
    full = np.uint32((1 << n) - 1)
    one = np.uint64(1)
    chunk = 1 << min(m, _CHUNK_BITS)
    for start in range(0, size, chunk):
        idx = np.arange(start, start + chunk, dtype=np.uint64)
        present = [((idx >> np.uint64(e)) & one).astype(np.uint32) for e in range(m)]
        reach = np.ones(chunk, dtype=np.uint32)
        while True:
            before = reach.copy()
            for e in range(m):
                u = np.uint32(eu[e])
                v = np.uint32(ev[e])
                pe = present[e]
                reach |= (((reach >> u) & pe) << v) | (((reach >> v) & pe) << u)
            if np.array_equal(reach, before):
                break
        out[start : start + chunk] = reach == full
    return out


def count_connected_masks(n, eu, ev, masks):
    """Number of rows of the (trials, m) mask matrix that connect all n nodes."""
    eu = np.asarray(eu, dtype=np.int32)
    ev = np.asarray(ev, dtype=np.int32)
    masks = np.ascontiguousarray(masks, dtype=np.uint8)
    trials, m = masks.shape
    if n <= 1:
        return int(trials)
    if n > 64:
        rows = (np.flatnonzero(masks[r]).tolist() for r in range(trials))
        return int(_connected_rows(n, eu.tolist(), ev.tolist(), rows))
    reach = np.ones(trials, dtype=np.uint64)
    full = np.uint64((1 << n) - 1)
    cols = [masks[:, e].astype(np.uint64) for e in range(m)]
    while True:
        before = reach.copy()
        for e in range(m):
            u = np.uint64(eu[e])
            v = np.uint64(ev[e])
            pe = cols[e]
            reach |= (((reach >> u) & pe) << v) | (((reach >> v) & pe) << u)
        if np.array_equal(reach, before):
            break
    return int((reach == full).sum())


def largest_component_growth(n, eu, ev, order):
    """Largest component size after inserting each prefix of ``order``.

    Returns an int64 array of length len(order) + 1; entry k is the largest
    component size once the first k edges of the insertion order are present.
    """
    eu = np.asarray(eu, dtype=np.int32).tolist()
    ev = np.asarray(ev, dtype=np.int32).tolist()
    order = np.asarray(order, dtype=np.int64).tolist()
    out = np.empty(len(order) + 1, dtype=np.int64)
    parent = list(range(n))
    size = [1] * n
    best = 1 if n > 0 else 0
    out[0] = best
    for i, e in enumerate(order):
        x = eu[e]
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        y = ev[e]
        while parent[y] != y:
            parent[y] = parent[parent[y]]
            y = parent[y]
        if x != y:
            if size[x] < size[y]:
                x, y = y, x
            parent[y] = x
            size[x] += size[y]
            if size[x] > best:
                best = size[x]
        out[i + 1] = best
    return out


def poisson_binomial_pmf(probs):
    """Distribution of the number of successes among independent Bernoulli trials.

    Returns a float64 array of length len(probs) + 1 built by the standard
    O(N^2) convolution recurrence; entries are nonnegative and sum to 1 up to
    rounding.
    """
    probs = np.asarray(probs, dtype=np.float64)
    n = probs.shape[0]
    pmf = np.zeros(n + 1, dtype=np.float64)
    pmf[0] = 1.0
    for k in range(n):
        p = probs[k]
        q = 1.0 - p
        pmf[1 : k + 2] = pmf[1 : k + 2] * q + pmf[: k + 1] * p
        pmf[0] *= q
    return pmf
