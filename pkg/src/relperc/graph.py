"""Simple undirected graphs with indexed edges.

Nodes are dense integers 0..n-1.  Edges carry a stable index (their position
in the edge tuple) so that edge subsets, per-edge probabilities, and per-edge
decay rates can all be addressed positionally.  Graphs are immutable and safe
to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs, edge lists, or edge subsets."""


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    node_count:
        Number of nodes; nodes are 0..node_count-1.
    edges:
        Iterable of (u, v) pairs.  Self-loops and duplicate edges (in either
        orientation) are rejected.
    """

    __slots__ = ("node_count", "edges", "_eu", "_ev")

    def __init__(self, node_count, edges):
        node_count = int(node_count)
        if node_count < 0:
            raise GraphError("node_count must be nonnegative")
        cleaned = []
        seen = set()
        for pos, pair in enumerate(edges):
            try:
                u, v = pair
            except (TypeError, ValueError):
                raise GraphError(f"edge {pos} is not a pair: {pair!r}") from None
            u = int(u)
            v = int(v)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(
                    f"edge {pos} = ({u}, {v}) out of range for {node_count} nodes"
                )
            if u == v:
                raise GraphError(f"edge {pos} is a self-loop at node {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v}) at position {pos}")
            seen.add(key)
            cleaned.append((u, v))
        self.node_count = node_count
        self.edges = tuple(cleaned)
        eu = np.array([e[0] for e in cleaned], dtype=np.int32)
        ev = np.array([e[1] for e in cleaned], dtype=np.int32)
        eu.setflags(write=False)
        ev.setflags(write=False)
        self._eu = eu
        self._ev = ev

    @property
    def edge_count(self):
        return len(self.edges)

    def edge_arrays(self):
        """Endpoint arrays (int32) indexed by edge position."""
        return self._eu, self._ev

    def __repr__(self):
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.node_count, self.edges))


def complete_graph(n):
    """K_n: every pair of the n nodes joined by an edge."""
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def degree_sequence(g):
    """Degree of each node, indexed by node id."""
    degrees = [0] * g.node_count
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def as_subset(g, subset):
    """Normalize an edge-subset indicator to a bool array of length edge_count."""
    arr = np.asarray(subset)
    if arr.shape != (g.edge_count,):
        raise GraphError(
            f"subset length {arr.shape} does not match edge count {g.edge_count}"
        )
    return arr.astype(bool)


class _DisjointSet:
    __slots__ = ("parent", "size", "components")

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


def component_sizes(g, subset=None):
    """Sizes of the connected components of the spanning subgraph, descending.

    ``subset`` selects which edges are present (all of them by default); every
    node of g participates, so isolated nodes show up as size-1 components.
    """
    ds = _DisjointSet(g.node_count)
    if subset is None:
        pairs = g.edges
    else:
        keep = as_subset(g, subset)
        pairs = [g.edges[i] for i in np.flatnonzero(keep)]
    for u, v in pairs:
        ds.union(u, v)
    sizes = {}
    for x in range(g.node_count):
        r = ds.find(x)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def is_connected(g, subset=None):
    """Whether the spanning subgraph selected by ``subset`` connects all nodes.

    Graphs with zero or one node count as connected.
    """
    if g.node_count <= 1:
        return True
    return component_sizes(g, subset)[0] == g.node_count


@dataclass(frozen=True)
class ParsedEdgeList:
    """Result of parsing an edge-list file.

    ``rates`` is None unless the file carried a third column; ``labels`` maps
    node id back to the original label token.
    """

    graph: Graph
    rates: tuple | None
    labels: tuple


def parse_edge_list(text):
    """Parse edge-list text: one edge per line, "u v" or "u v rate".

    '#' starts a comment (whole-line or trailing).  When every node label is a
    nonnegative integer the labels are used directly as node ids (node_count =
    max + 1); otherwise labels are remapped in first-seen order and the
    mapping is reported via ``labels``.  The rate column is all-or-nothing.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphError(
                f"line {lineno}: expected 'u v' or 'u v rate', got {raw.strip()!r}"
            )
        rate = None
        if len(parts) == 3:
            try:
                rate = float(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: bad rate {parts[2]!r}") from None
            if not np.isfinite(rate) or rate < 0:
                raise GraphError(f"line {lineno}: rate must be finite and >= 0")
        rows.append((lineno, parts[0], parts[1], rate))
    if not rows:
        raise GraphError("edge list is empty")

    with_rate = [r for r in rows if r[3] is not None]
    if with_rate and len(with_rate) != len(rows):
        missing = next(r[0] for r in rows if r[3] is None)
        raise GraphError(f"line {missing}: rate column present on some lines but not all")

    def _as_int(token):
        try:
            value = int(token)
        except ValueError:
            return None
        return value if value >= 0 and token == str(value) else None

    tokens = [t for r in rows for t in (r[1], r[2])]
    ints = [_as_int(t) for t in tokens]
    if all(i is not None for i in ints):
        ids = {t: i for t, i in zip(tokens, ints)}
        node_count = max(ints) + 1
        labels = tuple(str(i) for i in range(node_count))
    else:
        ids = {}
        for t in tokens:
            if t not in ids:
                ids[t] = len(ids)
        node_count = len(ids)
        labels = tuple(sorted(ids, key=ids.get))

    try:
        graph = Graph(node_count, [(ids[r[1]], ids[r[2]]) for r in rows])
    except GraphError as exc:
        raise GraphError(f"invalid edge list: {exc}") from None
    rates = tuple(r[3] for r in rows) if with_rate else None
    return ParsedEdgeList(graph=graph, rates=rates, labels=labels)


def format_edge_list(g, rates=None, labels=None, header=None):
    """Render a graph back to edge-list text (inverse of parse_edge_list)."""
    if rates is not None and len(rates) != g.edge_count:
        raise GraphError("rates length does not match edge count")
    if labels is not None and len(labels) != g.node_count:
        raise GraphError("labels length does not match node count")
    name = (lambda x: str(labels[x])) if labels is not None else str
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header)
    for i, (u, v) in enumerate(g.edges):
        if rates is None:
            lines.append(f"{name(u)} {name(v)}")
        else:
            lines.append(f"{name(u)} {name(v)} {rates[i]:.12g}")
    return "\n".join(lines) + "\n"
