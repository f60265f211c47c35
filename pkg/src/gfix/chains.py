"""epsilon-chains: witness paths, chainability verdicts and the minimal threshold.

A link ``u -> v`` is admissible at level ``eps`` when ``G(u, v, v) <= eps``.
The relation is directed because ``G(u, v, v)`` and ``G(v, u, u)`` are
different multisets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .gspace import FiniteGSpace, Point


@dataclass(frozen=True)
class Chain:
    nodes: tuple
    epsilon: float

    @property
    def degree(self) -> int:
        return len(self.nodes) - 1

    def links(self, space: FiniteGSpace) -> list[float]:
        return [space.g(a, b, b) for a, b in zip(self.nodes, self.nodes[1:])]

    def is_valid(self, space: FiniteGSpace) -> bool:
        return len(set(self.nodes)) == len(self.nodes) and all(v <= self.epsilon for v in self.links(space))

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "epsilon": self.epsilon, "degree": self.degree}


@dataclass(frozen=True)
class ChainabilityVerdict:
    chainable: bool
    epsilon: float
    witness_chains: dict = field(default_factory=dict, repr=False)
    blocking_pair: tuple | None = None
    max_degree: int = 0

    def to_dict(self) -> dict:
        return {
            "chainable": self.chainable,
            "epsilon": self.epsilon,
            "max_degree": self.max_degree,
            "blocking_pair": list(self.blocking_pair) if self.blocking_pair else None,
            "witnesses": [
                {"from": a, "to": b, "nodes": list(c.nodes), "degree": c.degree}
                for (a, b), c in self.witness_chains.items()
            ],
        }


def link_matrix(space: FiniteGSpace) -> np.ndarray:
    """``W[u, v] = G(u, v, v)``."""
    n = space.size
    idx = np.arange(n)
    return space.tensor[idx[:, None], idx[None, :], idx[None, :]]


def _dist_to(adj: np.ndarray, target: int) -> np.ndarray:
    """Hop distance from every node to ``target`` (-1 when unreachable)."""
    n = adj.shape[0]
    dist = np.full(n, -1)
    dist[target] = 0
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in np.flatnonzero(adj[:, v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _walk(adj: np.ndarray, dist: np.ndarray, source: int) -> list[int]:
    # lexicographically smallest successor among those one hop closer
    path = [source]
    u = source
    while dist[u] > 0:
        u = int(next(v for v in np.flatnonzero(adj[u]) if dist[v] == dist[u] - 1))
        path.append(u)
    return path


def _adjacency(space: FiniteGSpace, eps: float) -> np.ndarray:
    adj = link_matrix(space) <= eps
    np.fill_diagonal(adj, False)
    return adj


def find_chain(space: FiniteGSpace, x: Point, y: Point, eps: float) -> Chain | None:
    """Shortest ``eps``-chain from ``x`` to ``y``, or ``None`` when there is none."""
    i, j = space.index(x), space.index(y)
    if i == j:
        raise ValueError("a chain joins two distinct points")
    adj = _adjacency(space, eps)
    dist = _dist_to(adj, j)
    if dist[i] < 0:
        return None
    return Chain(tuple(space.points[t] for t in _walk(adj, dist, i)), float(eps))


def is_chainable(space: FiniteGSpace, eps: float) -> ChainabilityVerdict:
    adj = _adjacency(space, eps)
    n = space.size
    dists = [_dist_to(adj, j) for j in range(n)]
    witnesses = {}
    max_degree = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if dists[j][i] < 0:
                return ChainabilityVerdict(False, float(eps), {}, (space.points[i], space.points[j]), 0)
            nodes = tuple(space.points[t] for t in _walk(adj, dists[j], i))
            witnesses[(space.points[i], space.points[j])] = Chain(nodes, float(eps))
            max_degree = max(max_degree, len(nodes) - 1)
    return ChainabilityVerdict(True, float(eps), witnesses, None, max_degree)


def _strongly_connected(adj: np.ndarray) -> bool:
    # everyone reaches node 0 and node 0 reaches everyone
    return bool((_dist_to(adj, 0) >= 0).all() and (_dist_to(adj.T, 0) >= 0).all())


def chainability_threshold(space: FiniteGSpace) -> float:
    """Smallest ``eps`` at which every ordered pair of distinct points is chained.

    Binary search over the distinct link values ``G(u, v, v)``, ``u != v``.
    """
    n = space.size
    if n < 2:
        raise ValueError("threshold needs at least two points")
    W = link_matrix(space)
    candidates = np.unique(W[~np.eye(n, dtype=bool)])
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        adj = W <= candidates[mid]
        np.fill_diagonal(adj, False)
        if _strongly_connected(adj):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])
