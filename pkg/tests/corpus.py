"""Random finite G-metric type spaces and self-maps for property suites."""

from __future__ import annotations

import itertools

import numpy as np

from gfix.gspace import FiniteGSpace
from gfix.maps import TabulatedMap


def _walk_costs(W: np.ndarray) -> np.ndarray:
    """``best[x, w]``: cheapest walk from ``x`` to ``w`` with at least one link (Floyd-Warshall style)."""
    n = len(W)
    best = W.copy()
    for _ in range(n):
        best = np.minimum(best, (best[:, :, None] + W[None, :, :]).min(axis=1))
    return best


def random_space(rng: np.random.Generator, n: int) -> FiniteGSpace:
    """Pair values ``G(a, a, b)`` uniform in [1, 5]; a triple of distinct points gets the
    largest pair value among its points plus a random surplus. ``K`` is the smallest
    constant making the polygon inequality hold over all walks."""
    table = {}
    for i in range(n):
        table[(i, i, i)] = 0.0
    for a, b in itertools.combinations(range(n), 2):
        table[(a, a, b)] = float(rng.uniform(1, 5))
        table[(a, b, b)] = float(rng.uniform(1, 5))
    for t in itertools.combinations(range(n), 3):
        pairs = [table[(a, a, b)] for a, b in itertools.permutations(t, 2) if a < b]
        pairs += [table[(a, b, b)] for a, b in itertools.permutations(t, 2) if a < b]
        table[t] = max(pairs) + float(rng.uniform(0, 1))
    G = np.zeros((n, n, n))
    for (i, j, k), v in table.items():
        for p in itertools.permutations((i, j, k)):
            G[p] = v
    idx = np.arange(n)
    W = G[idx[:, None], idx[None, :], idx[None, :]]
    best = _walk_costs(W)
    # rhs[x, y, z] = min_w best[x, w] + G[w, y, z]
    rhs = (best[:, :, None, None] + G[None, :, :, :]).min(axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(G > 0, G / rhs, 0.0)
    K = max(1.0, float(np.nanmax(ratio)) * (1 + 1e-9)) if n > 1 else 1.0
    return FiniteGSpace(tuple(f"p{i}" for i in range(n)), K, table)


def random_map(rng: np.random.Generator, n: int) -> TabulatedMap:
    """A mix of arbitrary maps, constants and rooted-tree maps (which have one fixed point)."""
    kind = rng.integers(3)
    if kind == 0:
        return TabulatedMap(tuple(int(v) for v in rng.integers(0, n, n)), "random")
    if kind == 1:
        return TabulatedMap((int(rng.integers(n)),) * n, "constant")
    order = rng.permutation(n)
    values = [0] * n
    values[order[0]] = int(order[0])
    for pos in range(1, n):
        values[order[pos]] = int(order[rng.integers(pos)])
    return TabulatedMap(tuple(values), "tree")


def corpus(count: int, seed: int = 20240601, max_size: int = 6):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_size + 1))
        yield random_space(rng, n), random_map(rng, n), random_map(rng, n)
