"""Brute-force ground truth on finite spaces.

Deliberately naive: plain loops over identifiers and ``g_eval`` only, so that
agreement with the vectorised checkers means something.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .gspace import AnalyticGSpace, FiniteGSpace, GSpace, g_eval


@dataclass(frozen=True)
class OracleResult:
    fixed_points: frozenset
    method: str = "exhaustive"

    @property
    def unique(self) -> bool:
        return len(self.fixed_points) == 1

    def to_dict(self) -> dict:
        return {"fixed_points": sorted(self.fixed_points), "unique": self.unique, "method": self.method}


def _require_finite(space: GSpace) -> FiniteGSpace:
    if isinstance(space, AnalyticGSpace) or not isinstance(space, FiniteGSpace):
        raise TypeError("the oracle only enumerates finite spaces")
    return space


def _image(space: FiniteGSpace, T, p):
    # a tabulated map stores indices; read the table directly
    return space.points[T.values[space.points.index(p)]]


def brute_fixed_points(space: GSpace, T) -> OracleResult:
    space = _require_finite(space)
    return OracleResult(frozenset(p for p in space.points if _image(space, T, p) == p))


def brute_common_fixed_points(space: GSpace, maps: Sequence, horizon: int | None = None) -> OracleResult:
    """Intersection of the fixed-point sets of ``T_1 .. T_horizon`` (family repeated cyclically)."""
    space = _require_finite(space)
    if not maps:
        raise ValueError("empty map family")
    horizon = len(maps) if horizon is None else horizon
    common = set(space.points)
    for n in range(horizon):
        T = maps[n % len(maps)]
        common &= {p for p in space.points if _image(space, T, p) == p}
    return OracleResult(frozenset(common))


def brute_lipschitz(space: GSpace, T) -> float:
    """Max ratio over every ordered triple, read off a sorted ratio list."""
    space = _require_finite(space)
    ratios = []
    for x, y, z in itertools.product(space.points, repeat=3):
        before = g_eval(space, x, y, z)
        after = g_eval(space, _image(space, T, x), _image(space, T, y), _image(space, T, z))
        if before > 0:
            ratios.append(after / before)
        elif after > 0:
            ratios.append(math.inf)
    ratios.sort()
    return ratios[-1] if ratios else 0.0


@dataclass(frozen=True)
class CauchyVerdict:
    eps: float
    N: int | None

    @property
    def holds(self) -> bool:
        return self.N is not None


def verify_cauchy(space: GSpace, trace, eps_grid: Sequence[float]) -> list[CauchyVerdict]:
    """For each ``eps``, the least ``N`` with ``G(x_n, x_m, x_m) < eps`` for all ``m, n >= N``.

    ``trace`` is an iteration trace (anything with ``.points``) or a list of points.
    ``N`` is ``None`` when even the last point alone fails (never, since ``G(x, x, x) = 0``)
    or when no suffix of length at least two satisfies the bound.
    """
    pts = list(getattr(trace, "points", trace))
    if not pts:
        raise ValueError("empty trace")
    if any(e <= 0 for e in eps_grid):
        raise ValueError("eps values must be positive")
    L = len(pts)
    # worst[N] = max over n, m >= N of G(x_n, x_m, x_m)
    worst = [0.0] * (L + 1)
    for N in range(L - 1, -1, -1):
        row = max(max(g_eval(space, pts[N], pts[m], pts[m]), g_eval(space, pts[m], pts[N], pts[N]))
                  for m in range(N, L))
        worst[N] = max(worst[N + 1], row)
    out = []
    for eps in eps_grid:
        N = next((k for k in range(L) if worst[k] < eps), None)
        # the lone last point certifies nothing about the tail
        if N is not None and N == L - 1 and L > 1:
            N = None
        out.append(CauchyVerdict(float(eps), N))
    return out
