"""Self-maps of G-metric type spaces.

Finite spaces take tabulated maps (index -> index); interval spaces take
affine maps ``x -> alpha * x + beta``. Both expose a vectorised ``vec`` over
the representation used by ``space.grid()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .gspace import ATOL, AnalyticGSpace, FiniteGSpace, GSpace, Point


@dataclass(frozen=True)
class TabulatedMap:
    values: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def kind(self) -> str:
        return "tabulated"

    def vec(self, a):
        return np.asarray(self.values, dtype=np.intp)[a]

    def check(self, space: GSpace) -> None:
        if not isinstance(space, FiniteGSpace):
            raise TypeError("tabulated maps need a finite space")
        n = space.size
        if len(self.values) != n:
            raise ValueError(f"map {self.label or '?'} has {len(self.values)} entries for {n} points")
        if any(not 0 <= v < n for v in self.values):
            raise ValueError(f"map {self.label or '?'} leaves the space")

    def compose(self, inner: "TabulatedMap") -> "TabulatedMap":
        """``self o inner``."""
        return TabulatedMap(tuple(self.values[v] for v in inner.values), f"{self.label}.{inner.label}")

    def power(self, n: int) -> "TabulatedMap":
        if n < 0:
            raise ValueError("negative power")
        out = tuple(range(len(self.values)))
        for _ in range(n):
            out = tuple(self.values[v] for v in out)
        return TabulatedMap(out, f"{self.label}^{n}")


@dataclass(frozen=True)
class AffineMap:
    alpha: float
    beta: float = 0.0
    label: str = ""

    @property
    def kind(self) -> str:
        return "affine"

    def vec(self, a):
        return self.alpha * a + self.beta

    def check(self, space: GSpace) -> None:
        if not isinstance(space, AnalyticGSpace):
            raise TypeError("affine maps need an interval space")
        for end in (space.lo, space.hi):
            if not space.contains(self.alpha * end + self.beta):
                raise ValueError(f"affine map {self.label or '?'} sends {end} outside [{space.lo}, {space.hi}]")

    def compose(self, inner: "AffineMap") -> "AffineMap":
        return AffineMap(self.alpha * inner.alpha, self.alpha * inner.beta + self.beta, f"{self.label}.{inner.label}")

    def power(self, n: int) -> "AffineMap":
        if n < 0:
            raise ValueError("negative power")
        a, b = 1.0, 0.0
        for _ in range(n):
            a, b = self.alpha * a, self.alpha * b + self.beta
        return AffineMap(a, b, f"{self.label}^{n}")


SelfMap = TabulatedMap | AffineMap


def apply_map(space: GSpace, T: SelfMap, p: Point) -> Point:
    """``T(p)`` on the space's own point representation."""
    return space.to_point(T.vec(space.from_point(p)))


def identity(space: GSpace) -> SelfMap:
    if isinstance(space, FiniteGSpace):
        return TabulatedMap(tuple(range(space.size)), "id")
    return AffineMap(1.0, 0.0, "id")


def constant(space: GSpace, p: Point) -> SelfMap:
    if isinstance(space, FiniteGSpace):
        return TabulatedMap((space.index(p),) * space.size, f"const[{p}]")
    return AffineMap(0.0, float(p), f"const[{p}]")


def tabulated(space: FiniteGSpace, mapping: Mapping[Point, Point] | Sequence[Point], label: str = "") -> TabulatedMap:
    """Build a tabulated map from point identifiers (a dict, or images in point order)."""
    if isinstance(mapping, Mapping):
        values = [space.index(mapping[p]) for p in space.points]
    else:
        values = [space.index(q) for q in mapping]
    T = TabulatedMap(tuple(values), label)
    T.check(space)
    return T


def is_fixed(space: GSpace, T: SelfMap, p: Point) -> bool:
    q = apply_map(space, T, p)
    if isinstance(space, FiniteGSpace):
        return q == p
    return abs(q - p) <= ATOL


def three_point_map() -> TabulatedMap:
    """``0, 1 -> 0`` and ``2 -> 1`` on the three-point example."""
    return TabulatedMap((0, 0, 1), "T")
