"""G-metric type spaces: finite tabulated spaces and sampled interval families.

A finite space stores one value per multiset {i, j, k} of point indices, so
symmetry in all three arguments holds by construction. Analytic spaces are
closed intervals carrying one of two builtin ternary distances; every check
run on them works on a uniform grid and is flagged as sampled.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterator, Sequence

import numpy as np

ATOL = 1e-12

GValue = float
Point = Hashable
Triple = tuple[int, int, int]

ANALYTIC_FAMILIES = ("interval-maxval", "interval-maxdiff")

# grid size used when the ternary tensor of an analytic space has to be materialised
SAMPLE_LIMIT = 33


def canonical(i: int, j: int, k: int) -> Triple:
    return tuple(sorted((i, j, k)))  # type: ignore[return-value]


@dataclass(frozen=True)
class FiniteGSpace:
    """A finite G-metric type space ``(X, G, K)`` with a tabulated ``G``.

    ``table`` maps sorted index triples to values; every multiset must be
    present. Points are identifiers (strings in JSON descriptions).
    """

    points: tuple
    K: float
    table: dict = field(repr=False)
    name: str = ""

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise ValueError("a G-metric type space needs at least one point")
        if len(set(points)) != len(points):
            raise ValueError("duplicate point identifiers")
        if not (math.isfinite(self.K) and self.K >= 1.0):
            raise ValueError(f"K must be a finite real >= 1, got {self.K!r}")
        n = len(points)
        table = {}
        for key, value in self.table.items():
            i, j, k = (int(t) for t in key)
            if not all(0 <= t < n for t in (i, j, k)):
                raise ValueError(f"triple {key!r} indexes outside the point list")
            value = float(value)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"G{key!r} = {value!r} is not a finite non-negative real")
            ck = canonical(i, j, k)
            if ck in table and table[ck] != value:
                raise ValueError(f"conflicting values for multiset {ck}")
            table[ck] = value
        missing = [t for t in itertools.combinations_with_replacement(range(n), 3) if t not in table]
        if missing:
            raise ValueError(f"G is undefined on {len(missing)} multisets, first {missing[0]}")
        object.__setattr__(self, "table", table)

    @property
    def sampled(self) -> bool:
        return False

    @property
    def size(self) -> int:
        return len(self.points)

    @cached_property
    def _index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    def index(self, p: Point) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise KeyError(f"unknown point {p!r}") from None

    @cached_property
    def tensor(self) -> np.ndarray:
        """Dense ``G[i, j, k]`` array over point indices."""
        n = self.size
        out = np.empty((n, n, n))
        for (i, j, k), v in self.table.items():
            for perm in set(itertools.permutations((i, j, k))):
                out[perm] = v
        out.setflags(write=False)
        return out

    def g(self, x: Point, y: Point, z: Point) -> GValue:
        return self.table[canonical(self.index(x), self.index(y), self.index(z))]

    def gi(self, i: int, j: int, k: int) -> GValue:
        return self.table[canonical(i, j, k)]

    # vectorised interface shared with AnalyticGSpace
    def grid(self) -> np.ndarray:
        return np.arange(self.size)

    def g_vec(self, a, b, c) -> np.ndarray:
        return self.tensor[a, b, c]

    def to_point(self, v) -> Point:
        return self.points[int(v)]

    def from_point(self, p: Point) -> int:
        return self.index(p)

    def with_table(self, **updates) -> "FiniteGSpace":
        """Copy with some multisets overwritten, keyed by ``"i,j,k"`` strings."""
        table = dict(self.table)
        for key, v in updates.items():
            table[canonical(*(int(t) for t in key.split(",")))] = v
        return FiniteGSpace(self.points, self.K, table, self.name)


@dataclass(frozen=True)
class AnalyticGSpace:
    """A closed interval ``[lo, hi]`` with a builtin ternary distance.

    ``interval-maxdiff``: ``G = max(|x-y|, |y-z|, |z-x|)``.
    ``interval-maxval``: ``G = max(x, y, z)``, which does not vanish on the
    diagonal away from 0.
    """

    family: str
    lo: float = 0.0
    hi: float = 1.0
    grid_n: int = 257
    K: float = 1.0
    name: str = ""

    def __post_init__(self):
        if self.family not in ANALYTIC_FAMILIES:
            raise ValueError(f"unknown analytic family {self.family!r}; expected one of {ANALYTIC_FAMILIES}")
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")
        if self.grid_n < 2:
            raise ValueError("grid_n must be at least 2")
        if self.K < 1:
            raise ValueError("K must be >= 1")

    @property
    def sampled(self) -> bool:
        return True

    @property
    def size(self) -> int:
        return self.grid_n

    def contains(self, x: float) -> bool:
        return self.lo - ATOL <= x <= self.hi + ATOL

    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, (int, float, np.floating, np.integer)) or not self.contains(float(x)):
                raise KeyError(f"point {x!r} is not in [{self.lo}, {self.hi}]")

    def g(self, x, y, z) -> GValue:
        self._check(x, y, z)
        return float(self.g_vec(np.float64(x), np.float64(y), np.float64(z)))

    def g_vec(self, a, b, c) -> np.ndarray:
        if self.family == "interval-maxval":
            return np.maximum(np.maximum(a, b), c)
        return np.maximum(np.maximum(np.abs(a - b), np.abs(b - c)), np.abs(c - a))

    def grid(self, n: int | None = None) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.grid_n if n is None else n)

    def to_point(self, v) -> float:
        return float(v)

    def from_point(self, p) -> float:
        self._check(p)
        return float(p)

    def index(self, p) -> float:
        return self.from_point(p)


GSpace = FiniteGSpace | AnalyticGSpace


def sample_space(space: AnalyticGSpace, n: int | None = None) -> FiniteGSpace:
    """Tabulate an analytic space on ``n`` grid points (default ``min(grid_n, 33)``)."""
    n = min(space.grid_n, SAMPLE_LIMIT) if n is None else n
    xs = space.grid(n)
    table = {}
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        table[(i, j, k)] = float(space.g_vec(xs[i], xs[j], xs[k]))
    return FiniteGSpace(tuple(float(x) for x in xs), space.K, table, name=f"{space.family}@{n}")


def iter_canonical_blocks(n: int) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield index arrays ``(I, J, K)`` covering every ``i <= j <= k < n`` once."""
    if n <= 64:
        idx = np.array(list(itertools.combinations_with_replacement(range(n), 3)), dtype=np.intp)
        yield idx[:, 0], idx[:, 1], idx[:, 2]
        return
    for i in range(n):
        m = n - i
        jj, kk = np.triu_indices(m)
        yield np.full(jj.shape, i, dtype=np.intp), jj + i, kk + i


def g_eval(space: GSpace, x: Point, y: Point, z: Point) -> GValue:
    """``G(x, y, z)``; unknown points raise ``KeyError``."""
    return space.g(x, y, z)


def derived_metric(space: GSpace, x: Point, y: Point) -> GValue:
    """``d_G(x, y) = G(x, y, y) + G(x, x, y)``."""
    return space.g(x, y, y) + space.g(x, x, y)


def diameter(space: GSpace) -> GValue:
    if isinstance(space, FiniteGSpace):
        return max(space.table.values())
    best = 0.0
    xs = space.grid()
    for I, J, K in iter_canonical_blocks(space.grid_n):
        best = max(best, float(space.g_vec(xs[I], xs[J], xs[K]).max()))
    return best


# ---------------------------------------------------------------- axioms


@dataclass(frozen=True)
class AxiomVerdict:
    holds: bool
    witness: tuple | None = None
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    verdicts: dict
    K: float
    g5_chain_cutoff: int
    sampled: bool = False

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    def __getitem__(self, axiom: str) -> AxiomVerdict:
        return self.verdicts[axiom]

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "g5_chain_cutoff": self.g5_chain_cutoff,
            "sampled": self.sampled,
            "all_hold": self.all_hold,
            "axioms": {
                name: {"holds": v.holds, "witness": _jsonable(v.witness), "detail": v.detail}
                for name, v in self.verdicts.items()
            },
        }


def _jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (str, bool, int)):
        return obj
    if isinstance(obj, (np.floating, np.integer)):
        obj = obj.item()
    if isinstance(obj, float):
        # strict JSON has no infinities
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return str(obj)


def _chain_tables(W: np.ndarray, cutoff: int) -> list[np.ndarray]:
    """``D[h][x, w]``: cheapest walk ``x -> z1 -> ... -> zh = w`` with link cost ``W``."""
    tables = [W]
    for _ in range(cutoff - 1):
        prev = tables[-1]
        tables.append((prev[:, :, None] + W[None, :, :]).min(axis=1))
    return tables


def _rebuild_chain(tables: list[np.ndarray], W: np.ndarray, x: int, h: int, w: int) -> list[int]:
    """Intermediates ``z1..zh`` of a cheapest ``h``-hop walk from ``x`` to ``w``."""
    chain = [w]
    for level in range(h - 1, 0, -1):
        u = int(np.argmin(tables[level - 1][x] + W[:, w]))
        chain.append(u)
        w = u
    return chain[::-1]


def validate_axioms(space: GSpace, g5_chain_cutoff: int | None = None, K: float | None = None) -> AxiomReport:
    """Check G1-G5 and G5' exhaustively on a finite space.

    G5 is decided with hop-limited min-plus products: the smallest right-hand
    side over all chains of at most ``g5_chain_cutoff`` intermediates. Walks that
    repeat a point never beat the simple chain they contain, so this matches
    enumeration over chains of distinct intermediates. Analytic spaces are
    tabulated on a grid first and the report is flagged as sampled.
    """
    sampled = False
    if isinstance(space, AnalyticGSpace):
        space = sample_space(space)
        sampled = True
    n = space.size
    cutoff = max(n - 1, 1) if g5_chain_cutoff is None else int(g5_chain_cutoff)
    if cutoff < 1 or cutoff > max(n, 1):
        raise ValueError(f"g5_chain_cutoff must lie in [1, {n}]")
    K = space.K if K is None else float(K)
    G = space.tensor
    pts = space.points
    name = lambda *ix: tuple(pts[i] for i in ix)  # noqa: E731
    verdicts = {}

    bad = [i for i in range(n) if abs(G[i, i, i]) > ATOL]
    verdicts["G1"] = AxiomVerdict(
        not bad,
        name(bad[0], bad[0], bad[0]) if bad else None,
        f"G = {float(G[bad[0], bad[0], bad[0]])!r} on a diagonal triple" if bad else "",
    )

    w2 = None
    for x, y in itertools.permutations(range(n), 2):
        if not G[x, x, y] > 0:
            w2 = (x, x, y)
            break
    verdicts["G2"] = AxiomVerdict(w2 is None, name(*w2) if w2 else None, f"G = {float(G[w2])!r}" if w2 else "")

    w3 = None
    for x, y, z in itertools.product(range(n), repeat=3):
        if z != y and G[x, x, y] > G[x, y, z] + ATOL:
            w3 = (x, y, z)
            break
    verdicts["G3"] = AxiomVerdict(
        w3 is None,
        name(*w3) if w3 else None,
        f"G(x,x,y) = {float(G[w3[0], w3[0], w3[1]])!r} > G(x,y,z) = {float(G[w3])!r}" if w3 else "",
    )

    w4 = None
    for x, y, z in itertools.product(range(n), repeat=3):
        if any(abs(G[p] - G[x, y, z]) > ATOL for p in itertools.permutations((x, y, z))):
            w4 = (x, y, z)
            break
    verdicts["G4"] = AxiomVerdict(w4 is None, name(*w4) if w4 else None)

    # link cost W[u, v] = G(u, v, v); tail cost G(w, y, z)
    W = G[np.arange(n)[:, None], np.arange(n)[None, :], np.arange(n)[None, :]]
    tables = _chain_tables(W, cutoff)
    verdicts["G5"] = _polygon_verdict(G, W, tables, K, name, "G5")
    verdicts["G5'"] = _polygon_verdict(G, W, tables[:1], K, name, "G5'")
    return AxiomReport(verdicts, K, cutoff, sampled)


def _polygon_verdict(G, W, tables, K, name, label) -> AxiomVerdict:
    n = G.shape[0]
    # best[h][x, y, z] = min_w D_h[x, w] + G[w, y, z]
    for h, D in enumerate(tables, start=1):
        rhs = (D[:, :, None, None] + G[None, :, :, :]).min(axis=1)
        viol = G > K * rhs + ATOL
        if viol.any():
            x, y, z = (int(t) for t in np.argwhere(viol)[0])
            w = int(np.argmin(D[x, :] + G[:, y, z]))
            chain = _rebuild_chain(tables, W, x, h, w)
            value = float(W[x, chain[0]] + sum(W[a, b] for a, b in zip(chain, chain[1:])) + G[chain[-1], y, z])
            return AxiomVerdict(
                False,
                {"triple": name(x, y, z), "chain": name(*chain)},
                f"G = {float(G[x, y, z])!r} > K * {value!r}",
            )
    return AxiomVerdict(True)


# ---------------------------------------------------------------- examples


def discrete(n: int) -> FiniteGSpace:
    """The discrete G-metric on ``n`` points: 0 on the diagonal, 1 elsewhere."""
    if n < 1:
        raise ValueError("discrete space needs n >= 1")
    table = {t: (0.0 if t[0] == t[2] else 1.0) for t in itertools.combinations_with_replacement(range(n), 3)}
    return FiniteGSpace(tuple(str(i) for i in range(n)), 1.0, table, name=f"discrete({n})")


def two_point() -> FiniteGSpace:
    table = {(0, 0, 0): 0.0, (1, 1, 1): 0.0, (0, 0, 1): 1.0, (0, 1, 1): 2.0}
    return FiniteGSpace(("0", "1"), 1.0, table, name="two_point")


def three_point() -> FiniteGSpace:
    table = {
        (0, 0, 0): 0.0, (1, 1, 1): 0.0, (2, 2, 2): 0.0,
        (0, 0, 1): 1.0, (0, 1, 1): 1.0,
        (0, 0, 2): 2.0, (1, 1, 2): 2.0, (0, 2, 2): 2.0, (1, 2, 2): 2.0, (0, 1, 2): 2.0,
    }
    return FiniteGSpace(("0", "1", "2"), 1.0, table, name="three_point")


def make_example(name: str, n: int | None = None, grid_n: int = 257) -> GSpace:
    """Builtin spaces: ``discrete(n)``, ``two_point``, ``three_point``,
    ``interval_maxval`` and ``interval_maxdiff`` (both on [0, 1])."""
    key = name.strip().replace("-", "_")
    if key.startswith("discrete"):
        if "(" in key:
            n = int(key[key.index("(") + 1 : key.rindex(")")])
        if n is None:
            raise ValueError("discrete needs a size n")
        return discrete(n)
    if key == "two_point":
        return two_point()
    if key == "three_point":
        return three_point()
    if key == "interval_maxval":
        return AnalyticGSpace("interval-maxval", 0.0, 1.0, grid_n, name="interval_maxval")
    if key == "interval_maxdiff":
        return AnalyticGSpace("interval-maxdiff", 0.0, 1.0, grid_n, name="interval_maxdiff")
    raise ValueError(f"unknown example space {name!r}")


def points_of(space: GSpace) -> Sequence:
    """The enumerable points: all of a finite space, the grid of an analytic one."""
    if isinstance(space, FiniteGSpace):
        return space.points
    return [float(x) for x in space.grid()]
