"""Hypothesis checkers for self-maps: Lipschitz constants, local contractivity,
the a_n-type sequential conditions and the three-index tensor conditions.

Finite spaces are enumerated exhaustively. Interval spaces are enumerated on
their grid and every verdict carries ``sampled=True``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .coefficients import CoefficientSeq, CoefficientTensor, PhiFunction
from .gspace import ATOL, SAMPLE_LIMIT, AnalyticGSpace, FiniteGSpace, GSpace, _jsonable, iter_canonical_blocks
from .maps import SelfMap


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None
    sampled: bool = False
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": _jsonable(self.witness),
            "sampled": self.sampled,
            "detail": _jsonable(self.detail),
        }


def _points(space: GSpace, limit: int | None = None) -> np.ndarray:
    if isinstance(space, FiniteGSpace):
        return space.grid()
    n = space.grid_n if limit is None else min(space.grid_n, limit)
    return space.grid(n)


def _canonical(space: GSpace, pts: np.ndarray):
    for I, J, K in iter_canonical_blocks(len(pts)):
        yield pts[I], pts[J], pts[K]


def _names(space: GSpace, *vals) -> tuple:
    return tuple(space.to_point(v) for v in vals)


# ---------------------------------------------------------------- Lipschitz


def _lipschitz(space: GSpace, T: SelfMap) -> tuple[float, tuple | None]:
    T.check(space)
    best, arg = 0.0, None
    for A, B, C in _canonical(space, _points(space)):
        g = space.g_vec(A, B, C)
        gi = space.g_vec(T.vec(A), T.vec(B), T.vec(C))
        zero = g <= 0
        if np.any(zero & (gi > 0)):
            t = int(np.argmax(zero & (gi > 0)))
            return math.inf, _names(space, A[t], B[t], C[t])
        if np.any(~zero):
            ratio = np.where(zero, 0.0, gi / np.where(zero, 1.0, g))
            t = int(np.argmax(ratio))
            if ratio[t] > best:
                best, arg = float(ratio[t]), _names(space, A[t], B[t], C[t])
    return best, arg


def lipschitz_constant(space: GSpace, T: SelfMap) -> float:
    """Smallest ``k`` with ``G(Tx, Ty, Tz) <= k G(x, y, z)``; ``inf`` when none exists."""
    return _lipschitz(space, T)[0]


def lipschitz_witness(space: GSpace, T: SelfMap) -> tuple | None:
    """A triple attaining the Lipschitz constant (or breaking boundedness)."""
    return _lipschitz(space, T)[1]


def iterated_lipschitz(space: GSpace, T: SelfMap, N: int) -> list[float]:
    if N < 1:
        raise ValueError("N must be at least 1")
    return [lipschitz_constant(space, T.power(n)) for n in range(1, N + 1)]


# ---------------------------------------------------------------- local contractivity


def _ball_triples(space: GSpace, eps: float):
    """Yield ``(center, A, B, C)`` for the canonical triples of each distinct ball."""
    pts = _points(space, None if isinstance(space, FiniteGSpace) else SAMPLE_LIMIT)
    member = space.g_vec(pts[:, None], pts[None, :], pts[None, :]) <= eps
    seen = set()
    for c in range(len(pts)):
        ball = np.flatnonzero(member[c])
        key = ball.tobytes()
        if key in seen:
            continue
        seen.add(key)
        sub = pts[ball]
        for I, J, K in iter_canonical_blocks(len(sub)):
            yield pts[c], sub[I], sub[J], sub[K]


def check_local_contractive(space: GSpace, T: SelfMap, eps: float, lam: float) -> Verdict:
    """``G(Tu, Tv, Tp) <= lam G(u, v, p)`` for all ``u, v, p`` in every ball ``C_G(x, eps)``."""
    if not 0 <= lam < 1:
        raise ValueError("lambda must lie in [0, 1)")
    if eps < 0:
        raise ValueError("eps must be non-negative")
    T.check(space)
    for x, A, B, C in _ball_triples(space, eps):
        g = space.g_vec(A, B, C)
        gi = space.g_vec(T.vec(A), T.vec(B), T.vec(C))
        bad = gi > lam * g + ATOL
        if bad.any():
            t = int(np.argmax(bad))
            return Verdict(
                False,
                {"center": space.to_point(x), "triple": _names(space, A[t], B[t], C[t]),
                 "image_G": float(gi[t]), "G": float(g[t])},
                space.sampled,
            )
    return Verdict(True, None, space.sampled, {"eps": eps, "lambda": lam})


def minimal_uniform_lambda(space: GSpace, T: SelfMap, eps: float) -> float | None:
    """Smallest ``lam`` passing ``check_local_contractive``; ``None`` if ``lam >= 1`` is needed."""
    if eps < 0:
        raise ValueError("eps must be non-negative")
    T.check(space)
    best = 0.0
    for _, A, B, C in _ball_triples(space, eps):
        g = space.g_vec(A, B, C)
        gi = space.g_vec(T.vec(A), T.vec(B), T.vec(C))
        zero = g <= 0
        if np.any(zero & (gi > 0)):
            return None
        if np.any(~zero):
            best = max(best, float(np.max(gi[~zero] / g[~zero])))
    return best if best < 1 else None


# ---------------------------------------------------------------- a_n conditions


def _sequential(space, T, seq, N, phi):
    if N < 1:
        raise ValueError("N must be at least 1")
    T.check(space)
    a = seq.terms(N)
    a1_ok = bool(0 <= a[0] < 0.5)
    pts = _points(space)
    powers = [T.power(n) for n in range(1, N + 1)]
    for A, B, C in _canonical(space, pts):
        TA, TB, TC = T.vec(A), T.vec(B), T.vec(C)
        disp = space.g_vec(A, TA, TA) + space.g_vec(B, TB, TB) + space.g_vec(C, TC, TC)
        for n, Tn in enumerate(powers, start=1):
            lhs = space.g_vec(Tn.vec(A), Tn.vec(B), Tn.vec(C))
            rhs = a[n - 1] * disp
            if phi is None:
                bad = lhs > rhs + ATOL
            else:
                bad = phi(lhs) > phi(rhs) + ATOL
            if bad.any():
                t = int(np.argmax(bad))
                return Verdict(
                    False,
                    {"n": n, "triple": _names(space, A[t], B[t], C[t]), "lhs": float(lhs[t]), "rhs": float(rhs[t])},
                    space.sampled,
                    {"a1": float(a[0]), "a1_below_half": a1_ok, "inequality": False, "N": N},
                )
    return Verdict(a1_ok, None, space.sampled, {"a1": float(a[0]), "a1_below_half": a1_ok, "inequality": True, "N": N})


def check_sequential_condition(space: GSpace, T: SelfMap, seq: CoefficientSeq, N: int) -> Verdict:
    """``G(T^n x, T^n y, T^n z) <= a_n [G(x,Tx,Tx) + G(y,Ty,Ty) + G(z,Tz,Tz)]`` for ``n <= N``.

    ``holds`` also requires ``a_1 < 1/2``; ``detail`` reports the two parts separately.
    """
    return _sequential(space, T, seq, N, None)


def check_phi_condition(space: GSpace, T: SelfMap, seq: CoefficientSeq, phi: PhiFunction, N: int) -> Verdict:
    """The sequential condition with both sides wrapped in ``phi``."""
    return _sequential(space, T, seq, N, phi)


# ---------------------------------------------------------------- tensor conditions


def _ordered(space: GSpace, limit: int | None):
    pts = _points(space, None if isinstance(space, FiniteGSpace) else limit)
    A, B, C = (g.ravel() for g in np.meshgrid(pts, pts, pts, indexing="ij"))
    return A, B, C


def check_power_condition(
    space: GSpace,
    T: SelfMap,
    delta: CoefficientTensor,
    phi: PhiFunction,
    horizon: int,
    gamma: CoefficientTensor | None = None,
    form: str = "split",
    grid_limit: int = 17,
) -> Verdict:
    """Mixed-power contraction conditions over index triples ``1 <= i, j, k <= horizon``.

    ``form="split"``: ``F(G(T^i x, T^j y, T^k z)) <= F(D [G(x,T^i x,T^i x) + G(y,T^j y,T^j y) + G(z,T^k z,T^k z)])``
    plus ``F(Gam G(x, y, z))`` when ``gamma`` is given.
    ``form="merged"``: ``G(x, y, z)`` joins the bracket and there is no separate term.
    Only triples with ``x != y`` are constrained.
    """
    if form not in ("split", "merged"):
        raise ValueError("form is 'split' or 'merged'")
    T.check(space)
    A, B, C = _ordered(space, grid_limit)
    keep = A != B
    A, B, C = A[keep], B[keep], C[keep]
    g_xyz = space.g_vec(A, B, C)
    P = {i: T.power(i) for i in range(1, horizon + 1)}
    img = {i: (P[i].vec(A), P[i].vec(B), P[i].vec(C)) for i in P}
    disp = {i: (space.g_vec(A, img[i][0], img[i][0]), space.g_vec(B, img[i][1], img[i][1]),
                space.g_vec(C, img[i][2], img[i][2])) for i in P}
    for i, j, k in itertools.product(P, repeat=3):
        d = delta(i, j, k)
        lhs = phi(space.g_vec(img[i][0], img[j][1], img[k][2]))
        bracket = disp[i][0] + disp[j][1] + disp[k][2]
        if form == "merged":
            rhs = phi(d * (bracket + g_xyz))
        else:
            rhs = phi(d * bracket)
            if gamma is not None:
                rhs = rhs + phi(gamma(i, j, k) * g_xyz)
        bad = lhs > rhs + ATOL
        if bad.any():
            t = int(np.argmax(bad))
            return Verdict(
                False,
                {"indices": (i, j, k), "triple": _names(space, A[t], B[t], C[t]),
                 "lhs": float(lhs[t]), "rhs": float(rhs[t])},
                space.sampled,
                {"horizon": horizon, "form": form},
            )
    return Verdict(True, None, space.sampled, {"horizon": horizon, "form": form})


def family_member(maps: Sequence[SelfMap], n: int) -> SelfMap:
    """``T_n`` of a cyclically extended family (``n >= 1``)."""
    return maps[(n - 1) % len(maps)]


def check_common_condition(
    space: GSpace,
    maps: Sequence[SelfMap],
    delta: CoefficientTensor,
    theta: CoefficientTensor,
    lamda: CoefficientTensor,
    horizon: int,
    phi: PhiFunction | None = None,
    grid_limit: int = 17,
) -> Verdict:
    """``G(T_i x, T_j y, T_k z) <= D G(x,y,z) + Th [G(T_i x,x,x) + G(y,T_j y,y) + G(z,z,T_k z)]
    + L [G(T_i x,y,z) + G(x,T_j y,z) + G(x,y,T_k z)]`` for ``i, j, k <= horizon``,
    optionally wrapped in ``phi`` on both sides."""
    for T in maps:
        T.check(space)
    A, B, C = _ordered(space, grid_limit)
    g_xyz = space.g_vec(A, B, C)
    for i, j, k in itertools.product(range(1, horizon + 1), repeat=3):
        TA = family_member(maps, i).vec(A)
        TB = family_member(maps, j).vec(B)
        TC = family_member(maps, k).vec(C)
        lhs = space.g_vec(TA, TB, TC)
        own = space.g_vec(TA, A, A) + space.g_vec(B, TB, B) + space.g_vec(C, C, TC)
        cross = space.g_vec(TA, B, C) + space.g_vec(A, TB, C) + space.g_vec(A, B, TC)
        rhs = delta(i, j, k) * g_xyz + theta(i, j, k) * own + lamda(i, j, k) * cross
        if phi is not None:
            lhs, rhs = phi(lhs), phi(rhs)
        bad = lhs > rhs + ATOL
        if bad.any():
            t = int(np.argmax(bad))
            return Verdict(
                False,
                {"indices": (i, j, k), "triple": _names(space, A[t], B[t], C[t]),
                 "lhs": float(lhs[t]), "rhs": float(rhs[t])},
                space.sampled,
                {"horizon": horizon},
            )
    return Verdict(True, None, space.sampled, {"horizon": horizon})


def orbit(space: GSpace, T: SelfMap, x0, length: int) -> list:
    """``[x0, T x0, ..., T^length x0]`` in the space's point representation."""
    v = space.from_point(x0)
    out = [v]
    for _ in range(length):
        v = T.vec(v)
        out.append(v)
    return out


def orbit_bound(space: GSpace, T: SelfMap, x0, length: int) -> float:
    """``sup G`` over all triples drawn from the first ``length + 1`` orbit points."""
    vals = np.array(orbit(space, T, x0, length))
    if isinstance(space, FiniteGSpace):
        vals = np.unique(vals.astype(np.intp))
    else:
        # both interval families attain their sup over a set at its extremes
        vals = np.array([vals.min(), vals.max()], dtype=float)
    A, B, C = (g.ravel() for g in np.meshgrid(vals, vals, vals, indexing="ij"))
    return float(space.g_vec(A, B, C).max())
