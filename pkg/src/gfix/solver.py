"""Picard and round-robin iteration, theorem certificates and their a-priori bounds.

``certify`` assembles a ``Certificate`` from the checkers in ``analysis``,
``chains`` and ``sequences``. Every certificate carries the list of hypotheses
it rests on, each marked ``verified``, ``assumed`` (not mechanically checkable on
interval spaces) or ``failed``; it is valid only when none failed.

The bound attached to a valid certificate is an upper bound on
``G(x_m, x*, x*)`` along the orbit of ``x0``, in G-units.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import bounds as B
from .analysis import (
    check_common_condition,
    check_local_contractive,
    check_phi_condition,
    check_power_condition,
    check_sequential_condition,
    family_member,
    iterated_lipschitz,
    orbit_bound,
)
from .chains import is_chainable
from .coefficients import IDENTITY, CoefficientSeq, CoefficientTensor, PhiFunction, tail_power_sum
from .gspace import ATOL, FiniteGSpace, GSpace, _jsonable, derived_metric, g_eval, validate_axioms
from .maps import SelfMap, apply_map
from .sequences import (
    LambdaCertificate,
    common_coefficient_check,
    diagonal_ratio,
    lambda_sequence_check,
    power_ratio,
    product_series_check,
    series_converges,
    terms_vanish,
)


class TheoremId(str, enum.Enum):
    LIP_SERIES = "LIP_SERIES"
    LIP_BOUNDED_ORBIT = "LIP_BOUNDED_ORBIT"
    SEQ_AN = "SEQ_AN"
    SEQ_AN_BOUNDED_ORBIT = "SEQ_AN_BOUNDED_ORBIT"
    PHI_AN = "PHI_AN"
    PHI_AN_BOUNDED_ORBIT = "PHI_AN_BOUNDED_ORBIT"
    ULC_CHAINABLE = "ULC_CHAINABLE"
    LAMBDA_SEQ = "LAMBDA_SEQ"
    LAMBDA_COR = "LAMBDA_COR"
    LAMBDA_VAR_SUM = "LAMBDA_VAR_SUM"
    COMMON = "COMMON"
    COMMON_PHI = "COMMON_PHI"


VERIFIED, ASSUMED, FAILED = "verified", "assumed", "failed"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    status: str
    witness: Any = None
    detail: dict = field(default_factory=dict)
    sampled: bool = False

    @property
    def holds(self) -> bool:
        return self.status != FAILED

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "holds": self.holds,
            "witness": _jsonable(self.witness),
            "detail": _jsonable(self.detail),
            "sampled": self.sampled,
        }


def _hyp(name: str, ok: bool, witness=None, detail=None, sampled=False) -> Hypothesis:
    return Hypothesis(name, VERIFIED if ok else FAILED, witness, detail or {}, sampled)


@dataclass(frozen=True)
class Certificate:
    theorem: TheoremId
    hypotheses: tuple
    sampled: bool
    bound_fn: Callable[[int], float] | None = field(default=None, repr=False, compare=False)
    params: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def valid(self) -> bool:
        return all(h.holds for h in self.hypotheses)

    @property
    def failed(self) -> list[Hypothesis]:
        return [h for h in self.hypotheses if not h.holds]

    def bound(self, m: int) -> float:
        """A-priori bound on ``G(x_m, x*, x*)``; ``inf`` for invalid certificates."""
        if m < 0:
            raise ValueError("m must be non-negative")
        if not self.valid or self.bound_fn is None:
            return math.inf
        return float(self.bound_fn(m))

    def to_dict(self, bound_terms: int = 21) -> dict:
        return {
            "theorem": self.theorem.value,
            "valid": self.valid,
            "sampled": self.sampled,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "params": _jsonable(self.params),
            "bound": [{"m": m, "value": _jsonable(self.bound(m))} for m in range(bound_terms)] if self.valid else [],
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------- iteration


@dataclass(frozen=True)
class IterationTrace:
    """``steps[i]`` is ``d_G(x_i, T x_i)`` (the family maximum for round-robin runs)."""

    points: tuple
    steps: tuple
    residual: float
    converged: bool
    bounds: tuple = ()

    @property
    def iterations(self) -> int:
        return len(self.points) - 1

    @property
    def limit(self):
        return self.points[-1]

    def to_dict(self) -> dict:
        out = {
            "points": _jsonable(list(self.points)),
            "steps": [float(s) for s in self.steps],
            "residual": _jsonable(self.residual),
            "converged": self.converged,
            "iterations": self.iterations,
            "limit": _jsonable(self.limit),
        }
        if self.bounds:
            out["bounds"] = _jsonable([float(b) for b in self.bounds])
        return out


def picard(space: GSpace, T: SelfMap, x0, tol: float = 1e-12, max_iter: int = 1000,
           certificate: Certificate | None = None) -> IterationTrace:
    """Iterate ``x_{n+1} = T x_n`` until ``d_G(x_n, T x_n) <= tol`` or ``max_iter`` steps.

    With a certificate, ``bounds[m]`` holds its a-priori bound at each trace index.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    T.check(space)
    space.index(x0)
    points, steps = [x0], []
    while True:
        x = points[-1]
        Tx = apply_map(space, T, x)
        step = derived_metric(space, x, Tx)
        steps.append(step)
        if step <= tol or len(points) > max_iter:
            break
        points.append(Tx)
    x = points[-1]
    Tx = apply_map(space, T, x)
    residual = g_eval(space, x, Tx, Tx)
    converged = steps[-1] <= tol and residual <= tol
    bnds = tuple(certificate.bound(m) for m in range(len(points))) if certificate is not None else ()
    return IterationTrace(tuple(points), tuple(float(s) for s in steps), float(residual), converged, bnds)


@dataclass(frozen=True)
class CommonResult:
    trace: IterationTrace
    point: Any
    verified: bool
    unfixed_by: tuple = ()

    def to_dict(self) -> dict:
        return {
            "trace": self.trace.to_dict(),
            "common_fixed_point": _jsonable(self.point),
            "verified": self.verified,
            "unfixed_by": list(self.unfixed_by),
        }


def common_fixed_point(space: GSpace, maps: Sequence[SelfMap], x0, tol: float = 1e-12, max_iter: int = 1000,
                       verify_horizon: int | None = None) -> CommonResult:
    """Round-robin orbit ``x_n = T_n(x_{n-1})``; stops once every map moves the point by at most ``tol``.

    The family is extended cyclically. On convergence the limit is checked
    against ``T_1 .. T_verify_horizon``.
    """
    if not maps:
        raise ValueError("empty map family")
    if not tol > 0 or max_iter < 1:
        raise ValueError("need tol > 0 and max_iter >= 1")
    for T in maps:
        T.check(space)
    space.index(x0)

    def spread(x):
        return max(derived_metric(space, x, apply_map(space, T, x)) for T in maps)

    points, steps = [x0], [spread(x0)]
    while steps[-1] > tol and len(points) <= max_iter:
        n = len(points)
        points.append(apply_map(space, family_member(maps, n), points[-1]))
        steps.append(spread(points[-1]))
    u = points[-1]
    residual = max(g_eval(space, u, Tu, Tu) for Tu in (apply_map(space, T, u) for T in maps))
    converged = steps[-1] <= tol and residual <= tol
    trace = IterationTrace(tuple(points), tuple(float(s) for s in steps), float(residual), converged)
    if not converged:
        return CommonResult(trace, None, False)
    H = len(maps) if verify_horizon is None else verify_horizon
    bad = tuple(k for k in range(1, H + 1)
                if derived_metric(space, u, apply_map(space, family_member(maps, k), u)) > tol)
    return CommonResult(trace, u, not bad, bad)


# ---------------------------------------------------------------- shared hypotheses


def _space_hypotheses(space: GSpace, variant: str = "G5") -> list[Hypothesis]:
    """Axioms, completeness and continuity.

    ``variant``: ``"G5"`` (G-metric type space), ``"G5'"`` (G5 replaced by the
    two-term inequality) or ``"K1"`` (a G-metric: G5 with K = 1).
    """
    names = {"G5": "G-metric type space (G1-G5)", "G5'": "G-metric type space with (G5')",
             "K1": "G-metric space (G1-G5 with K = 1)"}
    if not isinstance(space, FiniteGSpace):
        return [
            Hypothesis(names[variant], ASSUMED, detail={"reason": "interval space; axioms not enumerable"}, sampled=True),
            Hypothesis("G-complete", ASSUMED, sampled=True),
            Hypothesis("T orbitally continuous", ASSUMED, sampled=True),
        ]
    report = validate_axioms(space, K=1.0 if variant == "K1" else None)
    needed = ["G1", "G2", "G3", "G4", "G5'" if variant == "G5'" else "G5"]
    bad = [a for a in needed if not report[a].holds]
    witness = {a: report[a].witness for a in bad} or None
    return [
        _hyp(names[variant], not bad, witness, {"failed": bad, "K": report.K}),
        Hypothesis("G-complete", VERIFIED, detail={"reason": "finite space"}),
        Hypothesis("T orbitally continuous", VERIFIED, detail={"reason": "finite space"}),
    ]


def _require(params: dict, *keys):
    missing = [k for k in keys if params.get(k) is None]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def _default_x0(space: GSpace):
    return space.points[0] if isinstance(space, FiniteGSpace) else space.hi


def _G0(space, T, x0) -> float:
    x1 = apply_map(space, T, x0)
    return g_eval(space, x0, x1, x1)


def _finite_horizon(space: GSpace, finite: int, analytic: int) -> int:
    return finite if isinstance(space, FiniteGSpace) else analytic


def _sup_from(values: np.ndarray, m: int) -> float:
    """``sup_{i >= m} values[i]`` for a non-negative sequence indexed from 1."""
    return float(values[m - 1 :].max()) if m <= len(values) else 0.0


# ---------------------------------------------------------------- Lipschitz theorems


def _lipschitz_profile(space, T, N):
    ell = np.array([1.0] + iterated_lipschitz(space, T, N))  # ell[i] = Lip(T^i)
    below = [p for p in range(1, N + 1) if ell[p] < 1]
    return ell, (below[0] if below else None)


def _lip_tail(ell: np.ndarray, p: int):
    """Tail sums and tail sups of ``Lip(T^i)``; beyond the horizon ``Lip(T^{i+p}) <= Lip(T^p) Lip(T^i)``."""
    N = len(ell) - 1
    Lp = ell[p]
    window = ell[N - p + 1 : N + 1]
    beyond_sum = Lp / (1 - Lp) * float(window.sum())
    beyond_sup = float(window.max())

    def tail_sum(m):
        if m <= N:
            return float(ell[m:].sum()) + beyond_sum
        return Lp ** ((m - N - 1) // p) * beyond_sum

    def tail_sup(m):
        if m <= N:
            return max(float(ell[m:].max()), beyond_sup)
        return Lp ** ((m - N - 1) // p) * beyond_sup

    return tail_sum, tail_sup


def _cert_lip(space, T, theorem, params):
    N = int(params.get("horizon") or 16)
    x0 = params.get("x0", _default_x0(space))
    ell, p = _lipschitz_profile(space, T, N)
    finite_ell = bool(np.all(np.isfinite(ell)))
    variant = "G5" if theorem is TheoremId.LIP_SERIES else "G5'"
    hyps = _space_hypotheses(space, variant)
    hyps.append(_hyp("T^n Lipschitzian", finite_ell, detail={"lip": ell[1:].tolist()}, sampled=space.sampled))
    if theorem is TheoremId.LIP_SERIES:
        hyps.append(_hyp("sum Lip(T^n) < inf", p is not None and finite_ell,
                         detail={"contracting_power": p, "horizon": N}, sampled=space.sampled))
    else:
        hyps.append(_hyp("lim Lip(T^n) = 0", p is not None and finite_ell,
                         detail={"contracting_power": p, "horizon": N}, sampled=space.sampled))
        max_iter = int(params.get("max_iter") or 64)
        alpha = orbit_bound(space, T, x0, max_iter)
        hyps.append(_hyp("orbit bounded", math.isfinite(alpha), detail={"sup": alpha, "max_iter": max_iter,
                                                                        "finite_horizon": True}))
    fn = None
    if all(h.holds for h in hyps):
        tail_sum, tail_sup = _lip_tail(ell, p)
        if theorem is TheoremId.LIP_SERIES:
            G0, K = _G0(space, T, x0), space.K
            fn = lambda m: K * tail_sum(m) * G0
        else:
            fn = lambda m: tail_sup(m) * alpha
    return hyps, fn, {"horizon": N, "x0": x0}


# ---------------------------------------------------------------- a_n theorems


def _seq_tail_sup(seq: CoefficientSeq, ratio: float | None):
    if seq.closed_form:
        # every builtin closed form is non-increasing in n
        return lambda m: seq.term(max(m, 1)) if seq.family != "geometric" or seq.rho <= 1 else math.inf
    a = seq.terms()
    H = len(a)

    def sup(m):
        if m <= H:
            return _sup_from(a, max(m, 1))
        return a[-1] * ratio ** (m - H) if ratio is not None and ratio < 1 else math.inf

    return sup


def _cert_an(space, T, theorem, params):
    (seq,) = _require(params, "seq")
    phi = params.get("phi")
    is_phi = theorem in (TheoremId.PHI_AN, TheoremId.PHI_AN_BOUNDED_ORBIT)
    if is_phi and phi is None:
        raise ValueError("missing parameter(s): phi")
    if not is_phi:
        phi = IDENTITY
    bounded = theorem in (TheoremId.SEQ_AN_BOUNDED_ORBIT, TheoremId.PHI_AN_BOUNDED_ORBIT)
    N = int(params.get("horizon") or _finite_horizon(space, 32, 6))
    N = min(N, seq.horizon) if seq.family == "tabulated" else N
    x0 = params.get("x0", _default_x0(space))
    relaxed = bool(params.get("relaxed", False))

    hyps = _space_hypotheses(space)
    v = check_phi_condition(space, T, seq, phi, N) if is_phi else check_sequential_condition(space, T, seq, N)
    label = "F-wrapped a_n contraction condition" if is_phi else "a_n contraction condition"
    hyps.append(_hyp(label, v.detail["inequality"], v.witness, {"N": N}, v.sampled))
    hyps.append(_hyp("0 <= a_1 < 1/2", v.detail["a1_below_half"], detail={"a1": v.detail["a1"]}))
    if bounded or relaxed:
        sv = terms_vanish(seq)
        hyps.append(_hyp("a_n -> 0", sv.convergent, detail=sv.to_dict()))
    else:
        sv = series_converges(seq)
        hyps.append(_hyp("sum a_n converges", sv.convergent, detail=sv.to_dict()))
    if bounded:
        max_iter = int(params.get("max_iter") or 64)
        alpha = orbit_bound(space, T, x0, max_iter)
        hyps.append(_hyp("orbit bounded", math.isfinite(alpha),
                         detail={"sup": alpha, "max_iter": max_iter, "finite_horizon": True}))

    fn = None
    notes = []
    if all(h.holds for h in hyps):
        G0, K, s = _G0(space, T, x0), space.K, phi.s
        if bounded:
            # G(x_m, x*, x*) = G(T^m x0, T^m x*, T^m x*) <= a_m G(x0, x1, x1)
            sup = _seq_tail_sup(seq, sv.ratio)
            fn = lambda m: alpha if m == 0 else min(alpha, sup(m) * G0)
        elif relaxed:
            notes.append("relaxed mode: no summable tail, bound not available")
        else:
            a1 = seq.term(1)
            q = (2 * a1) ** s
            factor = 1 + q / (1 - q)
            FG0 = float(phi(G0))

            def fn(m, seq=seq, sv=sv):
                def at(k):
                    return K**s * tail_power_sum(seq, k, s, sv.ratio) * factor * FG0
                F_bound = at(m) if m >= 1 else K**s * (FG0 + at(1))
                return B.to_g_units(phi, F_bound)
    return hyps, fn, {"horizon": N, "x0": x0, "relaxed": relaxed}, notes


# ---------------------------------------------------------------- chainable setting


def _cert_ulc(space, T, params):
    eps, lam = _require(params, "eps", "lam")
    eps, lam = float(eps), float(lam)
    if not 0 <= lam < 1:
        raise ValueError("lambda must lie in [0, 1)")
    hyps = _space_hypotheses(space)
    v = check_local_contractive(space, T, eps, lam)
    hyps.append(_hyp("(eps, lambda)-uniformly locally contractive", v.holds, v.witness, v.detail, v.sampled))
    if isinstance(space, FiniteGSpace):
        cv = is_chainable(space, eps / 2)
        hyps.append(_hyp("eps/2-chainable", cv.chainable, cv.blocking_pair,
                         {"max_degree": cv.max_degree, "epsilon": eps / 2}))
        n_deg = max(cv.max_degree, 1)
    else:
        hyps.append(Hypothesis("eps/2-chainable", ASSUMED, sampled=True))
        n_deg = 1
    fn = None
    if all(h.holds for h in hyps):
        K = space.K
        fn = lambda m: B.bound_ulc(lam, K, n_deg, eps, m)
    return hyps, fn, {"eps": eps, "lam": lam, "n_deg": n_deg}


# ---------------------------------------------------------------- lambda-sequence theorems


def _lambda_bound(r: np.ndarray, cert: LambdaCertificate, K, phi: PhiFunction, FG0: float):
    """``K^s [sum_{k=m}^{n-1} C_k + sum_{k >= max(m, n)} lam^k] FG0`` with ``C_0 = 1``.

    Past the onset the products obey ``C_k <= (mean of r_1..r_k)^k <= lam^k``.
    """
    C = np.concatenate(([1.0], np.cumprod(r)))
    n, lam, s = cert.n_lambda, cert.lam, phi.s

    def fn(m):
        head = float(C[m:n].sum()) if m < n else 0.0
        tail = lam ** max(m, n) / (1 - lam)
        return B.to_g_units(phi, K**s * (head + tail) * FG0)

    return fn


def _cert_lambda(space, T, theorem, params):
    (delta,) = _require(params, "delta")
    gamma = params.get("gamma")
    phi = params.get("phi") or IDENTITY
    H = int(params.get("horizon") or _finite_horizon(space, 8, 4))
    rh = int(params.get("r_horizon") or 64)
    x0 = params.get("x0", _default_x0(space))
    merged = theorem is TheoremId.LAMBDA_COR or (theorem is TheoremId.LAMBDA_VAR_SUM and gamma is None)
    if theorem is TheoremId.LAMBDA_SEQ and gamma is None:
        raise ValueError("missing parameter(s): gamma")

    hyps = _space_hypotheses(space)
    form = "merged" if merged else "split"
    v = check_power_condition(space, T, delta, phi, H, gamma=None if merged else gamma, form=form)
    hyps.append(_hyp("tensor contraction condition", v.holds, v.witness, v.detail, v.sampled))
    worst = max(delta(i, j, k) for i in range(1, H + 1) for j in range(1, H + 1) for k in range(1, H + 1))
    if gamma is not None and not merged:
        worst = max(worst, max(gamma(i, j, k) for i in range(1, H + 1) for j in range(1, H + 1)
                               for k in range(1, H + 1)))
    hyps.append(_hyp("0 <= Delta, Gamma < 1/2", worst < 0.5, detail={"max": worst, "horizon": H}))
    try:
        r = power_ratio(delta, None if merged else gamma, phi.s, rh, merged=merged)
    except ValueError as exc:
        hyps.append(_hyp("r_i well defined", False, detail={"error": str(exc)}))
        return hyps, None, {"horizon": H}

    fn = None
    G0 = _G0(space, T, x0)
    FG0 = float(phi(G0))
    if theorem is TheoremId.LAMBDA_VAR_SUM:
        pv = product_series_check(CoefficientSeq.tabulated(r)) if np.all(r > 0) else None
        if pv is None:
            # some r_i = 0: every later product vanishes
            hyps.append(_hyp("sum C_n converges", True, detail={"reason": "r_i = 0 for some i"}))
            hyps.append(_hyp("limsup of coefficient powers < 1", worst < 1))
            C = np.cumprod(r)
            ratio = 0.0
        else:
            hyps.append(_hyp("sum C_n converges", pv.series.convergent, detail=pv.to_dict()))
            hyps.append(_hyp("limsup of coefficient powers < 1", worst**phi.s < 1,
                             detail={"sup": worst**phi.s}))
            C = np.array(pv.products)
            ratio = pv.series.ratio
        if all(h.holds for h in hyps):
            Cfull = np.concatenate(([1.0], C))
            K = space.K
            L = len(Cfull)

            def fn(m):
                if m < L:
                    total = float(Cfull[m:].sum()) + Cfull[-1] * ratio / (1 - ratio)
                else:
                    total = Cfull[-1] * ratio ** (m - L + 1) / (1 - ratio)
                return B.to_g_units(phi, K**phi.s * total * FG0)
        return hyps, fn, {"horizon": H, "x0": x0, "s": phi.s}

    cert = lambda_sequence_check(r)
    ok = isinstance(cert, LambdaCertificate)
    hyps.append(_hyp("r_i is a lambda-sequence", ok, None if ok else cert.witness_L, cert.to_dict()))
    hyps.append(_hyp("r_i non-increasing", bool(np.all(np.diff(r) <= ATOL)), detail={"r_head": r[:8].tolist()}))
    if all(h.holds for h in hyps):
        fn = _lambda_bound(r, cert, space.K, phi, FG0)
    return hyps, fn, {"horizon": H, "x0": x0, "s": phi.s}


# ---------------------------------------------------------------- common fixed points


def _cert_common(space, maps, theorem, params):
    delta, theta, lamda = _require(params, "delta", "theta", "lamda")
    phi = params.get("phi") if theorem is TheoremId.COMMON_PHI else None
    if theorem is TheoremId.COMMON_PHI and phi is None:
        raise ValueError("missing parameter(s): phi")
    s = phi.s if phi is not None else 1.0
    H = int(params.get("horizon") or max(_finite_horizon(space, 6, 3), len(maps)))
    x0 = params.get("x0", _default_x0(space))

    hyps = _space_hypotheses(space, "K1")
    v = check_common_condition(space, maps, delta, theta, lamda, H, phi)
    hyps.append(_hyp("common contraction condition", v.holds, v.witness, v.detail, v.sampled))
    try:
        cv = common_coefficient_check(delta, theta, lamda, max(H, 4), s)
    except ValueError as exc:
        hyps.append(_hyp("r_i well defined", False, detail={"error": str(exc)}))
        return hyps, None, {"horizon": H}
    hyps.append(_hyp("Delta + 3 Theta + 4 Lambda < 1/2", cv.holds, cv.witness, {"max": cv.max_combination}))
    r = diagonal_ratio(delta, theta, lamda, 64, s)
    cert = lambda_sequence_check(r)
    ok = isinstance(cert, LambdaCertificate)
    hyps.append(_hyp("r_i is a lambda-sequence", ok, None if ok else cert.witness_L, cert.to_dict()))
    hyps.append(_hyp("r_i non-increasing", bool(np.all(np.diff(r) <= ATOL)), detail={"r_head": r[:8].tolist()}))
    fn = None
    if all(h.holds for h in hyps):
        x1 = apply_map(space, maps[0], x0)
        G0 = g_eval(space, x0, x1, x1)
        F = phi or IDENTITY
        fn = _lambda_bound(r, cert, 1.0, F, float(F(G0)))
    return hyps, fn, {"horizon": H, "x0": x0, "family_size": len(maps)}


# ---------------------------------------------------------------- dispatch


def certify(space: GSpace, T, theorem: TheoremId | str, params: dict | None = None) -> Certificate:
    """Check every hypothesis of ``theorem`` for ``(space, T)``.

    ``T`` is a single map, or a sequence of maps for the common fixed-point theorems.
    Required ``params`` per theorem:

    ============================  ==========================================
    LIP_*                         (optional) horizon, x0, max_iter
    SEQ_AN*, PHI_AN*              seq; phi for PHI_*; optional relaxed
    ULC_CHAINABLE                 eps, lam
    LAMBDA_SEQ                    delta, gamma; optional phi
    LAMBDA_COR                    delta; optional phi
    LAMBDA_VAR_SUM                delta; optional gamma, phi
    COMMON, COMMON_PHI            delta, theta, lamda; phi for COMMON_PHI
    ============================  ==========================================
    """
    theorem = TheoremId(theorem)
    params = dict(params or {})
    notes: list[str] = []
    if theorem in (TheoremId.COMMON, TheoremId.COMMON_PHI):
        maps = list(T) if isinstance(T, (list, tuple)) else [T]
        hyps, fn, used = _cert_common(space, maps, theorem, params)
    else:
        if isinstance(T, (list, tuple)):
            raise TypeError(f"{theorem.value} takes a single map")
        T.check(space)
        if theorem in (TheoremId.LIP_SERIES, TheoremId.LIP_BOUNDED_ORBIT):
            hyps, fn, used = _cert_lip(space, T, theorem, params)
        elif theorem in (TheoremId.SEQ_AN, TheoremId.SEQ_AN_BOUNDED_ORBIT, TheoremId.PHI_AN,
                         TheoremId.PHI_AN_BOUNDED_ORBIT):
            hyps, fn, used, notes = _cert_an(space, T, theorem, params)
        elif theorem is TheoremId.ULC_CHAINABLE:
            hyps, fn, used = _cert_ulc(space, T, params)
        else:
            hyps, fn, used = _cert_lambda(space, T, theorem, params)
    if fn is None and all(h.holds for h in hyps) and not notes:
        notes.append("no bound available")
    sampled = space.sampled or any(h.sampled for h in hyps)
    return Certificate(theorem, tuple(hyps), sampled, fn, used, tuple(notes))
