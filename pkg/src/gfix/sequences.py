"""Series tests, lambda-sequence certificates and coefficient-tensor checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .coefficients import CoefficientSeq, CoefficientTensor
from .gspace import ATOL

CONVERGENT = "certified-convergent"
DIVERGENT = "certified-divergent"
UNDECIDED = "undecided"

LAMBDA_GRID = tuple(k / 20 for k in range(1, 20))


@dataclass(frozen=True)
class SeriesVerdict:
    status: str
    partial_sum: float
    ratio: float | None = None
    reason: str = ""

    @property
    def convergent(self) -> bool:
        return self.status == CONVERGENT

    def to_dict(self) -> dict:
        return {"status": self.status, "partial_sum": self.partial_sum, "ratio": self.ratio, "reason": self.reason}


def _tail_ratios(terms: np.ndarray) -> np.ndarray:
    half = len(terms) // 2
    tail = terms[half:]
    return tail[1:] / tail[:-1]


def series_converges(seq: CoefficientSeq) -> SeriesVerdict:
    """Classify ``sum a_n``.

    Closed forms are decided analytically. Tabulated sequences get a ratio
    test over the second half of the horizon: every ratio below 1 certifies
    convergence, every ratio at least 1 certifies divergence (terms do not
    decay), anything else is undecided.
    """
    if seq.horizon < 8:
        raise ValueError("series test needs a horizon of at least 8")
    if seq.family == "product":
        base = seq.base.terms()
        if np.any(base <= 0):
            raise ValueError("nonpositive term encountered")
        partial = float(np.exp(seq.log_terms()).sum())
        # C_{n+1} / C_n = r_{n+1}
        ratios = base[len(base) // 2 + 1 :]
        return _ratio_verdict(ratios, partial, "ratio test on running products")
    terms = seq.terms()
    if np.any(terms <= 0):
        raise ValueError("nonpositive term encountered")
    partial = float(terms.sum())
    if seq.family == "geometric":
        if seq.rho < 1:
            return SeriesVerdict(CONVERGENT, partial, seq.rho, "geometric with ratio < 1")
        return SeriesVerdict(DIVERGENT, partial, seq.rho, "geometric with ratio >= 1")
    if seq.family == "inv-sq-shifted":
        return SeriesVerdict(CONVERGENT, partial, 0.25, "(c/(1+2^n))^2 <= c^2/n^2")
    if seq.family == "harmonic":
        return SeriesVerdict(DIVERGENT, partial, 1.0, "harmonic series")
    if seq.family == "constant":
        return SeriesVerdict(DIVERGENT, partial, 1.0, "constant positive terms")
    return _ratio_verdict(_tail_ratios(terms), partial, "tail ratio test")


def _ratio_verdict(ratios: np.ndarray, partial: float, how: str) -> SeriesVerdict:
    hi, lo = float(ratios.max()), float(ratios.min())
    if hi < 1:
        return SeriesVerdict(CONVERGENT, partial, hi, how)
    if lo >= 1:
        return SeriesVerdict(DIVERGENT, partial, lo, how)
    return SeriesVerdict(UNDECIDED, partial, hi, how)


def terms_vanish(seq: CoefficientSeq) -> SeriesVerdict:
    """Decide ``a_n -> 0`` (the relaxed hypothesis): closed forms exactly, data by a tail ratio test."""
    if seq.family in ("harmonic", "inv-sq-shifted"):
        return SeriesVerdict(CONVERGENT, 0.0, None, "closed form tends to 0")
    if seq.family == "geometric":
        ok = seq.rho < 1
        return SeriesVerdict(CONVERGENT if ok else DIVERGENT, 0.0, seq.rho, "geometric")
    if seq.family == "constant":
        return SeriesVerdict(DIVERGENT, 0.0, 1.0, "constant positive terms")
    terms = seq.terms()
    if terms[-1] == 0:
        return SeriesVerdict(CONVERGENT, 0.0, 0.0, "sequence reaches 0")
    return _ratio_verdict(_tail_ratios(terms), float(terms[-1]), "tail ratio test")


# ---------------------------------------------------------------- lambda-sequences


@dataclass(frozen=True)
class LambdaCertificate:
    lam: float
    n_lambda: int
    horizon: int
    sampled: bool
    non_increasing: bool
    values: tuple = field(repr=False, default=())

    def replay(self) -> bool:
        """Re-check both certified inequalities term by term."""
        return _feasible(np.asarray(self.values), self.lam, self.n_lambda) is None

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "n_lambda": self.n_lambda,
            "horizon": self.horizon,
            "sampled": self.sampled,
            "non_increasing": self.non_increasing,
        }


@dataclass(frozen=True)
class LambdaRejection:
    witness_L: int
    horizon: int
    reason: str = ""

    def to_dict(self) -> dict:
        return {"rejected": True, "witness_L": self.witness_L, "horizon": self.horizon, "reason": self.reason}


def _feasible(r: np.ndarray, lam: float, n: int) -> int | None:
    """First failing index for the pair ``(lam, n)``, else ``None``.

    Link sums use the max metric: ``S(L) = sum_{i<L} max(r_i, r_{i+1}) <= lam L`` for
    ``n + 1 <= L <= H``; Cesaro means ``(1/k) sum_{i<=k} r_i <= lam`` for ``n <= k <= H``.
    """
    H = len(r)
    links = np.maximum(r[:-1], r[1:])
    S = np.concatenate(([0.0], np.cumsum(links)))  # S[L-1] = sum of the first L-1 links
    L = np.arange(1, H + 1)
    bad_L = (S > lam * L + ATOL) & (L >= n + 1)
    means = np.cumsum(r) / L
    bad_k = (means > lam + ATOL) & (L >= n)
    hits = np.flatnonzero(bad_L | bad_k)
    return int(L[hits[0]]) if len(hits) else None


def _as_array(r, horizon):
    if isinstance(r, CoefficientSeq):
        return r.terms(horizon), r.family != "tabulated"
    arr = np.asarray(r, dtype=float)
    if horizon is not None:
        arr = arr[:horizon]
    return arr, False


def lambda_sequence_check(r, horizon: int | None = None, lam: float | None = None):
    """Certify ``r`` as a lambda-sequence of the reals under the max metric.

    Without ``lam``: scan onsets ``n = 1 .. H // 2`` and return the first onset
    admitting a grid value ``lam in {0.05, ..., 0.95}``, with the smallest such
    ``lam``. With ``lam``: return the smallest onset for that value.
    """
    values, sampled = _as_array(r, horizon)
    if values.size == 0:
        raise ValueError("empty sequence")
    H = len(values)
    if H < 4:
        raise ValueError("lambda-sequence check needs a horizon of at least 4")
    if np.any(values < 0):
        raise ValueError("lambda-sequences live in the non-negative reals")
    non_inc = bool(np.all(np.diff(values) <= ATOL))
    grid = LAMBDA_GRID if lam is None else (float(lam),)
    if lam is not None and not 0 < lam < 1:
        raise ValueError("lambda must lie in (0, 1)")
    last_fail = H
    for n in range(1, H // 2 + 1):
        for cand in grid:
            fail = _feasible(values, cand, n)
            if fail is None:
                return LambdaCertificate(cand, n, H, sampled, non_inc, tuple(values.tolist()))
            last_fail = fail
    return LambdaRejection(last_fail, H, f"no lambda in the grid works for onsets up to {H // 2}")


@dataclass(frozen=True)
class ProductVerdict:
    series: SeriesVerdict
    limsup: float
    products: tuple = field(repr=False, default=())

    def to_dict(self) -> dict:
        return {"series": self.series.to_dict(), "limsup_surrogate": self.limsup}


def product_series_check(r: CoefficientSeq) -> ProductVerdict:
    """``sum C_n`` with ``C_n = prod_{i<=n} r_i``, plus ``sup`` of the second half of ``r``."""
    if r.horizon < 8:
        raise ValueError("series test needs a horizon of at least 8")
    C = CoefficientSeq.product_of(r)
    verdict = series_converges(C)
    terms = r.terms()
    return ProductVerdict(verdict, float(terms[len(terms) // 2 :].max()), tuple(C.terms().tolist()))


# ---------------------------------------------------------------- coefficient tensors


def diagonal_ratio(delta: CoefficientTensor, theta: CoefficientTensor, lamda: CoefficientTensor,
                   horizon: int, s: float = 1.0) -> np.ndarray:
    """``r_i = [D + 2 Th + 3 L] / [1 - Th - L]`` at indices ``(i, i+1, i+2)``, each raised to ``s``."""
    out = []
    for i in range(1, horizon + 1):
        d, t, l = (f(i, i + 1, i + 2) ** s for f in (delta, theta, lamda))
        den = 1.0 - t - l
        if den <= 0:
            raise ValueError(f"denominator 1 - Theta - Lambda <= 0 at index {i}")
        out.append((d + 2 * t + 3 * l) / den)
    return np.array(out)


@dataclass(frozen=True)
class CommonCoefficientVerdict:
    holds: bool
    max_combination: float
    witness: tuple | None
    r: tuple = field(repr=False, default=())
    lambda_result: LambdaCertificate | LambdaRejection | None = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "max_combination": self.max_combination,
            "witness": list(self.witness) if self.witness else None,
            "r_head": list(self.r[:8]),
            "lambda": self.lambda_result.to_dict() if self.lambda_result else None,
        }


def common_coefficient_check(delta: CoefficientTensor, theta: CoefficientTensor, lamda: CoefficientTensor,
                             horizon: int, s: float = 1.0) -> CommonCoefficientVerdict:
    """``0 <= D + 3 Th + 4 L < 1/2`` on every index triple up to ``horizon`` (terms raised
    to ``s``), and a lambda-sequence check of the diagonal ratios."""
    worst, witness = -1.0, None
    for i in range(1, horizon + 1):
        for j in range(1, horizon + 1):
            for k in range(1, horizon + 1):
                d, t, l = (f(i, j, k) for f in (delta, theta, lamda))
                if min(d, t, l) < 0:
                    return CommonCoefficientVerdict(False, float("nan"), (i, j, k))
                comb = d**s + 3 * t**s + 4 * l**s
                if comb > worst:
                    worst = comb
                    if comb >= 0.5 and witness is None:
                        witness = (i, j, k)
    r = diagonal_ratio(delta, theta, lamda, horizon, s)
    lam = lambda_sequence_check(r) if horizon >= 4 else None
    holds = witness is None
    return CommonCoefficientVerdict(holds, worst, witness, tuple(r.tolist()), lam)


def power_ratio(delta: CoefficientTensor, gamma: CoefficientTensor | None, s: float, horizon: int,
                merged: bool = False) -> np.ndarray:
    """Diagonal ratios at ``(i, i+1, i+1)``.

    Split form: ``(D^s + Gam^s) / (1 - (2D)^s)``; merged form: ``(2D)^s / (1 - (2D)^s)``.
    """
    out = []
    for i in range(1, horizon + 1):
        d = delta(i, i + 1, i + 1)
        den = 1.0 - (2 * d) ** s
        if den <= 0:
            raise ValueError(f"1 - (2 Delta)^s <= 0 at index {i}")
        if merged:
            num = (2 * d) ** s
        else:
            num = d**s + (gamma(i, i + 1, i + 1) ** s if gamma is not None else 0.0)
        out.append(num / den)
    return np.array(out)
