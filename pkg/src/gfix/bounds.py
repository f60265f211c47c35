"""A-priori error bounds attached to certificates.

F-domain bounds (``bound_phi_an``, ``bound_lambda_seq``) are returned as printed;
``to_g_units`` converts them back with the inverse power map.
"""

from __future__ import annotations

import math

import numpy as np

from .coefficients import CoefficientSeq, PhiFunction


def _check_index(n: int, m: int) -> None:
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")


def bound_seq_an(seq: CoefficientSeq, G0: float, n: int, m: int, K: float = 1.0) -> float:
    """``(a_n + ... + a_{n+m-1}) (1 + 2 a_1 / (1 - 2 a_1)) G0``, times ``K`` when given."""
    _check_index(n, m)
    a = seq.terms(n + m - 1) if m else np.zeros(0)
    a1 = seq.term(1)
    if a1 >= 0.5:
        raise ValueError(f"a_1 = {a1} must be below 1/2")
    if G0 < 0:
        raise ValueError("G0 must be non-negative")
    return K * float(a[n - 1 :].sum()) * (1.0 + 2 * a1 / (1 - 2 * a1)) * G0


def bound_phi_an(seq: CoefficientSeq, phi: PhiFunction, FG0: float, n: int, m: int, K: float = 1.0) -> float:
    """``(sum_{i=n}^{n+m-1} a_i^s) (1 + (2a_1)^s / (1 - (2a_1)^s)) FG0``, times ``K^s`` when given."""
    _check_index(n, m)
    s = phi.s
    q = (2 * seq.term(1)) ** s
    if q >= 1:
        raise ValueError(f"(2 a_1)^s = {q} must be below 1")
    if FG0 < 0:
        raise ValueError("FG0 must be non-negative")
    a = seq.terms(n + m - 1) if m else np.zeros(0)
    return K**s * float((a[n - 1 :] ** s).sum()) * (1.0 + q / (1 - q)) * FG0


def bound_ulc(lam: float, K: float, n_deg: int, eps: float, m: int) -> float:
    """``lam^m / (1 - lam) * K^2 n_deg eps / 2``."""
    if not 0 <= lam < 1:
        raise ValueError("lambda must lie in [0, 1)")
    if n_deg < 1:
        raise ValueError("chain degree must be at least 1")
    if m < 0:
        raise ValueError("m must be non-negative")
    return lam**m / (1 - lam) * K**2 * n_deg * eps / 2


def bound_lambda_seq(lam: float, n: int, K: float, s: float, FG0: float) -> float:
    """``K^s lam^n / (1 - lam) FG0``."""
    if not 0 < lam < 1:
        raise ValueError("lambda must lie in (0, 1)")
    if n < 0:
        raise ValueError("n must be non-negative")
    return K**s * lam**n / (1 - lam) * FG0


def to_g_units(phi: PhiFunction, value: float) -> float:
    if math.isinf(value):
        return math.inf
    return float(phi.inverse(value))
