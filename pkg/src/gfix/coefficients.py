"""Coefficient sequences, three-index coefficient tensors and power-type Phi functions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

SEQ_FAMILIES = ("geometric", "inv-sq-shifted", "harmonic", "constant", "tabulated", "product")


@dataclass(frozen=True)
class CoefficientSeq:
    """A positive sequence ``a_1, a_2, ...`` known up to ``horizon``.

    Closed forms:
      geometric       ``q * rho**n``
      inv-sq-shifted  ``(c / (1 + 2**n))**2``
      harmonic        ``1 / n``
      constant        ``c``
    ``tabulated`` holds explicit values (horizon = their count); ``product``
    holds the running products of ``base``.
    """

    family: str
    q: float = 1.0
    rho: float = 0.5
    c: float = 1.0
    values: tuple = ()
    horizon: int = 64
    base: "CoefficientSeq | None" = field(default=None, repr=False)

    def __post_init__(self):
        if self.family not in SEQ_FAMILIES:
            raise ValueError(f"unknown coefficient family {self.family!r}")
        if self.family == "tabulated":
            vals = tuple(float(v) for v in self.values)
            if not vals:
                raise ValueError("empty tabulated sequence")
            object.__setattr__(self, "values", vals)
            object.__setattr__(self, "horizon", len(vals))
        if self.family == "product":
            if self.base is None:
                raise ValueError("product sequence needs a base")
            object.__setattr__(self, "horizon", self.base.horizon)
        if self.horizon < 1:
            raise ValueError("horizon must be positive")

    # constructors
    @classmethod
    def geometric(cls, q: float, rho: float, horizon: int = 64) -> "CoefficientSeq":
        return cls("geometric", q=q, rho=rho, horizon=horizon)

    @classmethod
    def inv_sq_shifted(cls, c: float = 1.0, horizon: int = 64) -> "CoefficientSeq":
        return cls("inv-sq-shifted", c=c, horizon=horizon)

    @classmethod
    def harmonic(cls, horizon: int = 64) -> "CoefficientSeq":
        return cls("harmonic", horizon=horizon)

    @classmethod
    def constant(cls, c: float, horizon: int = 64) -> "CoefficientSeq":
        return cls("constant", c=c, horizon=horizon)

    @classmethod
    def tabulated(cls, values) -> "CoefficientSeq":
        return cls("tabulated", values=tuple(values))

    @classmethod
    def product_of(cls, base: "CoefficientSeq") -> "CoefficientSeq":
        return cls("product", base=base)

    @property
    def closed_form(self) -> bool:
        return self.family in ("geometric", "inv-sq-shifted", "harmonic", "constant")

    def terms(self, N: int | None = None) -> np.ndarray:
        """``[a_1, ..., a_N]`` (default ``N = horizon``)."""
        N = self.horizon if N is None else int(N)
        n = np.arange(1, N + 1, dtype=float)
        if self.family == "geometric":
            return self.q * self.rho**n
        if self.family == "inv-sq-shifted":
            return (self.c / (1.0 + 2.0**n)) ** 2
        if self.family == "harmonic":
            return 1.0 / n
        if self.family == "constant":
            return np.full(N, float(self.c))
        if self.family == "tabulated":
            if N > len(self.values):
                raise IndexError(f"tabulated sequence has only {len(self.values)} terms")
            return np.array(self.values[:N])
        return np.exp(self.log_terms(N))

    def log_terms(self, N: int | None = None) -> np.ndarray:
        N = self.horizon if N is None else int(N)
        if self.family == "product":
            base = self.base.terms(N)
            with np.errstate(divide="ignore"):
                return np.cumsum(np.log(base))
        with np.errstate(divide="ignore"):
            return np.log(self.terms(N))

    def term(self, n: int) -> float:
        if n < 1:
            raise IndexError("sequences start at n = 1")
        return float(self.terms(n)[-1])

    def to_dict(self) -> dict:
        if self.family == "geometric":
            return {"family": "geometric", "q": self.q, "rho": self.rho, "horizon": self.horizon}
        if self.family == "inv-sq-shifted":
            return {"family": "inv-sq-shifted", "c": self.c, "horizon": self.horizon}
        if self.family == "constant":
            return {"family": "constant", "c": self.c, "horizon": self.horizon}
        if self.family == "harmonic":
            return {"family": "harmonic", "horizon": self.horizon}
        if self.family == "tabulated":
            return {"family": "tabulated", "values": list(self.values)}
        return {"family": "product", "base": self.base.to_dict()}


def tail_power_sum(seq: CoefficientSeq, m: int, s: float = 1.0, ratio: float | None = None) -> float:
    """Upper bound on ``sum_{i >= m} a_i**s``.

    Closed forms use their exact geometric majorants. Tabulated and product
    sequences sum the known terms and extend past the horizon with the tail
    ``ratio`` (a finite-horizon estimate); without one the result is ``inf``.
    """
    m = max(int(m), 1)
    if seq.family == "geometric":
        if seq.rho >= 1:
            return math.inf
        return (seq.q * seq.rho**m) ** s / (1.0 - seq.rho**s)
    if seq.family == "inv-sq-shifted":
        # (c / (1 + 2^i))^(2s) <= c^(2s) * 4^(-s i); sum 64 terms exactly and bound the rest
        i = np.arange(m, m + 64, dtype=float)
        head = float(np.sum((seq.c / (1.0 + 2.0**i)) ** (2 * s)))
        rest = seq.c ** (2 * s) * 4.0 ** (-s * (m + 64)) / (1.0 - 4.0 ** (-s))
        return head + rest
    if seq.family in ("harmonic", "constant"):
        return math.inf
    H = seq.horizon
    terms = seq.terms(H) ** s
    if ratio is None or not ratio < 1:
        return math.inf
    r = ratio**s
    if m <= H:
        return float(terms[m - 1 :].sum()) + float(terms[-1]) * r / (1.0 - r)
    return float(terms[-1]) * r ** (m - H) / (1.0 - r)


@dataclass(frozen=True)
class CoefficientTensor:
    """A three-index family ``(i, j, k) -> value`` in ``[0, 1)``, symmetric in its indices."""

    family: str
    value: float = 0.0
    entries: dict = field(default_factory=dict, repr=False)
    fn: Callable[[int, int, int], float] | None = field(default=None, repr=False, compare=False)
    horizon: int = 64

    def __post_init__(self):
        if self.family not in ("constant", "tabulated", "function"):
            raise ValueError(f"unknown tensor family {self.family!r}")
        if self.family == "constant" and not 0 <= self.value < 1:
            raise ValueError("tensor values must lie in [0, 1)")
        if self.family == "tabulated":
            clean = {}
            for key, v in self.entries.items():
                i, j, k = sorted(int(t) for t in key)
                if not 0 <= float(v) < 1:
                    raise ValueError(f"tensor entry {key} = {v} outside [0, 1)")
                clean[(i, j, k)] = float(v)
            object.__setattr__(self, "entries", clean)
        if self.family == "function" and self.fn is None:
            raise ValueError("function tensor needs fn")

    @classmethod
    def constant(cls, value: float, horizon: int = 64) -> "CoefficientTensor":
        return cls("constant", value=float(value), horizon=horizon)

    @classmethod
    def tabulated(cls, entries, horizon: int | None = None) -> "CoefficientTensor":
        if not isinstance(entries, dict):
            entries = {(e[0], e[1], e[2]): e[3] for e in entries}
        h = horizon if horizon is not None else max((max(k) for k in entries), default=1)
        return cls("tabulated", entries=entries, horizon=h)

    @classmethod
    def function(cls, fn, horizon: int = 64) -> "CoefficientTensor":
        return cls("function", fn=fn, horizon=horizon)

    def __call__(self, i: int, j: int, k: int) -> float:
        if self.family == "constant":
            return self.value
        if self.family == "tabulated":
            key = tuple(sorted((int(i), int(j), int(k))))
            try:
                return self.entries[key]
            except KeyError:
                raise KeyError(f"tensor undefined at {key}") from None
        return float(self.fn(int(i), int(j), int(k)))

    def to_dict(self) -> dict:
        if self.family == "constant":
            return {"family": "constant", "value": self.value}
        if self.family == "tabulated":
            return {"family": "tabulated", "entries": [[*k, v] for k, v in sorted(self.entries.items())]}
        return {"family": "function", "horizon": self.horizon}


@dataclass(frozen=True)
class PhiFunction:
    """``F(x) = c * x**s`` with ``0 < s <= 1`` and ``c > 0``."""

    s: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        if not 0 < self.s <= 1:
            raise ValueError("degree s must lie in (0, 1]")
        if not self.c > 0:
            raise ValueError("scale c must be positive")

    def __call__(self, x):
        return self.c * np.power(x, self.s)

    def inverse(self, y):
        return np.power(np.asarray(y, dtype=float) / self.c, 1.0 / self.s)

    @property
    def is_identity(self) -> bool:
        return self.s == 1.0 and self.c == 1.0

    def to_dict(self) -> dict:
        return {"s": self.s, "c": self.c}


SQRT = PhiFunction(0.5, 1.0)
IDENTITY = PhiFunction(1.0, 1.0)
