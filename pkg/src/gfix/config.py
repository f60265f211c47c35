"""JSON descriptions of spaces, maps, coefficient families and theorem parameters."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .coefficients import CoefficientSeq, CoefficientTensor, PhiFunction
from .gspace import ANALYTIC_FAMILIES, AnalyticGSpace, FiniteGSpace, GSpace
from .maps import AffineMap, SelfMap, TabulatedMap


class ConfigError(ValueError):
    """A description file is malformed; the message names the file and field."""


def _field(obj: dict, key: str, where: str, kind=None):
    if not isinstance(obj, dict):
        raise ConfigError(f"{where}: expected an object")
    if key not in obj:
        raise ConfigError(f"{where}: missing field '{key}'")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ConfigError(f"{where}: field '{key}' has the wrong type")
    return value


def read_json(path: str | Path) -> tuple[Any, str]:
    """Parsed content and SHA-256 digest of the raw bytes."""
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return data, hashlib.sha256(raw).hexdigest()


# ---------------------------------------------------------------- spaces


def space_from_dict(d: dict, where: str = "space") -> GSpace:
    kind = _field(d, "kind", where, str)
    try:
        if kind == "finite":
            points = [str(p) for p in _field(d, "points", where, list)]
            K = float(d.get("K", 1.0))
            table = {}
            for row in _field(d, "triples", where, list):
                if not isinstance(row, list) or len(row) != 4:
                    raise ConfigError(f"{where}: field 'triples' rows are [i, j, k, value]")
                i, j, k = (int(t) for t in row[:3])
                if not i <= j <= k:
                    raise ConfigError(f"{where}: field 'triples' entry {row[:3]} is not canonical (i <= j <= k)")
                if (i, j, k) in table:
                    raise ConfigError(f"{where}: field 'triples' lists {row[:3]} twice")
                table[(i, j, k)] = float(row[3])
            return FiniteGSpace(tuple(points), K, table, name=str(d.get("name", "")))
        if kind == "analytic":
            family = _field(d, "family", where, str)
            if family not in ANALYTIC_FAMILIES:
                raise ConfigError(f"{where}: field 'family' must be one of {list(ANALYTIC_FAMILIES)}")
            return AnalyticGSpace(family, float(d.get("lo", 0.0)), float(d.get("hi", 1.0)),
                                  int(d.get("grid_n", 257)), float(d.get("K", 1.0)), str(d.get("name", "")))
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from None
    raise ConfigError(f"{where}: field 'kind' must be 'finite' or 'analytic'")


def space_to_dict(space: GSpace) -> dict:
    if isinstance(space, FiniteGSpace):
        return {
            "kind": "finite",
            "points": list(space.points),
            "K": space.K,
            "triples": [[*t, v] for t, v in sorted(space.table.items())],
        }
    return {"kind": "analytic", "family": space.family, "lo": space.lo, "hi": space.hi, "grid_n": space.grid_n}


# ---------------------------------------------------------------- maps


def map_from_dict(d: dict, space: GSpace | None = None, where: str = "map") -> SelfMap | list[SelfMap]:
    """One map, or a list for ``{"kind": "family", "maps": [...]}``."""
    kind = _field(d, "kind", where, str)
    label = str(d.get("label", ""))
    if kind == "family":
        maps = _field(d, "maps", where, list)
        if not maps:
            raise ConfigError(f"{where}: field 'maps' is empty")
        return [map_from_dict(m, space, f"{where}.maps[{n}]") for n, m in enumerate(maps)]
    if kind == "tabulated":
        values = _field(d, "values", where, list)
        T: SelfMap = TabulatedMap(tuple(int(v) for v in values), label)
    elif kind == "affine":
        T = AffineMap(float(_field(d, "alpha", where)), float(d.get("beta", 0.0)), label)
    elif kind == "constant" and space is not None:
        p = _field(d, "point", where)
        T = (TabulatedMap((space.index(str(p)),) * space.size, label) if isinstance(space, FiniteGSpace)
             else AffineMap(0.0, float(p), label))
    elif kind == "identity" and space is not None:
        T = TabulatedMap(tuple(range(space.size)), label) if isinstance(space, FiniteGSpace) else AffineMap(1.0)
    else:
        raise ConfigError(f"{where}: field 'kind' must be tabulated, affine, constant, identity or family")
    if space is not None:
        try:
            T.check(space)
        except (ValueError, TypeError, KeyError) as exc:
            raise ConfigError(f"{where}: {exc}") from None
    return T


def map_to_dict(T) -> dict:
    if isinstance(T, (list, tuple)):
        return {"kind": "family", "maps": [map_to_dict(m) for m in T]}
    if isinstance(T, TabulatedMap):
        return {"kind": "tabulated", "values": list(T.values)}
    return {"kind": "affine", "alpha": T.alpha, "beta": T.beta}


# ---------------------------------------------------------------- coefficients


def seq_from_dict(d: dict, where: str = "seq") -> CoefficientSeq:
    family = _field(d, "family", where, str)
    horizon = int(d.get("horizon", 64))
    try:
        if family == "inv-sq-shifted":
            return CoefficientSeq.inv_sq_shifted(float(d.get("c", 1.0)), horizon)
        if family == "geometric":
            return CoefficientSeq.geometric(float(_field(d, "q", where)), float(_field(d, "rho", where)), horizon)
        if family == "harmonic":
            return CoefficientSeq.harmonic(horizon)
        if family == "constant":
            return CoefficientSeq.constant(float(_field(d, "c", where)), horizon)
        if family == "tabulated":
            return CoefficientSeq.tabulated(float(v) for v in _field(d, "values", where, list))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from None
    raise ConfigError(f"{where}: unknown family '{family}'")


def tensor_from_dict(d: dict, where: str = "tensor") -> CoefficientTensor:
    family = _field(d, "family", where, str)
    try:
        if family == "constant":
            return CoefficientTensor.constant(float(_field(d, "value", where)))
        if family == "tabulated":
            return CoefficientTensor.tabulated([list(e) for e in _field(d, "entries", where, list)])
    except (ValueError, TypeError, IndexError) as exc:
        raise ConfigError(f"{where}: {exc}") from None
    raise ConfigError(f"{where}: unknown family '{family}'")


def phi_from_dict(d: dict, where: str = "phi") -> PhiFunction:
    try:
        return PhiFunction(float(d.get("s", 1.0)), float(d.get("c", 1.0)))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from None


_SCALARS = {"eps": float, "lam": float, "horizon": int, "max_iter": int, "r_horizon": int, "relaxed": bool}


def params_from_dict(d: dict, space: GSpace, where: str = "params") -> dict:
    """Theorem parameters: ``seq``, ``phi``, tensors ``delta/gamma/theta/lamda`` and scalars."""
    if not isinstance(d, dict):
        raise ConfigError(f"{where}: expected an object")
    out: dict = {}
    for key, value in d.items():
        at = f"{where}.{key}"
        if key == "seq":
            out[key] = seq_from_dict(value, at)
        elif key == "phi":
            out[key] = phi_from_dict(value, at)
        elif key in ("delta", "gamma", "theta", "lamda"):
            out[key] = tensor_from_dict(value, at)
        elif key == "x0":
            out[key] = parse_point(space, value, at)
        elif key in _SCALARS:
            try:
                out[key] = _SCALARS[key](value)
            except (ValueError, TypeError):
                raise ConfigError(f"{at}: not a valid {_SCALARS[key].__name__}") from None
        else:
            raise ConfigError(f"{where}: unknown field '{key}'")
    return out


def parse_point(space: GSpace, value, where: str = "x0"):
    try:
        if isinstance(space, FiniteGSpace):
            p = str(value)
            space.index(p)
            return p
        return space.from_point(float(value))
    except (KeyError, ValueError, TypeError):
        raise ConfigError(f"{where}: {value!r} is not a point of the space") from None
