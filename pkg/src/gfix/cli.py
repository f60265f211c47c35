"""``gfix`` command line: validate | chains | analyze | certify | solve | oracle.

Every run prints one JSON report (sorted keys, no timestamp) so identical
inputs give byte-identical output. Exit codes: 0 success, 1 input error,
2 hypotheses or axioms failed, 3 iteration did not converge.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    check_local_contractive,
    check_phi_condition,
    check_sequential_condition,
    iterated_lipschitz,
    lipschitz_constant,
    lipschitz_witness,
    minimal_uniform_lambda,
)
from .chains import chainability_threshold, is_chainable
from .config import ConfigError, map_from_dict, params_from_dict, parse_point, read_json, space_from_dict
from .gspace import FiniteGSpace, _jsonable, validate_axioms
from .oracle import brute_common_fixed_points, brute_fixed_points
from .solver import TheoremId, certify, common_fixed_point, picard

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_DIVERGED = 0, 1, 2, 3


class _Inputs:
    def __init__(self, args):
        self.digests: dict = {}
        if not args.space:
            raise ConfigError("--space: required")
        data, self.digests["space"] = read_json(args.space)
        self.space = space_from_dict(data, f"{args.space}")
        self.map = None
        if getattr(args, "map", None):
            data, self.digests["map"] = read_json(args.map)
            self.map = map_from_dict(data, self.space, f"{args.map}")
        self.params = {}
        if getattr(args, "params", None):
            data, self.digests["params"] = read_json(args.params)
            self.params = params_from_dict(data, self.space, f"{args.params}")

    def need_map(self, single: bool = False):
        if self.map is None:
            raise ConfigError("--map: required for this command")
        if single and isinstance(self.map, list):
            raise ConfigError("--map: expected a single map, got a family")
        return self.map


def _x0(args, inputs):
    if args.x0 is not None:
        return parse_point(inputs.space, args.x0, "--x0")
    if "x0" in inputs.params:
        return inputs.params["x0"]
    return inputs.space.points[0] if isinstance(inputs.space, FiniteGSpace) else inputs.space.hi


# ---------------------------------------------------------------- commands


def cmd_validate(args, inputs):
    report = validate_axioms(inputs.space, args.cutoff)
    return report.to_dict(), EXIT_OK if report.all_hold else EXIT_HYPOTHESIS


def cmd_chains(args, inputs):
    space = inputs.space
    if not isinstance(space, FiniteGSpace):
        raise ConfigError("--space: chains need a finite space")
    threshold = chainability_threshold(space) if space.size >= 2 else 0.0
    eps = threshold if args.eps is None else args.eps
    verdict = is_chainable(space, eps)
    out = verdict.to_dict()
    out["threshold"] = threshold
    return out, EXIT_OK if verdict.chainable else EXIT_HYPOTHESIS


def cmd_analyze(args, inputs):
    space, T = inputs.space, inputs.need_map(single=True)
    out = {
        "lipschitz": lipschitz_constant(space, T),
        "lipschitz_witness": lipschitz_witness(space, T),
        "iterated_lipschitz": iterated_lipschitz(space, T, args.horizon or 8),
        "sampled": space.sampled,
    }
    eps = args.eps if args.eps is not None else inputs.params.get("eps")
    if eps is not None:
        out["minimal_uniform_lambda"] = minimal_uniform_lambda(space, T, eps)
        lam = args.lam if args.lam is not None else inputs.params.get("lam")
        if lam is not None:
            out["local_contractive"] = check_local_contractive(space, T, eps, lam).to_dict()
    seq = inputs.params.get("seq")
    if seq is not None:
        N = args.horizon or inputs.params.get("horizon") or 6
        out["sequential_condition"] = check_sequential_condition(space, T, seq, N).to_dict()
        if "phi" in inputs.params:
            out["phi_condition"] = check_phi_condition(space, T, seq, inputs.params["phi"], N).to_dict()
    return out, EXIT_OK


def cmd_certify(args, inputs):
    if not args.theorem:
        raise ConfigError("--theorem: required")
    try:
        theorem = TheoremId(args.theorem)
    except ValueError:
        raise ConfigError(f"--theorem: unknown id '{args.theorem}'") from None
    params = dict(inputs.params)
    for key, value in (("eps", args.eps), ("lam", args.lam), ("horizon", args.horizon), ("max_iter", args.max_iter)):
        if value is not None:
            params[key] = value
    if args.x0 is not None:
        params["x0"] = _x0(args, inputs)
    try:
        cert = certify(inputs.space, inputs.need_map(), theorem, params)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"certify: {exc}") from None
    return cert.to_dict(), EXIT_OK if cert.valid else EXIT_HYPOTHESIS


def cmd_solve(args, inputs):
    T = inputs.need_map()
    x0 = _x0(args, inputs)
    max_iter = args.max_iter or 1000
    if isinstance(T, list):
        res = common_fixed_point(inputs.space, T, x0, args.tol, max_iter)
        return res.to_dict(), EXIT_OK if res.trace.converged else EXIT_DIVERGED
    trace = picard(inputs.space, T, x0, args.tol, max_iter)
    return trace.to_dict(), EXIT_OK if trace.converged else EXIT_DIVERGED


def cmd_oracle(args, inputs):
    T = inputs.need_map()
    if not isinstance(inputs.space, FiniteGSpace):
        raise ConfigError("--space: the oracle needs a finite space")
    if isinstance(T, list):
        res = brute_common_fixed_points(inputs.space, T, args.horizon)
    else:
        res = brute_fixed_points(inputs.space, T)
    return res.to_dict(), EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "chains": cmd_chains,
    "analyze": cmd_analyze,
    "certify": cmd_certify,
    "solve": cmd_solve,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="space description (JSON)")
    common.add_argument("--map", help="map or map family (JSON)")
    common.add_argument("--params", help="theorem parameters (JSON)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--tol", type=float, default=1e-12)
    common.add_argument("--max-iter", type=int, dest="max_iter")
    common.add_argument("--horizon", type=int)
    parser = argparse.ArgumentParser(prog="gfix", description="Fixed-point certificates on G-metric type spaces.")
    parser.add_argument("--version", action="version", version=f"gfix {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "validate":
            p.add_argument("--cutoff", type=int, help="G5 chain cutoff (default |X| - 1)")
        if name in ("chains", "analyze", "certify"):
            p.add_argument("--eps", type=float)
        if name in ("analyze", "certify"):
            p.add_argument("--lambda", type=float, dest="lam")
        if name == "certify":
            p.add_argument("--theorem", choices=[t.value for t in TheoremId])
        if name in ("certify", "solve"):
            p.add_argument("--x0")
    return parser


def render(command: str, inputs: _Inputs, result: dict) -> str:
    report = {
        "tool": "gfix",
        "version": __version__,
        "command": command,
        "inputs": {k: {"sha256": v} for k, v in sorted(inputs.digests.items())},
        "result": _jsonable(result),
    }
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.tol is not None and not args.tol > 0:
            raise ConfigError("--tol: must be positive")
        if args.max_iter is not None and args.max_iter < 1:
            raise ConfigError("--max-iter: must be at least 1")
        inputs = _Inputs(args)
        result, code = COMMANDS[args.command](args, inputs)
    except ConfigError as exc:
        print(f"gfix: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(args.command, inputs, result)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
