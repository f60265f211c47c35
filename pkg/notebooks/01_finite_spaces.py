# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#   kernelspec:
#     display_name: Python 3
#     name: python3
# ---

# # Finite G-metric type spaces
#
# A finite space is a point list, a constant K and one value per unordered
# triple. Here we build the small examples, check the axioms, look at chains
# and then certify that a map has a unique fixed point.

# +
import numpy as np

from gfix import (
    TheoremId,
    certify,
    chainability_threshold,
    constant,
    discrete,
    g_eval,
    is_chainable,
    minimal_uniform_lambda,
    picard,
    three_point,
    three_point_map,
    two_point,
    validate_axioms,
)
from gfix.oracle import brute_fixed_points

np.set_printoptions(precision=4)
# -

# ## Axioms
#
# `validate_axioms` reports each axiom separately, with a witness when it fails.

tp = three_point()
report = validate_axioms(tp)
for name in ("G1", "G2", "G3", "G4", "G5", "G5'"):
    print(name, report[name].holds)

# Editing one entry breaks G3: `G(0,0,1) = 1` now exceeds `G(0,1,2)`.

bad = tp.with_table(**{"0,1,2": 0.5})
print(validate_axioms(bad)["G3"])

# ## Chains
#
# A link `u -> v` is allowed when `G(u, v, v) <= eps`. In the discrete space every
# link costs 1, so the threshold is exactly 1.

for n in (2, 3, 5):
    d = discrete(n)
    print(n, chainability_threshold(d), is_chainable(d, 0.5).chainable)

# ## Certifying the three-point map
#
# T sends 0 and 1 to 0 and 2 to 1. On balls of radius 4 it contracts by exactly 1/2.

T = three_point_map()
print("minimal lambda at eps=4:", minimal_uniform_lambda(tp, T, 4))
cert = certify(tp, T, TheoremId.ULC_CHAINABLE, {"eps": 4, "lam": 0.5})
print("valid:", cert.valid)
for h in cert.hypotheses:
    print(f"  {h.status:9s} {h.name}")

# The certificate carries an a-priori bound on `G(x_m, x*, x*)`. Compare it with the orbit of every start point.

x_star = next(iter(brute_fixed_points(tp, T).fixed_points))
for x0 in tp.points:
    trace = picard(tp, T, x0, certificate=cert)
    actual = [g_eval(tp, x, x_star, x_star) for x in trace.points]
    print(x0, trace.points, actual, [round(b, 3) for b in trace.bounds])

# ## The two-point space
#
# The constant map is the easy case: the minimal lambda is 0.

two = two_point()
Z = constant(two, "0")
print(minimal_uniform_lambda(two, Z, 4), certify(two, Z, TheoremId.ULC_CHAINABLE, {"eps": 4, "lam": 0.5}).valid)
print(picard(two, Z, "1").points)
