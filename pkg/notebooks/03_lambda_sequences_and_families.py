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

# # Lambda-sequences and common fixed points

# +
import numpy as np

from gfix import CoefficientSeq, CoefficientTensor, TheoremId, certify, constant, three_point, three_point_map, two_point
from gfix.oracle import brute_common_fixed_points
from gfix.sequences import common_coefficient_check, lambda_sequence_check, power_ratio
from gfix.solver import common_fixed_point
# -

# A sequence `r` is a lambda-sequence when its running link sums stay under
# `lambda * L` from some onset on. For `r_i = 2^-i` this holds from the start at 1/2.

cert = lambda_sequence_check(CoefficientSeq.geometric(1.0, 0.5))
print(cert.lam, cert.n_lambda, cert.replay())

# The harmonic sequence needs a later onset; fixing lambda gives the onset directly.

print(lambda_sequence_check(CoefficientSeq.harmonic()))
print(lambda_sequence_check(CoefficientSeq.harmonic(), lam=0.5).n_lambda)

# A constant sequence of ones never qualifies.

print(lambda_sequence_check(CoefficientSeq.constant(1.0)))

# ## Ratios from coefficient tensors
#
# With `Delta(i, j, k) = a_min(i,j,k)` and the merged form at `s = 1/2`, the ratios come out as `2^-i`.

a = CoefficientSeq.tabulated([(1 / (2**0.5 * (1 + 2**n))) ** 2 for n in range(1, 40)])
delta = CoefficientTensor.function(lambda i, j, k: a.term(min(i, j, k)))
print(np.round(power_ratio(delta, None, 0.5, 8, merged=True), 6))

# ## A family of maps
#
# Constant-0 and the three-point map share the fixed point 0.

tp = three_point()
maps = [constant(tp, "0"), three_point_map()]
res = common_fixed_point(tp, maps, "2")
print(res.point, res.trace.points, brute_common_fixed_points(tp, maps))

# The coefficients themselves are admissible: 0.1 + 3(0.05) + 4(0.05) = 0.45 < 1/2.

d, t = CoefficientTensor.constant(0.1), CoefficientTensor.constant(0.05)
params = {"delta": d, "theta": t, "lamda": t}
print(common_coefficient_check(d, t, t, 6))

# But this family is too far from a contraction. The certificate says where it breaks.

cert = certify(tp, maps, TheoremId.COMMON, params)
print(cert.valid, [(h.name, h.witness) for h in cert.failed])

# Two copies of the constant map on the two-point space do satisfy every hypothesis.

two = two_point()
Z = constant(two, "0")
cert = certify(two, [Z, Z], TheoremId.COMMON, {**params, "x0": "1"})
print(cert.valid, [round(cert.bound(m), 4) for m in range(5)])
