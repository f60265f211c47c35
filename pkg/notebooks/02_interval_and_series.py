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

# # The unit interval with a sequence of coefficients
#
# `G(x, y, z) = max(x, y, z)` on [0, 1]. Infinite spaces are checked on a grid,
# so every verdict here is marked `sampled`.

# +
import numpy as np

from gfix import AffineMap, CoefficientSeq, PhiFunction, TheoremId, certify, make_example, picard
from gfix.analysis import check_phi_condition, check_sequential_condition
from gfix.bounds import bound_phi_an, bound_seq_an
from gfix.sequences import series_converges

iv = make_example("interval_maxval")
T = AffineMap(1 / 16)
a = CoefficientSeq.inv_sq_shifted()
F = PhiFunction(s=0.5)
print(iv.grid_n, [a.term(n) for n in range(1, 5)])
# -

# The series of coefficients converges and the first term is below 1/2.

print(series_converges(a))

# The inequality with `F = sqrt` holds on the grid for n up to 6.

v = check_phi_condition(iv, T, a, F, 6)
print(v.holds, v.sampled)

# With `F` the identity the check is the plain sequential one; the verdicts agree.

ident = PhiFunction(s=1.0)
print(check_phi_condition(iv, T, a, ident, 4).holds, check_sequential_condition(iv, T, a, 4).holds)

# ## Iterating
#
# Each step divides by 16, so eleven steps get below 1e-12.

trace = picard(iv, T, 1.0)
print(trace.iterations, trace.limit)
print(np.array(trace.steps))

# ## Bounds
#
# The bound with `F = sqrt` is pulled back into G units. With `s = 1` it reduces to the plain one.

for m in (1, 2, 4, 8):
    print(m, bound_phi_an(a, F, 1.0, 1, m), bound_seq_an(a, 1.0, 1, m), bound_phi_an(a, ident, 1.0, 1, m))

cert = certify(iv, T, TheoremId.PHI_AN, {"seq": a, "phi": F})
print(cert.valid, cert.sampled, [round(cert.bound(m), 6) for m in range(6)])
