import json
import math

import pytest

from gfix.coefficients import SQRT, CoefficientSeq, CoefficientTensor
from gfix.gspace import FiniteGSpace, derived_metric, make_example, three_point, two_point
from gfix.maps import AffineMap, apply_map, constant, identity, three_point_map
from gfix.solver import TheoremId, certify, common_fixed_point, picard

INV_SQ = CoefficientSeq.inv_sq_shifted()


def test_picard_finite_examples():
    two = two_point()
    t = picard(two, constant(two, "0"), "1")
    assert t.limit == "0" and t.converged and t.iterations == 1
    t = picard(three_point(), three_point_map(), "2")
    assert t.points == ("2", "1", "0") and t.converged


def test_picard_interval():
    iv = make_example("interval_maxdiff")
    t = picard(iv, AffineMap(1 / 16), 1.0)
    assert t.converged and t.iterations == 11
    assert abs(t.limit) <= 1e-12


def test_picard_max_iter_cutoff():
    iv = make_example("interval_maxdiff")
    t = picard(iv, AffineMap(1 / 16), 1.0, max_iter=1)
    assert not t.converged and t.iterations == 1


def test_picard_trace_consistency():
    tp, T = three_point(), three_point_map()
    t = picard(tp, T, "2")
    assert len(t.steps) == len(t.points)
    for x, s in zip(t.points, t.steps):
        assert s == derived_metric(tp, x, apply_map(tp, T, x))


def test_picard_rejects_bad_input():
    with pytest.raises(ValueError):
        picard(two_point(), identity(two_point()), "0", tol=0)
    with pytest.raises(KeyError):
        picard(two_point(), identity(two_point()), "9")


def test_common_fixed_point_examples():
    two = two_point()
    z = constant(two, "0")
    r = common_fixed_point(two, [z, z], "1")
    assert r.point == "0" and r.verified
    single = FiniteGSpace(("s",), 1.0, {(0, 0, 0): 0.0})
    r = common_fixed_point(single, [identity(single)], "s")
    assert r.point == "s" and r.trace.iterations == 0
    tp = three_point()
    r = common_fixed_point(tp, [constant(tp, "0"), three_point_map()], "2")
    assert r.point == "0" and r.verified


def test_common_fixed_point_without_common_point():
    tp = three_point()
    r = common_fixed_point(tp, [constant(tp, "1"), constant(tp, "2")], "0", max_iter=20)
    assert r.point is None and not r.verified


def test_certify_ulc_examples():
    for sp, T in ((two_point(), constant(two_point(), "0")), (three_point(), three_point_map())):
        c = certify(sp, T, TheoremId.ULC_CHAINABLE, {"eps": 4, "lam": 0.5})
        assert c.valid and not c.sampled
        b = [c.bound(m) for m in range(21)]
        assert all(x >= y for x, y in zip(b, b[1:]))


def test_certify_ulc_rejects_large_lambda():
    tp = three_point()
    c = certify(tp, identity(tp), TheoremId.ULC_CHAINABLE, {"eps": 4, "lam": 0.5})
    assert not c.valid and c.failed
    assert c.bound(3) == math.inf


def test_certify_seq_identity_fails_with_witness():
    two = two_point()
    c = certify(two, identity(two), TheoremId.SEQ_AN, {"seq": INV_SQ})
    assert not c.valid
    w = next(h for h in c.failed if h.witness is not None).witness
    assert w["n"] == 1


def test_certify_phi_interval():
    iv = make_example("interval_maxval")
    c = certify(iv, AffineMap(1 / 16), TheoremId.PHI_AN, {"seq": INV_SQ, "phi": SQRT})
    assert c.valid and c.sampled
    assert all(c.bound(m) >= c.bound(m + 1) for m in range(20))


def test_certify_lip_three_point():
    c = certify(three_point(), three_point_map(), TheoremId.LIP_SERIES)
    assert c.valid
    assert c.bound(5) >= 0


def test_certify_missing_params():
    two = two_point()
    with pytest.raises(ValueError):
        certify(two, constant(two, "0"), TheoremId.ULC_CHAINABLE, {"eps": 4})
    with pytest.raises(ValueError):
        certify(two, constant(two, "0"), TheoremId.PHI_AN, {"seq": INV_SQ})
    with pytest.raises(ValueError):
        certify(two, constant(two, "0"), "NOT_A_THEOREM")


def test_certify_common_family():
    two = two_point()
    z = constant(two, "0")
    params = {"delta": CoefficientTensor.constant(0.1), "theta": CoefficientTensor.constant(0.05),
              "lamda": CoefficientTensor.constant(0.05)}
    c = certify(two, [z, z], TheoremId.COMMON, params)
    assert c.valid
    c = certify(two, [z, identity(two)], TheoremId.COMMON, params)
    assert not c.valid


def test_certificate_serialises():
    c = certify(three_point(), three_point_map(), TheoremId.ULC_CHAINABLE, {"eps": 4, "lam": 0.5})
    d = c.to_dict()
    assert len(d["bound"]) == 21
    json.dumps(d, allow_nan=False)


def test_picard_with_certificate_bounds():
    tp, T = three_point(), three_point_map()
    c = certify(tp, T, TheoremId.ULC_CHAINABLE, {"eps": 4, "lam": 0.5})
    t = picard(tp, T, "2", certificate=c)
    assert len(t.bounds) == len(t.points)
    for x, b in zip(t.points, t.bounds):
        assert tp.g(x, t.limit, t.limit) <= b
