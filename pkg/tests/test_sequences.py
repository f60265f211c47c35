import numpy as np
import pytest

from gfix.coefficients import CoefficientSeq, CoefficientTensor, tail_power_sum
from gfix.sequences import (
    CONVERGENT,
    DIVERGENT,
    UNDECIDED,
    LambdaCertificate,
    LambdaRejection,
    common_coefficient_check,
    lambda_sequence_check,
    power_ratio,
    product_series_check,
    series_converges,
    terms_vanish,
)


def test_series_examples():
    assert series_converges(CoefficientSeq.inv_sq_shifted()).status == CONVERGENT
    assert series_converges(CoefficientSeq.harmonic()).status == DIVERGENT
    v = series_converges(CoefficientSeq.tabulated([0.5**i for i in range(1, 17)]))
    assert v.status == CONVERGENT and v.ratio == 0.5


def test_series_other_outcomes():
    assert series_converges(CoefficientSeq.geometric(1.0, 1.0)).status == DIVERGENT
    assert series_converges(CoefficientSeq.constant(0.1)).status == DIVERGENT
    wobbly = [1.0, 0.5] * 8
    assert series_converges(CoefficientSeq.tabulated(wobbly)).status == UNDECIDED
    with pytest.raises(ValueError):
        series_converges(CoefficientSeq.tabulated([1.0] * 7 + [0.0]))
    with pytest.raises(ValueError):
        series_converges(CoefficientSeq.tabulated([0.5] * 4))


def test_terms_vanish():
    assert terms_vanish(CoefficientSeq.harmonic()).convergent
    assert not terms_vanish(CoefficientSeq.constant(0.2)).convergent


def test_lambda_sequence_examples():
    cert = lambda_sequence_check(CoefficientSeq.geometric(1.0, 0.5))
    assert isinstance(cert, LambdaCertificate)
    assert (cert.lam, cert.n_lambda) == (0.5, 1)
    assert cert.replay()
    rej = lambda_sequence_check(CoefficientSeq.constant(1.0))
    assert isinstance(rej, LambdaRejection)
    # every link term is 1, so no onset up to half the horizon admits a grid lambda
    assert rej.witness_L == rej.horizon // 2
    at_half = lambda_sequence_check(CoefficientSeq.harmonic(), lam=0.5)
    assert isinstance(at_half, LambdaCertificate) and at_half.lam == 0.5 and at_half.n_lambda > 1
    assert at_half.replay()


def test_lambda_sequence_errors():
    with pytest.raises(ValueError):
        lambda_sequence_check([])
    with pytest.raises(ValueError):
        lambda_sequence_check([0.1, 0.1])
    with pytest.raises(ValueError):
        lambda_sequence_check([0.5] * 8, lam=1.5)


def test_lambda_sequence_monotonicity_is_reported_not_required():
    r = [0.1, 0.2] * 16
    cert = lambda_sequence_check(r)
    assert isinstance(cert, LambdaCertificate) and not cert.non_increasing


def test_product_series_examples():
    assert product_series_check(CoefficientSeq.constant(0.5, 16)).series.status == CONVERGENT
    geo = product_series_check(CoefficientSeq.geometric(1.0, 0.5, 16))
    assert geo.series.status == CONVERGENT
    n = np.arange(1, 17)
    assert np.allclose(geo.products, 2.0 ** (-n * (n + 1) / 2), rtol=1e-12)
    assert product_series_check(CoefficientSeq.constant(1.0, 16)).series.status == DIVERGENT


def test_common_coefficient_examples():
    zero = CoefficientTensor.constant(0.0)
    v = common_coefficient_check(zero, zero, zero, 6)
    assert v.holds and all(r == 0 for r in v.r)
    v = common_coefficient_check(CoefficientTensor.constant(0.1), CoefficientTensor.constant(0.05),
                                 CoefficientTensor.constant(0.05), 6)
    assert v.holds and v.max_combination == pytest.approx(0.45)
    assert v.r[0] == pytest.approx(0.35 / 0.9)
    assert v.lambda_result.lam == 0.4
    v = common_coefficient_check(CoefficientTensor.constant(0.2), CoefficientTensor.constant(0.1),
                                 CoefficientTensor.constant(0.1), 6)
    assert not v.holds and v.witness == (1, 1, 1)


def test_common_coefficient_bad_denominator():
    big = CoefficientTensor.constant(0.6)
    with pytest.raises(ValueError):
        common_coefficient_check(CoefficientTensor.constant(0.0), big, big, 4)


def test_min_index_tensor_gives_halving_ratios():
    a = CoefficientSeq.tabulated([(1 / (2**0.5 * (1 + 2**n))) ** 2 for n in range(1, 40)])
    delta = CoefficientTensor.function(lambda i, j, k: a.term(min(i, j, k)))
    r = power_ratio(delta, None, 0.5, 20, merged=True)
    assert np.allclose(r, 0.5 ** np.arange(1, 21), rtol=1e-9)


def test_tail_power_sum():
    geo = CoefficientSeq.geometric(1.0, 0.5)
    assert tail_power_sum(geo, 3) == pytest.approx(0.25)
    inv = CoefficientSeq.inv_sq_shifted()
    exact = sum((1 / (1 + 2.0**i)) ** 2 for i in range(2, 200))
    assert tail_power_sum(inv, 2) == pytest.approx(exact, rel=1e-14)
    assert tail_power_sum(CoefficientSeq.harmonic(), 1) == float("inf")
