import pytest

from gfix.bounds import bound_lambda_seq, bound_phi_an, bound_seq_an, bound_ulc
from gfix.coefficients import SQRT, CoefficientSeq, PhiFunction

INV_SQ = CoefficientSeq.inv_sq_shifted()


def test_bound_seq_an():
    assert bound_seq_an(INV_SQ, 0.0, 3, 5) == 0
    assert bound_seq_an(INV_SQ, 1.0, 1, 1) == pytest.approx(1 / 7, abs=1e-15)
    values = [bound_seq_an(INV_SQ, 1.0, 2, m) for m in range(1, 30)]
    assert values == sorted(values)
    full = sum((1 / (1 + 2.0**i)) ** 2 for i in range(2, 200)) * 9 / 7
    assert values[-1] <= full
    with pytest.raises(ValueError):
        bound_seq_an(CoefficientSeq.constant(0.5), 1.0, 1, 1)


def test_bound_phi_an():
    assert bound_phi_an(INV_SQ, SQRT, 0.0, 1, 4) == 0
    q = (2 / 9) ** 0.5
    assert bound_phi_an(INV_SQ, SQRT, 1.0, 1, 1) == pytest.approx((1 / 3) * (1 + q / (1 - q)), abs=1e-15)
    ident = PhiFunction(1.0, 1.0)
    assert bound_phi_an(INV_SQ, ident, 2.5, 3, 7) == pytest.approx(bound_seq_an(INV_SQ, 2.5, 3, 7), abs=1e-12)
    with pytest.raises(ValueError):
        bound_phi_an(CoefficientSeq.constant(0.5), SQRT, 1.0, 1, 1)


def test_bound_ulc():
    assert bound_ulc(0.5, 1.0, 1, 4.0, 3) == 0.5
    seq = [bound_ulc(0.5, 1.3, 2, 4.0, m) for m in range(40)]
    assert all(a > b for a, b in zip(seq, seq[1:])) and seq[-1] < 1e-10
    assert bound_ulc(0.0, 1.0, 3, 4.0, 1) == 0
    with pytest.raises(ValueError):
        bound_ulc(1.0, 1.0, 1, 4.0, 1)


def test_bound_lambda_seq():
    assert bound_lambda_seq(0.5, 4, 1.0, 0.5, 0.0) == 0
    assert bound_lambda_seq(0.5, 4, 1.0, 0.5, 1.0) == 1 / 8
    assert bound_lambda_seq(0.5, 5, 1.0, 0.5, 1.0) == bound_lambda_seq(0.5, 4, 1.0, 0.5, 1.0) / 2
    for lam in (0.0, 1.0):
        with pytest.raises(ValueError):
            bound_lambda_seq(lam, 1, 1.0, 1.0, 1.0)
