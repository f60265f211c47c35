import itertools

import pytest

from gfix.gspace import (
    AnalyticGSpace,
    FiniteGSpace,
    derived_metric,
    diameter,
    discrete,
    g_eval,
    make_example,
    three_point,
    two_point,
    validate_axioms,
)


def test_g_eval_examples():
    assert g_eval(discrete(3), "1", "1", "1") == 0
    tp = three_point()
    assert g_eval(tp, "0", "1", "1") == 1
    assert g_eval(tp, "0", "1", "2") == 2


def test_g_eval_permutations():
    tp = three_point()
    for triple in itertools.product(tp.points, repeat=3):
        values = {g_eval(tp, *p) for p in itertools.permutations(triple)}
        assert len(values) == 1


def test_unknown_point_is_lookup_error():
    with pytest.raises(KeyError):
        g_eval(two_point(), "0", "0", "7")
    with pytest.raises(KeyError):
        g_eval(make_example("interval_maxdiff"), 0.0, 0.5, 1.5)


def test_derived_metric():
    assert derived_metric(two_point(), "0", "1") == 3
    assert derived_metric(two_point(), "1", "1") == 0
    d = discrete(4)
    assert all(derived_metric(d, x, y) == 2 for x in d.points for y in d.points if x != y)


def test_diameter():
    single = FiniteGSpace(("a",), 1.0, {(0, 0, 0): 0.0})
    assert diameter(single) == 0
    assert diameter(two_point()) == 2
    assert diameter(three_point()) == 2


def test_named_examples_pass_axioms():
    assert validate_axioms(three_point(), 3).all_hold
    assert validate_axioms(two_point()).all_hold
    for n in (1, 2, 3, 5):
        assert validate_axioms(discrete(n)).all_hold


def test_g2_failure_witness():
    table = {(0, 0, 0): 0.0, (1, 1, 1): 0.0, (0, 0, 1): 0.0, (0, 1, 1): 2.0}
    report = validate_axioms(FiniteGSpace(("0", "1"), 1.0, table))
    assert not report["G2"].holds
    assert report["G2"].witness == ("0", "0", "1")


def test_g3_failure_on_edited_table():
    edited = three_point().with_table(**{"0,1,2": 0.5})
    report = validate_axioms(edited)
    assert not report["G3"].holds
    x, y, z = report["G3"].witness
    # the witness is the triple whose value undercuts some G(a, a, b)
    assert g_eval(edited, x, y, z) == 0.5
    assert g_eval(edited, "0", "0", "1") > g_eval(edited, "0", "1", "2")


def test_construction_rejects_bad_tables():
    with pytest.raises(ValueError):
        FiniteGSpace(("0", "1"), 1.0, {(0, 0, 0): 0.0, (1, 1, 1): 0.0, (0, 0, 1): 1.0})  # missing (0,1,1)
    with pytest.raises(ValueError):
        FiniteGSpace(("0", "1"), 0.5, two_point().table)
    with pytest.raises(ValueError):
        FiniteGSpace(("0", "0"), 1.0, two_point().table)
    with pytest.raises(ValueError):
        FiniteGSpace(("0", "1"), 1.0, {**two_point().table, (0, 1, 1): -1.0})


def test_cutoff_out_of_range():
    with pytest.raises(ValueError):
        validate_axioms(three_point(), 4)
    with pytest.raises(ValueError):
        validate_axioms(three_point(), 0)


def test_make_example():
    d2 = make_example("discrete(2)")
    assert d2.table[(0, 0, 1)] == 1 and d2.table[(0, 1, 1)] == 1
    tp = make_example("two_point")
    assert tp.table[(0, 0, 1)] == 1 and tp.table[(0, 1, 1)] == 2
    iv = make_example("interval_maxval")
    assert (iv.lo, iv.hi) == (0, 1)
    assert g_eval(iv, 0.2, 0.7, 0.4) == 0.7
    with pytest.raises(ValueError):
        make_example("four_point")


def test_interval_maxval_fails_g1_under_strict_validation():
    report = validate_axioms(make_example("interval_maxval"))
    assert report.sampled
    assert not report["G1"].holds


def test_interval_maxdiff_is_clean_on_its_sample():
    report = validate_axioms(AnalyticGSpace("interval-maxdiff", 0.0, 1.0, 9))
    assert report.all_hold and report.sampled
