import itertools

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from corpus import random_map, random_space
from gfix.analysis import (
    check_local_contractive,
    check_phi_condition,
    check_sequential_condition,
    iterated_lipschitz,
    lipschitz_constant,
    minimal_uniform_lambda,
)
from gfix.bounds import bound_phi_an, bound_seq_an
from gfix.chains import chainability_threshold, is_chainable
from gfix.coefficients import CoefficientSeq, PhiFunction
from gfix.gspace import FiniteGSpace, derived_metric, diameter, g_eval, validate_axioms
from gfix.maps import TabulatedMap
from gfix.oracle import brute_fixed_points, verify_cauchy
from gfix.sequences import LambdaCertificate, lambda_sequence_check
from gfix.solver import TheoremId, certify, picard

SETTINGS = settings(max_examples=40, deadline=None)
IDENT = PhiFunction(1.0, 1.0)


@st.composite
def spaces(draw, min_size=1, max_size=6):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_size, max_size))
    rng = np.random.default_rng(seed)
    return random_space(rng, n), rng


@st.composite
def space_and_map(draw, min_size=1):
    sp, rng = draw(spaces(min_size=min_size))
    return sp, random_map(rng, sp.size)


@SETTINGS
@given(spaces())
def test_random_spaces_are_valid(data):
    assert validate_axioms(data[0]).all_hold


@SETTINGS
@given(spaces())
def test_g_is_permutation_invariant(data):
    sp = data[0]
    for t in itertools.product(sp.points, repeat=3):
        assert len({g_eval(sp, *p) for p in itertools.permutations(t)}) == 1


@SETTINGS
@given(spaces())
def test_derived_metric_is_symmetric_and_separating(data):
    sp = data[0]
    for x, y in itertools.product(sp.points, repeat=2):
        d = derived_metric(sp, x, y)
        assert d == derived_metric(sp, y, x)
        assert (d == 0) == (x == y)


@SETTINGS
@given(spaces(min_size=3), st.floats(0.05, 3.0))
def test_two_term_polygon_matches_cutoff_one(data, scale):
    sp = data[0]
    # perturb one distinct triple so both outcomes occur
    key = (0, 1, 2)
    edited = FiniteGSpace(sp.points, sp.K, {**sp.table, key: sp.table[key] * scale})
    r1 = validate_axioms(edited, 1)
    assert r1["G5'"].holds == r1["G5"].holds


@SETTINGS
@given(spaces(min_size=2))
def test_threshold_is_minimal_and_below_diameter(data):
    sp = data[0]
    t = chainability_threshold(sp)
    v = is_chainable(sp, t)
    assert v.chainable
    assert not is_chainable(sp, t * (1 - 1e-9)).chainable
    assert t <= diameter(sp)
    assert 1 <= v.max_degree <= sp.size - 1
    for (a, b), chain in v.witness_chains.items():
        assert chain.nodes[0] == a and chain.nodes[-1] == b
        for u, w in zip(chain.nodes, chain.nodes[1:]):
            assert g_eval(sp, u, w, w) <= t


@SETTINGS
@given(space_and_map())
def test_lipschitz_is_submultiplicative(data):
    sp, T = data
    ell = iterated_lipschitz(sp, T, 3)
    assert ell[0] == lipschitz_constant(sp, T)
    assert ell[1] <= ell[0] ** 2 * (1 + 1e-12) + 1e-12
    assert ell[2] <= ell[0] * ell[1] * (1 + 1e-12) + 1e-12


@SETTINGS
@given(space_and_map(min_size=2), st.floats(0.5, 6.0))
def test_minimal_uniform_lambda_is_tight(data, eps):
    sp, T = data
    lam = minimal_uniform_lambda(sp, T, eps)
    assume(lam is not None and lam + 1e-6 < 1)
    assert check_local_contractive(sp, T, eps, lam + 1e-6).holds
    if lam > 1e-6:
        assert not check_local_contractive(sp, T, eps, lam - 1e-6).holds


def _replay(r, lam, n):
    H = len(r)
    for L in range(n + 1, H + 1):
        if sum(max(r[i], r[i + 1]) for i in range(L - 1)) > lam * L + 1e-12:
            return False
    for k in range(max(n, 1), H + 1):
        if sum(r[:k]) / k > lam + 1e-12:
            return False
    return True


@SETTINGS
@given(st.lists(st.floats(0, 1.5), min_size=8, max_size=40))
def test_lambda_certificate_replays(r):
    res = lambda_sequence_check(r)
    if isinstance(res, LambdaCertificate):
        assert res.replay() and _replay(list(res.values), res.lam, res.n_lambda)
        # no earlier onset works at any grid lambda
        for n in range(1, res.n_lambda):
            assert not any(_replay(r, k / 20, n) for k in range(1, 20))
    else:
        n_max = len(r) // 2
        assert not any(_replay(r, k / 20, n) for n in range(1, n_max + 1) for k in range(1, 20))


@SETTINGS
@given(space_and_map(), st.floats(0.05, 0.45), st.floats(0.2, 0.8))
def test_phi_identity_reduces_to_sequential(data, q, rho):
    sp, T = data
    seq = CoefficientSeq.geometric(q, rho)
    a = check_phi_condition(sp, T, seq, IDENT, 4)
    b = check_sequential_condition(sp, T, seq, 4)
    assert a.holds == b.holds and a.witness == b.witness


@SETTINGS
@given(st.floats(0.0, 10.0), st.integers(1, 8), st.integers(0, 30))
def test_phi_bound_reduces(G0, n, m):
    seq = CoefficientSeq.inv_sq_shifted()
    assert abs(bound_phi_an(seq, IDENT, G0, n, m) - bound_seq_an(seq, G0, n, m)) <= 1e-12


@SETTINGS
@given(space_and_map(), st.lists(st.floats(1e-6, 10.0), min_size=2, max_size=6))
def test_cauchy_index_is_monotone(data, grid):
    sp, T = data
    trace = picard(sp, T, sp.points[0], max_iter=3 * sp.size + 3)
    grid = sorted(grid, reverse=True)
    Ns = [v.N for v in verify_cauchy(sp, trace, grid)]
    for a, b in zip(Ns, Ns[1:]):
        if a is not None and b is not None:
            assert a <= b
        if a is None:
            assert b is None


@SETTINGS
@given(spaces(min_size=2), st.data())
def test_maps_with_two_fixed_points_never_certify(sp_rng, data):
    sp, rng = sp_rng
    n = sp.size
    values = [int(v) for v in rng.integers(0, n, n)]
    values[0], values[1] = 0, 1
    T = TabulatedMap(tuple(values))
    assert len(brute_fixed_points(sp, T).fixed_points) >= 2
    seq = CoefficientSeq.geometric(data.draw(st.floats(0.05, 0.45)), 0.5)
    for th, params in (
        (TheoremId.LIP_SERIES, {}),
        (TheoremId.LIP_BOUNDED_ORBIT, {}),
        (TheoremId.SEQ_AN, {"seq": seq}),
        (TheoremId.PHI_AN, {"seq": seq, "phi": PhiFunction(s=0.5)}),
        (TheoremId.ULC_CHAINABLE, {"eps": 2 * chainability_threshold(sp), "lam": 0.5}),
    ):
        assert not certify(sp, T, th, params).valid
