import math

import numpy as np
import pytest

import oracles
from unitary_bounds import (
    Exhaustive,
    PairContext,
    Sampled,
    TripleContext,
    amplitude_vector,
    bound_I1_prime,
    bound_M_max,
    bound_S,
    get_scenario,
    perm_bound_I1_prime,
    perm_bound_M,
    perm_bound_S,
)
from unitary_bounds.errors import SearchCapError
from unitary_bounds.search import maximize


def amps(scenario_id, theta):
    sc = get_scenario(scenario_id)
    s = sc.state_at(theta)
    return [amplitude_vector(u, s) for u in sc.operators]


def test_i1_prime_example1_exhaustive():
    x, y = amps("ex1", np.pi / 4)
    res = perm_bound_I1_prime(PairContext(x, y))
    assert res.evaluations == 36
    assert res.baseline == pytest.approx(0.515625, abs=1e-15)
    assert res.value >= 0.515625
    # frozen from the brute-force enumerator: the relabelling that makes x2 == x3
    assert res.value == pytest.approx(0.5625, abs=1e-12)
    assert res.permutations == ((1, 0, 2), (0, 1, 2))


def test_symmetric_context_is_invariant():
    ctx = PairContext([0.3] * 4, [0.3] * 4)
    res = perm_bound_I1_prime(ctx)
    assert res.value == res.baseline
    assert res.permutations == ((0, 1, 2, 3), (0, 1, 2, 3))


def test_s10_is_permutation_invariant(rng):
    ctx = PairContext(rng.random(4), rng.random(4))
    vals = []
    maximize(lambda p: vals.append(bound_S(ctx.permuted(*p), 1, 0)) or 0.0, 4, 2, Exhaustive())
    assert max(vals) - min(vals) <= 1e-15
    assert perm_bound_S(ctx, 1, 0).value == pytest.approx(ctx.product(), abs=1e-15)


def test_s21_example3():
    x, y = amps("ex3:3", 1.0)
    res = perm_bound_S(PairContext(x, y), 2, 1)
    want, perms = oracles.brute_force_max(lambda a, b: oracles.S_pq(a, b, 2, 1), [list(x), list(y)])
    assert res.value == pytest.approx(want, abs=1e-12)
    assert res.value == pytest.approx(0.5133259392469398, abs=1e-12)
    assert res.value >= bound_S(PairContext(x, y), 2, 1)


def test_m_example4():
    x, y, z = amps("ex4", 1.0)
    ctx = TripleContext(x, y, z)
    res = perm_bound_M(ctx, 1, 2, 1)
    assert res.evaluations == 216
    assert res.value >= bound_M_max(ctx, 1, 2, 1)
    assert res.value == pytest.approx(0.12638900916740917, abs=1e-12)
    assert res.permutations == ((0, 2, 1), (2, 0, 1), (2, 0, 1))
    assert res.axis == "z"
    again = perm_bound_M(ctx, 1, 2, 1)
    assert again == res


def test_cap():
    ctx = PairContext(np.full(7, 0.1), np.full(7, 0.2))
    with pytest.raises(SearchCapError, match="sampled"):
        perm_bound_I1_prime(ctx)
    res = perm_bound_I1_prime(ctx, Sampled(50, seed=3))
    assert res.value >= res.baseline


def test_sampled_is_deterministic_and_contains_identity(rng):
    ctx = PairContext(rng.random(8), rng.random(8))
    a = perm_bound_I1_prime(ctx, Sampled(200, seed=11))
    b = perm_bound_I1_prime(ctx, Sampled(200, seed=11))
    assert a == b
    assert a.value >= bound_I1_prime(ctx)
    assert a.value <= ctx.product() + 1e-12


def test_sampled_reaches_exhaustive_on_small_case(rng):
    ctx = PairContext(rng.random(4), rng.random(4))
    ex = perm_bound_I1_prime(ctx)
    sm = perm_bound_I1_prime(ctx, Sampled(2000, seed=0))
    assert sm.value == pytest.approx(ex.value, abs=1e-15)


def test_zero_samples_hill_climbs_from_identity():
    ctx = PairContext([0.5, 0.1, 0.4], [0.6, 0.3, 0.2])
    res = perm_bound_I1_prime(ctx, Sampled(0, seed=0))
    assert res.value >= res.baseline


def test_literal_convention_can_exceed_product():
    # at px = id, py = (1, 0, 2): the untouched sums give x1^2 y1^2 + x3^2 y1^2 = 2
    # and the swapped term adds 2 y1^2 x1 x3 = 2, twice the product
    ctx = PairContext([1.0, 0.0, 1.0], [1.0, 0.0, 0.0])
    lit = perm_bound_I1_prime(ctx, convention="literal")
    con = perm_bound_I1_prime(ctx)
    assert con.value <= ctx.product() + 1e-12
    assert lit.value == 4.0
    assert lit.permutations == ((0, 1, 2), (1, 0, 2))
    assert ctx.product() == 2.0


def test_unknown_convention():
    with pytest.raises(ValueError):
        perm_bound_I1_prime(PairContext([0.1] * 3, [0.2] * 3), convention="other")


def test_tie_breaking_prefers_smallest():
    res = maximize(lambda p: 1.0, 3, 2, Exhaustive())
    assert res.permutations == ((0, 1, 2), (0, 1, 2))
    assert res.evaluations == math.factorial(3) ** 2
