import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import naive_pow, random_instance_data
from vecsched import (
    GlbInstance,
    GreedyVectorScheduler,
    InfeasibleJobError,
    SpedUpVectorScheduler,
    Tau,
    VsInstance,
    encode,
    fast_pow,
    glb_online,
    glb_to_vs,
    lnorm_tau,
    ratio_bound,
    vs_makespan,
    vs_online_alg1,
    vs_online_alg2,
)
from vecsched.online import knuth_count, lp_greedy_ratio


# -- fast_pow ---------------------------------------------------------------


def test_fast_pow_power_of_two():
    assert fast_pow(2.0, 8) == (256.0, 3)


def test_fast_pow_identity():
    assert fast_pow(1.7, 1) == (1.7, 0)


def test_fast_pow_13():
    value, count = fast_pow(1.1, 13)
    assert count == 5 == 3 + 3 - 1
    assert value == pytest.approx(naive_pow(1.1, 13), rel=1e-14)


@pytest.mark.parametrize("t", range(1, 65))
def test_fast_pow_count_and_value(t):
    value, count = fast_pow(3, t)
    assert value == 3**t
    assert count == math.floor(math.log2(t)) + bin(t).count("1") - 1 == knuth_count(t)


def test_fast_pow_array():
    a = np.array([0.0, 0.5, 2.0])
    value, count = fast_pow(a, 6)
    np.testing.assert_allclose(value, a**6)
    assert count == 3


def test_fast_pow_rejects_zero():
    with pytest.raises(ValueError):
        fast_pow(2.0, 0)


# -- lnorm_tau --------------------------------------------------------------


def test_lnorm_examples():
    assert lnorm_tau([3, 4], 2) == 25
    assert lnorm_tau(np.zeros(5), 3) == 0
    assert lnorm_tau(np.zeros(5), 2.7) == 0
    assert lnorm_tau([1, 2, 3], 3) == sum(naive_pow(x, 3) for x in (1, 2, 3)) == 36


def test_lnorm_real_tau():
    assert lnorm_tau([1.0, 2.0], 1.5) == pytest.approx(1 + 2**1.5)


def test_lnorm_rows():
    np.testing.assert_array_equal(lnorm_tau([[3, 4], [1, 0]], 2), [25, 1])


def test_overflow_guard():
    sched = SpedUpVectorScheduler(1, 1, 200)
    with pytest.raises(OverflowError):
        sched.push([1e10])


# -- Tau and bounds ---------------------------------------------------------


def test_tau_resolution():
    assert Tau.int_ceil().resolve(60) == 5
    assert Tau.int_ceil().resolve(1) == 1
    assert Tau.real_ln().resolve(60) == pytest.approx(math.log(60))
    assert Tau.explicit(3).resolve(1000) == 3
    with pytest.raises(ValueError):
        Tau.real_ln().resolve(1)
    with pytest.raises(ValueError):
        Tau.explicit(0)


def test_reported_worst_case_ratios():
    assert round(ratio_bound(60, Tau.real_ln()), 4) == 16.0566
    assert round(ratio_bound(60, Tau.int_ceil()), 4) == 16.8264


def test_explicit_bound_at_ln_l_is_e_log_l():
    assert ratio_bound(60, Tau.explicit(math.log(60))) == pytest.approx(ratio_bound(60, Tau.real_ln()), rel=1e-12)


def test_bound_rejects_single_machine():
    with pytest.raises(ValueError):
        ratio_bound(1, Tau.int_ceil())


def test_rounding_loss_bound_sweep():
    l = np.arange(2, 200_001, dtype=float)
    tau = np.ceil(np.log(l))
    assert np.all(lp_greedy_ratio(l, tau) <= np.e * np.log2(l) + np.e * np.log2(np.e) / (np.log(l) + 1) + 1e-12)


# -- GLB greedy -------------------------------------------------------------


def _enumerate_choice(loads, cost_i, tau):
    """Candidate norms by brute force over the machines."""
    return [sum((loads[k] + cost_i[j][k]) ** tau for k in range(len(loads))) for j in range(len(cost_i))]


def test_glb_online_classic_example():
    cost = np.zeros((2, 2, 2))
    cost[0] = np.diag([10, 10])
    cost[1] = np.diag([1, 1])
    first = _enumerate_choice([0, 0], cost[0], 2)
    assert first == [100, 100]
    second = _enumerate_choice([10, 0], cost[1], 2)
    assert second == [121, 101]
    assert glb_online(GlbInstance(cost), Tau.explicit(2)).target == (0, 1)


def test_glb_online_single_job():
    cost = np.array([[[3.0, 3.0], [0.0, 4.0]]])
    assert glb_online(GlbInstance(cost), Tau.explicit(2)).target == (1,)


def test_glb_online_skips_infinite_and_errors_when_all_infinite():
    cost = np.array([[[np.inf, 0.0], [5.0, 5.0]]])
    assert glb_online(GlbInstance(cost), Tau.explicit(2)).target == (1,)
    with pytest.raises(InfeasibleJobError):
        glb_online(GlbInstance(np.full((1, 2, 2), np.inf)), Tau.explicit(2))


def test_glb_online_anchor_only_on_reduced():
    rng = np.random.default_rng(0)
    for _ in range(50):
        vectors, m = random_instance_data(rng)
        red = encode(VsInstance(vectors, m))
        asg = glb_online(red.glb, Tau.int_ceil())
        assert all(red.machine(s).is_anchor for s in asg)


# -- vector scheduling ------------------------------------------------------


def test_alg1_empty_rule_when_n_equals_m():
    inst = VsInstance(np.eye(3) + 1, m=3)
    assert vs_online_alg1(inst, Tau.int_ceil(), order=[2, 0, 1]).target == (1, 2, 0)


def test_alg1_d1_tie_goes_to_lowest_index():
    inst = VsInstance([[3.0], [3.0], [2.0]], m=2)
    # third vector: (3+2)^2 + 3^2 = 34 either way
    assert sum(x**2 for x in (5, 3)) == sum(x**2 for x in (3, 5)) == 34
    asg = vs_online_alg1(inst, Tau.explicit(2))
    assert asg.target == (0, 1, 0)
    assert vs_makespan(inst, asg) == 5
    assert glb_to_vs(glb_online(encode(inst).glb, Tau.explicit(2)), encode(inst)) == asg
    assert vs_online_alg2(inst, tau=Tau.explicit(2)) == asg


def test_alg1_hand_enumeration_full_objective():
    inst = VsInstance([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [2.0, 0.0]], m=2)
    tau = 2
    sched = GreedyVectorScheduler(2, 2, tau)
    for i in range(4):
        before = sched.loads.copy()
        j = sched.push(inst.vectors[i])
        if i >= 2:
            f = []
            for cand in range(2):
                loads = before.copy()
                loads[cand] += inst.vectors[i]
                f.append((loads**tau).sum())
            assert j == int(np.argmin(f))


def test_alg2_cache_coherence_and_op_counts():
    rng = np.random.default_rng(4)
    m, d = 4, 7
    sched = SpedUpVectorScheduler(m, d, Tau.int_ceil().resolve(m * d))
    tau = sched.tau
    for i in range(40):
        sched.push(rng.random(d))
        np.testing.assert_allclose(sched.delta, sched.recomputed_delta(), rtol=1e-9)
        adds, mults = sched.step_ops[-1]
        if i >= m:
            assert adds == m * d
            assert mults == m * d * knuth_count(tau) <= 2 * m * d * math.log2(tau)


def test_alg2_needs_integer_tau():
    with pytest.raises(ValueError):
        SpedUpVectorScheduler(2, 2, 1.5)


def test_alg2_hetero_matches_alg1():
    rng = np.random.default_rng(9)
    for _ in range(30):
        n, m, d = 8, 3, 4
        inst = VsInstance(None, m, hetero_costs=rng.random((n, m, d)))
        order = rng.permutation(n)
        assert vs_online_alg1(inst, Tau.int_ceil(), order) == vs_online_alg2(inst, order)


def test_order_must_be_permutation():
    inst = VsInstance(np.ones((3, 2)), m=2)
    with pytest.raises(ValueError):
        vs_online_alg2(inst, order=[0, 0, 1])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_specialization_and_increment_argmin(seed):
    rng = np.random.default_rng(seed)
    vectors, m = random_instance_data(rng, d_max=8)
    inst = VsInstance(vectors, m)
    order = rng.permutation(inst.n)
    tau = Tau.int_ceil()
    red = encode(inst)
    if tau.resolve(m * inst.d) > 1:
        via_glb = glb_to_vs(glb_online(red.glb, tau, order), red)
        assert vs_online_alg1(inst, tau, order) == via_glb
    real = Tau.real_ln()
    if m * inst.d >= 2 and real.resolve(m * inst.d) > 1:
        assert vs_online_alg1(inst, real, order) == glb_to_vs(glb_online(red.glb, real, order), red)
    # the full objective and the increment pick the same partition at every step
    t = tau.resolve(m * inst.d)
    sched = GreedyVectorScheduler(m, inst.d, t)
    for i in order:
        loads = sched.loads.copy()
        nonempty = (sched.sizes > 0).all()
        j = sched.push(inst.vectors[i])
        if nonempty:
            inc = [lnorm_tau(loads[c] + inst.vectors[i], t) - lnorm_tau(loads[c], t) for c in range(m)]
            # same argmin up to rounding-level ties
            assert inc[j] <= min(inc) + 1e-9 * max(1.0, abs(min(inc)))


def test_tau_one_objective_is_flat():
    # with tau = 1 every candidate has the same norm; only the empty-partition rule spreads vectors
    inst = VsInstance([[0.5], [0.2]], m=2)
    red = encode(inst)
    assert Tau.int_ceil().resolve(2) == 1
    assert glb_to_vs(glb_online(red.glb, Tau.int_ceil()), red).target == (0, 0)
    assert vs_online_alg1(inst, Tau.int_ceil()).target == (0, 1)


def test_every_order_is_feasible():
    rng = np.random.default_rng(12)
    inst = VsInstance(rng.random((6, 3)), m=2)
    for order in itertools.permutations(range(6)):
        asg = vs_online_alg2(inst, order)
        assert len(asg) == 6 and set(asg) <= {0, 1}
