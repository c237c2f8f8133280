import numpy as np

from vecsched.bench import (
    ALGORITHMS,
    GenSpec,
    TrialRecord,
    bound_violations,
    box_stats,
    generate,
    makespan_csv,
    ratio_csv,
    scenario_makespan,
    scenario_ratio,
)


def test_zero_trials():
    assert generate(GenSpec(3, 2, 2, seed=1, trials=0)) == []


def test_support_and_shape():
    insts = generate(GenSpec(5, 2, 4, seed=2, trials=7))
    assert len(insts) == 7
    for inst in insts:
        assert inst.vectors.shape == (5, 4)
        assert (inst.vectors >= 0).all() and (inst.vectors < 1).all()


def test_same_seed_same_bytes():
    a = generate(GenSpec(2, 2, 2, seed=42, trials=3))
    b = generate(GenSpec(2, 2, 2, seed=42, trials=3))
    assert b"".join(x.vectors.tobytes() for x in a) == b"".join(x.vectors.tobytes() for x in b)


def test_row_major_single_stream():
    spec = GenSpec(2, 2, 3, seed=5, trials=2)
    draws = spec.rng().random(12)
    insts = generate(spec)
    np.testing.assert_array_equal(np.concatenate([i.vectors.ravel() for i in insts]), draws)


def test_streams_differ():
    a = generate(GenSpec(2, 2, 2, seed=1, trials=1, stream=0))[0].vectors
    b = generate(GenSpec(2, 2, 2, seed=1, trials=1, stream=1))[0].vectors
    assert not np.array_equal(a, b)


def test_ratio_scenario_small_run_is_reproducible():
    a = scenario_ratio(seed=3, trials=4, n=6)
    b = scenario_ratio(seed=3, trials=4, n=6)
    text = ratio_csv(a)
    assert text == ratio_csv(b)
    lines = text.splitlines()
    assert lines[0] == "trial,algo,makespan,opt,ratio"
    assert len(lines) - 1 == 4 * len(ALGORITHMS)
    assert bound_violations(a) == []
    assert all(min(r.ratio.values()) >= 1 - 1e-9 for r in a)


def test_makespan_scenario_csv_rows():
    recs = scenario_makespan(seed=1, trials=3, n=12, m=3, dims=(2, 4))
    lines = makespan_csv(recs).splitlines()
    assert lines[0] == "d,algo,mean_makespan,trials"
    assert len(lines) - 1 == 2 * len(ALGORITHMS)
    assert lines[1].startswith("2,alg1-real,") and lines[1].endswith(",3")


def test_bound_violation_detection():
    rec = TrialRecord("ratio", 0, 3, 20, {"list": 30.0, "alg2": 0.5}, opt=1.0)
    problems = bound_violations([rec])
    assert len(problems) == 2


def test_box_stats():
    s = box_stats([1, 2, 3, 4, 5])
    assert s == {"min": 1, "q1": 2, "median": 3, "q3": 4, "max": 5}
