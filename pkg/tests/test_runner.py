import numpy as np
import pytest

from swarmlab import (ConfigError, NumericError, ParamRange, RunConfig,
                      run_optimization)
from swarmlab.benchmarks import registry_lookup


def _config(**overrides):
    base = dict(algorithm="pso", space=registry_lookup("sphere", 2).bounds,
                population=10, iterations=100, seed=42)
    base.update(overrides)
    return RunConfig(**base)


def test_monotone_best_column():
    bench = registry_lookup("sphere", 2)
    trace = run_optimization(_config(), bench)
    assert len(trace) == 100
    best = np.asarray(trace.best_fitness)
    assert np.all(np.diff(best) <= 0.0)


def test_zero_budget_rejected():
    with pytest.raises(ConfigError):
        _config(iterations=0)


def test_unknown_algorithm_rejected():
    with pytest.raises(ConfigError) as err:
        _config(algorithm="acofoo")
    assert "pso" in str(err.value)


def test_traces_are_deterministic():
    bench = registry_lookup("rastrigin", 3)
    cfg = _config(algorithm="cuckoo", space=bench.bounds)
    a = run_optimization(cfg, bench)
    b = run_optimization(cfg, bench)
    assert a.best_fitness == b.best_fitness
    assert a.diversity == b.diversity
    assert a.evaluations == b.evaluations


def test_parallel_trace_identical_to_serial():
    bench = registry_lookup("ackley", 3)
    serial = run_optimization(_config(algorithm="fpa", space=bench.bounds), bench)
    parallel = run_optimization(
        _config(algorithm="fpa", space=bench.bounds, parallel_eval=True), bench)
    assert serial.best_fitness == parallel.best_fitness
    assert serial.diversity == parallel.diversity


def test_snapshots_recorded_on_schedule():
    bench = registry_lookup("sphere", 2)
    trace = run_optimization(_config(iterations=10, snapshot_every=4), bench)
    assert sorted(trace.snapshots) == [4, 8]
    assert trace.snapshots[4].shape == (10, 2)


def test_evaluation_counter_increases():
    bench = registry_lookup("sphere", 2)
    trace = run_optimization(_config(iterations=5), bench)
    evals = np.asarray(trace.evaluations)
    assert np.all(np.diff(evals) > 0)
    assert evals[0] >= 2 * 10  # initialization plus first step


def test_numeric_error_carries_iteration():
    bench = registry_lookup("sphere", 2)
    calls = {"n": 0}

    def flaky(x):
        calls["n"] += 1
        return float("nan") if calls["n"] > 30 else float(np.dot(x, x))

    with pytest.raises(NumericError) as err:
        run_optimization(_config(iterations=50), flaky)
    assert err.value.iteration is not None
    assert err.value.iteration >= 1


def test_controlled_parameter_redraw_changes_trace():
    bench = registry_lookup("sphere", 2)
    controlled = (ParamRange("inertia", 0.4, 0.9, mode="stochastic-control"),)
    fixed = run_optimization(_config(), bench)
    varied = run_optimization(_config(controlled=controlled), bench)
    assert fixed.best_fitness != varied.best_fitness


def test_controlled_parameter_stays_in_range():
    bench = registry_lookup("sphere", 2)
    seen = []

    class Probe:
        def __init__(self, inner):
            self.inner = inner

        def step(self, pop, f, rng, parallel=False):
            seen.append(self.inner.params.inertia)
            return self.inner.step(pop, f, rng, parallel=parallel)

        def __getattr__(self, name):
            return getattr(self.inner, name)

    import swarmlab.runner as runner_mod
    original = runner_mod.make_stepper
    runner_mod.make_stepper = lambda *a, **k: Probe(original(*a, **k))
    try:
        controlled = (ParamRange("inertia", 0.4, 0.9,
                                 mode="stochastic-control"),)
        run_optimization(_config(iterations=30, controlled=controlled), bench)
    finally:
        runner_mod.make_stepper = original
    assert len(seen) == 30
    assert all(0.4 <= w <= 0.9 for w in seen)
    assert len(set(seen)) > 1
