import math

import numpy as np
import pytest

from swarmlab import (BatParams, BatState, ContractError, CuckooParams,
                      FireflyParams, FpaParams, InvalidArgumentError,
                      PsoParams, RngStream, SearchSpace, bat_schedules,
                      bat_step, cuckoo_step, default_params, firefly_step,
                      fpa_step, make_stepper, pso_step)
from swarmlab.algorithms import BatStepper, FireflyStepper
from swarmlab.benchmarks import sphere
from swarmlab.samplers import mantegna_sigma

from conftest import FakeRng, make_population


class TestParamValidation:
    def test_pso_ranges(self):
        with pytest.raises(InvalidArgumentError):
            PsoParams(alpha=-0.1)
        with pytest.raises(InvalidArgumentError):
            PsoParams(inertia=1.5)

    def test_bat_ranges(self):
        with pytest.raises(InvalidArgumentError):
            BatParams(f_min=3.0, f_max=1.0)
        with pytest.raises(InvalidArgumentError):
            BatParams(alpha_loudness=1.0)
        with pytest.raises(InvalidArgumentError):
            BatParams(r0=1.5)
        with pytest.raises(InvalidArgumentError):
            BatParams(A0=0.0)

    def test_firefly_ranges(self):
        with pytest.raises(InvalidArgumentError):
            FireflyParams(beta0=0.0)
        with pytest.raises(InvalidArgumentError):
            FireflyParams(gamma_abs=-1.0)
        with pytest.raises(InvalidArgumentError):
            FireflyParams(alpha_decay=0.0)

    def test_cuckoo_ranges(self):
        with pytest.raises(InvalidArgumentError):
            CuckooParams(pa=1.1)
        with pytest.raises(InvalidArgumentError):
            CuckooParams(lam=2.0)

    def test_fpa_ranges(self):
        with pytest.raises(InvalidArgumentError):
            FpaParams(p_switch=-0.1)
        with pytest.raises(InvalidArgumentError):
            FpaParams(gamma_scale=0.0)


class TestMakeStepper:
    def test_unknown_algorithm(self):
        with pytest.raises(InvalidArgumentError):
            make_stepper("annealing", PsoParams())

    def test_wrong_params_type(self):
        with pytest.raises(ContractError):
            make_stepper("pso", BatParams())

    def test_needs_params_or_space(self):
        with pytest.raises(InvalidArgumentError):
            make_stepper("pso")

    def test_default_params_scale_with_space(self):
        space = SearchSpace.cube(3, -5.12, 5.12)
        ff = default_params("firefly", space)
        assert ff.gamma_abs == pytest.approx(1.0 / 10.24**2)
        assert ff.alpha_step == pytest.approx(1.024)
        cs = default_params("cuckoo", space)
        assert cs.alpha_levy == pytest.approx(0.1024)


class TestPso:
    def test_stationary_fixed_point(self):
        pop = make_population([[1.0, 1.0]], velocities=True, fitness=[2.0])
        pso_step(pop, PsoParams(2.0, 2.0), sphere, FakeRng(u=0.7))
        np.testing.assert_array_equal(pop.positions, [[1.0, 1.0]])
        np.testing.assert_array_equal(pop.velocities, [[0.0, 0.0]])

    def test_hand_evaluated_update(self, square):
        pop = make_population([[0.0, 0.0]], space=square, velocities=True,
                              fitness=[0.0])
        pop.pbest_positions[:] = [[1.0, 1.0]]
        pop.best_position = np.array([1.0, 1.0])
        pso_step(pop, PsoParams(1.0, 1.0), sphere, FakeRng(u=1.0))
        np.testing.assert_array_equal(pop.velocities, [[2.0, 2.0]])
        np.testing.assert_array_equal(pop.positions, [[2.0, 2.0]])

    def test_pure_drift_when_coefficients_zero(self, square):
        pop = make_population([[0.5, -0.5]], space=square, velocities=True,
                              fitness=[0.5])
        pop.velocities[:] = [[1.0, -1.0]]
        pso_step(pop, PsoParams(0.0, 0.0), sphere, FakeRng(u=0.3))
        np.testing.assert_array_equal(pop.positions, [[1.5, -1.5]])

    def test_absorbing_bounds_zero_velocity(self, square):
        pop = make_population([[4.5, 0.0]], space=square, velocities=True,
                              fitness=[sphere(np.array([4.5, 0.0]))])
        pop.pbest_positions[:] = [[6.0, 0.0]]
        pop.best_position = np.array([6.0, 0.0])
        pso_step(pop, PsoParams(1.0, 0.0), sphere, FakeRng(u=1.0))
        assert pop.positions[0, 0] == 5.0
        assert pop.velocities[0, 0] == 0.0

    def test_requires_velocities(self):
        pop = make_population([[0.0, 0.0]], fitness=[0.0])
        with pytest.raises(ContractError):
            pso_step(pop, PsoParams(), sphere, FakeRng())


class TestBat:
    def test_frequency_endpoints(self):
        params = BatParams(f_min=0.5, f_max=2.5)
        for u, expected in ((0.0, 0.5), (1.0, 2.5)):
            pop = make_population([[1.0, 0.0], [2.0, 0.0]], velocities=True,
                                  fitness=[1.0, 4.0])
            stepper = BatStepper(params)
            stepper.step(pop, sphere, FakeRng(u=u))
            assert np.all(stepper.last_frequencies == expected)

    def test_fixed_point_at_best(self):
        pop = make_population([[1.0, 2.0], [1.0, 2.0]], velocities=True,
                              fitness=[5.0, 5.0])
        bat_step(pop, BatParams(), BatState.initial(2, BatParams()),
                 sphere, FakeRng(u=0.0))
        np.testing.assert_array_equal(pop.positions, [[1.0, 2.0], [1.0, 2.0]])
        np.testing.assert_array_equal(pop.velocities, np.zeros((2, 2)))

    def test_zero_loudness_freezes_positions(self):
        pop = make_population([[3.0, 0.0], [4.0, 0.0]], velocities=True,
                              fitness=[9.0, 16.0])
        params = BatParams(f_min=1.0, f_max=1.0)
        state = BatState.initial(2, params)
        state.loudness[:] = 0.0
        before = pop.positions.copy()
        bat_step(pop, params, state, sphere, FakeRng(u=0.5))
        np.testing.assert_array_equal(pop.positions, before)

    def test_schedules_closed_form(self):
        r, a = bat_schedules(0.5, 0.9, 1.0, 0.9, 0)
        assert r == 0.0 and a == 0.9
        r1, _ = bat_schedules(0.5, 0.9, 1.0, 0.9, 1)
        assert r1 == pytest.approx(0.5 * (1.0 - math.exp(-0.9)))
        rbig, _ = bat_schedules(0.5, 0.9, 1.0, 0.9, 200)
        assert r1 < rbig <= 0.5

    def test_schedules_negative_t(self):
        with pytest.raises(InvalidArgumentError):
            bat_schedules(0.5, 0.9, 1.0, 0.9, -1)

    def test_state_advances_per_bat(self):
        params = BatParams(A0=2.0, alpha_loudness=0.5, r0=0.8, gamma_rate=1.0)
        state = BatState.initial(3, params)
        assert np.all(state.loudness == 2.0) and np.all(state.pulse_rate == 0.0)
        state.advance(params)
        assert np.all(state.loudness == 1.0)
        assert np.all(state.pulse_rate
                      == pytest.approx(0.8 * (1.0 - math.exp(-1.0))))


class TestFirefly:
    def test_gamma_zero_full_attraction(self):
        space = SearchSpace.cube(1, -10.0, 10.0)
        pop = make_population([[0.0], [4.0]], space=space, fitness=[0.0, 16.0])
        firefly_step(pop, FireflyParams(beta0=1.0, gamma_abs=0.0, alpha_step=0.0),
                     sphere, FakeRng(z=0.0))
        # Attraction coefficient is beta0 everywhere, so the dim agent
        # lands exactly on the bright one.
        np.testing.assert_array_equal(pop.positions, [[0.0], [0.0]])

    def test_half_attraction_at_ln2_distance(self):
        space = SearchSpace.cube(1, -10.0, 10.0)
        x1 = math.sqrt(math.log(2.0))
        pop = make_population([[0.0], [x1]], space=space,
                              fitness=[0.0, x1 * x1])
        firefly_step(pop, FireflyParams(beta0=1.0, gamma_abs=1.0, alpha_step=0.0),
                     sphere, FakeRng(z=0.0))
        assert pop.positions[1, 0] == pytest.approx(0.5 * x1, rel=1e-14)

    def test_single_agent_stays_put(self):
        # Perturbations ride on pair moves, so a lone agent has none.
        pop = make_population([[1.0, 1.0]], fitness=[2.0])
        firefly_step(pop, FireflyParams(alpha_step=0.5), sphere, FakeRng(z=1.0))
        np.testing.assert_array_equal(pop.positions, [[1.0, 1.0]])

    def test_alpha_decay_accumulates(self):
        pop = make_population([[1.0, 1.0]], fitness=[2.0])
        stepper = FireflyStepper(FireflyParams(alpha_decay=0.5))
        stepper.step(pop, sphere, FakeRng())
        stepper.step(pop, sphere, FakeRng())
        assert stepper._alpha_factor == 0.25


class TestCuckoo:
    def test_population_minimum(self):
        pop = make_population([[0.0, 0.0], [1.0, 1.0]], fitness=[0.0, 2.0])
        with pytest.raises(InvalidArgumentError):
            cuckoo_step(pop, CuckooParams(), sphere, FakeRng())

    def test_zero_pa_closes_local_gate(self):
        # Flat objective isolates the local phase: nothing can improve,
        # so any movement would have to come from the gated local walk.
        pop = make_population([[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]],
                              fitness=[1.0, 1.0, 1.0])
        params = CuckooParams(pa=0.0, alpha_levy=0.0)
        before = pop.positions.copy()
        cuckoo_step(pop, params, lambda x: 1.0, FakeRng(u=0.5, z=1.0))
        np.testing.assert_array_equal(pop.positions, before)

    def test_identical_positions_zero_local_move(self):
        pop = make_population([[2.0, 2.0]] * 3, fitness=[8.0] * 3)
        cuckoo_step(pop, CuckooParams(pa=1.0, alpha_levy=0.0), sphere,
                    FakeRng(u=0.5, z=1.0))
        np.testing.assert_array_equal(pop.positions, [[2.0, 2.0]] * 3)

    def test_zero_steps_create_no_new_positions(self):
        original = np.array([[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
        pop = make_population(original, fitness=[1.0, 4.0, 9.0])
        best_before = pop.best_fitness
        cuckoo_step(pop, CuckooParams(alpha_levy=0.0, alpha_local=0.0),
                    sphere, RngStream(4))
        # Zero-length steps can only copy existing rows around.
        for row in pop.positions:
            assert any(np.array_equal(row, orig) for orig in original)
        assert pop.best_fitness == best_before

    def test_elitism_preserves_best(self):
        rng = RngStream(0)
        pop = make_population([[4.0, 4.0], [0.5, 0.5], [-3.0, 2.0]],
                              fitness=[32.0, 0.5, 13.0])
        for _ in range(20):
            previous = float(np.min(pop.fitness))
            cuckoo_step(pop, CuckooParams(), sphere, rng)
            assert float(np.min(pop.fitness)) <= previous


class TestFpa:
    def test_population_minimum(self):
        pop = make_population([[0.0, 0.0], [1.0, 1.0]], fitness=[0.0, 2.0])
        with pytest.raises(InvalidArgumentError):
            fpa_step(pop, FpaParams(), sphere, FakeRng())

    def test_agent_at_best_global_branch_zero_move(self):
        pop = make_population([[1.0, 1.0]] * 3, fitness=[2.0] * 3)
        fpa_step(pop, FpaParams(p_switch=1.0), sphere, FakeRng(u=0.5, z=1.0))
        np.testing.assert_array_equal(pop.positions, [[1.0, 1.0]] * 3)

    def test_zero_uniform_local_branch_no_move(self):
        pop = make_population([[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]],
                              fitness=[1.0, 4.0, 9.0])
        fpa_step(pop, FpaParams(p_switch=0.0), sphere, FakeRng(u=0.0, z=1.0))
        np.testing.assert_array_equal(
            pop.positions, [[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])

    def test_global_branch_arithmetic(self):
        space = SearchSpace.cube(2, -100.0, 100.0)
        pop = make_population([[4.0, 0.0], [2.0, 0.0], [8.0, 0.0]],
                              space=space, fitness=[16.0, 4.0, 64.0])
        params = FpaParams(p_switch=1.0, gamma_scale=0.5, lam=1.5)
        # z=1 makes every Mantegna step equal sigma_u exactly.
        fpa_step(pop, params, sphere, FakeRng(u=0.5, z=1.0))
        levy = mantegna_sigma(1.5)
        expected = 4.0 + 0.5 * levy * (2.0 - 4.0)
        assert pop.positions[0, 0] == pytest.approx(expected, rel=1e-14)

    def test_greedy_replacement_never_worsens(self):
        rng = RngStream(1)
        pop = make_population([[4.0, 4.0], [0.5, 0.5], [-3.0, 2.0]],
                              fitness=[32.0, 0.5, 13.0])
        for _ in range(20):
            before = pop.fitness.copy()
            fpa_step(pop, FpaParams(), sphere, rng)
            assert np.all(pop.fitness <= before)
