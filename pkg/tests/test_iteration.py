import numpy as np
import pytest

from fvscaling.grid import SpaceTimeField
from fvscaling.iteration import DegenerateNormError, NoConvergenceError, direct_solution, iterate, sup_norm

from .conftest import with_initial_condition


def test_sup_norm_covers_all_levels():
    levels = np.zeros((3, 4))
    levels[1, 2] = -7.0
    assert sup_norm(SpaceTimeField(levels=levels, dt=0.5, t_final=1.0)) == 7.0
    assert sup_norm(SpaceTimeField.zeros(4, 2, 0.5)) == 0.0


def test_first_beta_of_advection(advection):
    trace = iterate(advection)
    assert trace.rows[0].n == 1
    assert trace.rows[0].e_n is None
    assert trace.rows[0].beta == pytest.approx(np.exp(0.0025), rel=1e-9)


def test_first_beta_of_traffic(traffic):
    trace = iterate(traffic)
    assert trace.rows[0].beta == pytest.approx(1.0 / 2.2, abs=1e-6)


def test_source_free_law_converges_in_two_solves(source_free_advection):
    trace = iterate(source_free_advection)
    assert trace.converged
    assert trace.iterations_used == 2
    assert trace.rows[1].e_n == 0.0
    np.testing.assert_array_equal(trace.final_field.levels, direct_solution(source_free_advection).levels)


def test_beta_normalizes_the_final_iterate(burgers):
    trace = iterate(burgers)
    assert trace.beta * sup_norm(trace.final_field) == pytest.approx(1.0, rel=1e-14)


def test_rows_and_snapshots(burgers):
    seen = []
    trace = iterate(burgers, on_row=seen.append)
    assert [row.n for row in trace.rows] == list(range(1, trace.iterations_used + 1))
    assert seen == list(trace.rows)
    assert len(trace.snapshots) == len(trace.rows)
    np.testing.assert_array_equal(trace.snapshots[-1].values, trace.final_field.final.values)
    assert all(row.e_n > 0 for row in trace.rows[1:-1])
    assert trace.rows[-1].e_n <= burgers.defaults.tol


def test_iteration_budget_exhausted(advection):
    cfg = advection.defaults.with_overrides(max_iters=3)
    trace = iterate(advection, cfg=cfg)
    assert not trace.converged
    assert trace.iterations_used == 3
    with pytest.raises(NoConvergenceError) as info:
        trace.raise_for_convergence()
    assert info.value.trace is trace


def test_converged_trace_passes_check(burgers):
    trace = iterate(burgers)
    assert trace.raise_for_convergence() is trace


def test_vanishing_iterate(source_free_advection):
    model = with_initial_condition(source_free_advection, lambda x: np.zeros_like(x))
    with pytest.raises(DegenerateNormError):
        iterate(model)


def test_custom_grid_and_settings(burgers):
    cfg = burgers.defaults.with_overrides(n_cells=50, tol=1e-5)
    trace = iterate(burgers, cfg=cfg)
    assert trace.final_field.n_cells == 50
    assert trace.settings.tol == 1e-5
    assert trace.converged
