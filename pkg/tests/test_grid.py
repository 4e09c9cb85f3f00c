import numpy as np
import pytest

from fvscaling.grid import BoundaryKind, CellField, GridError, IncompatibleGridsError, InvalidDomainError, \
    InvalidFieldError, SpaceTimeField, build_grid, extend_with_ghosts, restrict, sample_at_centers, \
    sample_fine_at_centers


def test_build_grid_spacing_and_centers():
    grid = build_grid(0.0, 1.0, 100)
    assert grid.dx == pytest.approx(0.01)
    assert grid.centers[0] == pytest.approx(0.005)
    assert abs(grid.centers[-1] + grid.dx / 2 - grid.b) <= 1e-12 * (grid.b - grid.a)


def test_build_grid_two_cells():
    np.testing.assert_allclose(build_grid(0.0, 1.0, 2).centers, [0.25, 0.75])


@pytest.mark.parametrize("a, b, n_cells", [(1.0, 0.0, 100), (0.0, 0.0, 10), (0.0, 1.0, 1), (0.0, 1.0, 0)])
def test_build_grid_rejects_invalid_domain(a, b, n_cells):
    with pytest.raises(InvalidDomainError):
        build_grid(a, b, n_cells)


def test_centers_strictly_increasing_with_constant_spacing():
    grid = build_grid(-2.0, 3.0, 37)
    steps = np.diff(grid.centers)
    assert np.all(steps > 0)
    np.testing.assert_allclose(steps, grid.dx, rtol=1e-12)


def test_grid_arrays_are_read_only():
    grid = build_grid(0.0, 1.0, 10)
    with pytest.raises(ValueError):
        grid.centers[0] = 1.0


@pytest.mark.parametrize("values, bc, n_ghost, expected", [
    ([1, 2, 3], BoundaryKind.PERIODIC, 1, [3, 1, 2, 3, 1]),
    ([1, 2, 3], BoundaryKind.TRANSMISSIVE, 1, [1, 1, 2, 3, 3]),
    ([1, 2, 3, 4], BoundaryKind.PERIODIC, 2, [3, 4, 1, 2, 3, 4, 1, 2]),
    ([1, 2, 3, 4], BoundaryKind.TRANSMISSIVE, 2, [1, 1, 1, 2, 3, 4, 4, 4]),
])
def test_extend_with_ghosts(values, bc, n_ghost, expected):
    field = CellField(values)
    extended = extend_with_ghosts(field, bc, n_ghost)
    np.testing.assert_array_equal(extended, expected)
    np.testing.assert_array_equal(extended[n_ghost:-n_ghost], values)
    np.testing.assert_array_equal(field.values, values)


def test_extend_with_ghosts_rejects_ghost_count():
    with pytest.raises(GridError):
        extend_with_ghosts(CellField([1.0, 2.0, 3.0]), BoundaryKind.PERIODIC, 3)


def test_restrict_constant():
    fine_grid, coarse_grid = build_grid(0.0, 1.0, 1000), build_grid(0.0, 1.0, 100)
    coarse = restrict(CellField(np.full(1000, 3.7)), fine_grid, coarse_grid)
    assert coarse.n_cells == 100
    np.testing.assert_allclose(coarse.values, 3.7, rtol=1e-14)


def test_restrict_averages_covering_cells():
    coarse = restrict(CellField([1.0, 2.0, 3.0, 4.0]), build_grid(0.0, 1.0, 4), build_grid(0.0, 1.0, 2))
    np.testing.assert_allclose(coarse.values, [1.5, 3.5])


def test_restrict_preserves_integral(rng):
    fine_grid, coarse_grid = build_grid(0.0, 2.0, 1000), build_grid(0.0, 2.0, 50)
    fine = CellField(rng.uniform(-1.0, 5.0, 1000))
    coarse = restrict(fine, fine_grid, coarse_grid)
    fine_integral = fine_grid.dx * fine.values.sum()
    assert coarse_grid.dx * coarse.values.sum() == pytest.approx(fine_integral, rel=1e-12)


def test_restrict_rejects_non_integer_ratio():
    with pytest.raises(IncompatibleGridsError):
        restrict(CellField(np.ones(1000)), build_grid(0.0, 1.0, 1000), build_grid(0.0, 1.0, 300))


def test_restrict_rejects_other_domain():
    with pytest.raises(IncompatibleGridsError):
        restrict(CellField(np.ones(1000)), build_grid(0.0, 1.0, 1000), build_grid(0.0, 2.0, 100))


def test_sample_fine_at_centers_on_shared_faces():
    coarse = sample_fine_at_centers(CellField([1.0, 2.0, 3.0, 4.0]), build_grid(0.0, 1.0, 4), build_grid(0.0, 1.0, 2))
    np.testing.assert_allclose(coarse.values, [1.5, 3.5])


def test_sample_fine_at_centers_is_exact_for_linear_profiles():
    fine_grid, coarse_grid = build_grid(0.0, 1.0, 1000), build_grid(0.0, 1.0, 100)
    coarse = sample_fine_at_centers(CellField(2.0 * fine_grid.centers + 1.0), fine_grid, coarse_grid)
    np.testing.assert_allclose(coarse.values, 2.0 * coarse_grid.centers + 1.0, rtol=1e-12)


def test_sample_fine_at_centers_odd_ratio_picks_the_middle_cell(rng):
    fine = CellField(rng.uniform(-1.0, 1.0, 300))
    coarse = sample_fine_at_centers(fine, build_grid(0.0, 1.0, 300), build_grid(0.0, 1.0, 100))
    np.testing.assert_allclose(coarse.values, fine.values[1::3], rtol=0, atol=1e-12)


def test_sample_fine_at_centers_rejects_incompatible_meshes():
    with pytest.raises(IncompatibleGridsError):
        sample_fine_at_centers(CellField(np.ones(1000)), build_grid(0.0, 1.0, 1000), build_grid(0.0, 2.0, 100))
    with pytest.raises(IncompatibleGridsError):
        sample_fine_at_centers(CellField(np.ones(50)), build_grid(0.0, 1.0, 50), build_grid(0.0, 1.0, 100))


def test_cell_field_rejects_non_finite():
    with pytest.raises(InvalidFieldError):
        CellField([1.0, np.nan])
    with pytest.raises(InvalidFieldError):
        CellField([np.inf, 0.0])


def test_sample_at_centers_uses_point_values():
    grid = build_grid(0.0, 1.0, 4)
    np.testing.assert_allclose(sample_at_centers(grid, lambda x: x ** 2).values, grid.centers ** 2)
    np.testing.assert_allclose(sample_at_centers(grid, lambda x: 2.0).values, 2.0)


def test_space_time_field_checks_final_time():
    SpaceTimeField(levels=np.zeros((5, 3)), dt=0.25, t_final=1.0)
    with pytest.raises(InvalidFieldError):
        SpaceTimeField(levels=np.zeros((5, 3)), dt=0.25, t_final=1.1)


def test_space_time_field_zeros():
    w = SpaceTimeField.zeros(n_cells=10, n_steps=7, dt=0.1)
    assert w.n_steps == 7
    assert w.n_cells == 10
    assert w.t_final == pytest.approx(0.7)
    np.testing.assert_array_equal(w.final.values, 0.0)
    with pytest.raises(ValueError):
        w.levels[0, 0] = 1.0
