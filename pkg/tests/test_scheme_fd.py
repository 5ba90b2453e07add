import numpy as np
import pytest

from conftest import sine_cell_averages
from wbcentral import Euler, Grid, LinearAdvection, SchemeConfig, advance
from wbcentral.equilibrium import (DeviationField, constant_profile, isothermal_profile,
                                   to_deviation, zero_profile)
from wbcentral.errors import DegenerateFanError, PositivityError
from wbcentral.experiments import scenario_shock_tube
from wbcentral.grid import fill_ghosts
from wbcentral.reconstruct import mc_theta_slopes
from wbcentral.scheme_fd import (InterfaceGeometry, IntermediateAverages, evolve_smooth,
                                 evolve_unsmooth, interface_wavespeeds, make_geometry,
                                 midpoint_predictor, project, step_fd)


def prepared(cells, grid, profile, theta=1.5):
    cells = fill_ghosts(np.array(cells, dtype=float), grid, profile)
    return DeviationField(cells, mc_theta_slopes(cells, grid.dx, theta))


def zero_field(grid, n_comp=3):
    return DeviationField(np.zeros((n_comp, grid.n_total)))


def test_wavespeeds_at_rest_are_sound_speed():
    grid = Grid(50)
    profile = isothermal_profile()
    a = interface_wavespeeds(zero_field(grid), profile, grid, Euler())
    # p / rho = 1 along the whole isothermal profile, so c = sqrt(1.4) exactly
    np.testing.assert_allclose(a, np.sqrt(1.4), rtol=1e-13)


def test_wavespeeds_uniform_state():
    grid = Grid(20)
    d = DeviationField(np.tile([[1.0], [0.0], [2.5]], grid.n_total))
    a = interface_wavespeeds(d, zero_profile(Euler()), grid, Euler())
    np.testing.assert_allclose(a, np.sqrt(1.4), rtol=1e-15)
    s = LinearAdvection()
    a = interface_wavespeeds(zero_field(grid, 1), zero_profile(s), grid, s)
    assert np.all(a == 1.0)


def test_wavespeeds_report_positivity():
    grid = Grid(10)
    cells = np.tile([[1.0], [0.0], [2.5]], grid.n_total)
    cells[0, 7] = -0.5
    with pytest.raises(PositivityError) as info:
        interface_wavespeeds(DeviationField(cells), zero_profile(Euler()), grid, Euler())
    assert info.value.index in (3, 4)


def test_equilibrium_kernel_is_exactly_zero():
    grid = Grid(64)
    profile = isothermal_profile()
    system = Euler()
    d = prepared(np.zeros((3, grid.n_total)), grid, profile)
    geom = make_geometry(d, profile, grid, system, 0.485)
    mid = midpoint_predictor(d, profile, geom, grid, system)
    assert np.all(mid.left == 0.0) and np.all(mid.right == 0.0)
    w_u = evolve_unsmooth(d, profile, geom, grid, system, mid)
    w_m = evolve_smooth(d, profile, geom, grid, system, mid)
    assert np.all(w_u == 0.0) and np.all(w_m == 0.0)
    assert np.all(project(IntermediateAverages(w_u, w_m), geom, grid) == 0.0)


def test_constant_deviation_is_preserved_by_each_stage():
    grid = Grid(30, boundary="periodic")
    system = LinearAdvection()
    profile = zero_profile(system)
    d = prepared(np.full((1, grid.n_total), 0.37), grid, profile)
    geom = make_geometry(d, profile, grid, system, 0.485)
    mid = midpoint_predictor(d, profile, geom, grid, system)
    np.testing.assert_allclose(mid.left, 0.37, rtol=1e-15)
    np.testing.assert_allclose(mid.right, 0.37, rtol=1e-15)
    w_u = evolve_unsmooth(d, profile, geom, grid, system, mid)
    w_m = evolve_smooth(d, profile, geom, grid, system, mid)
    np.testing.assert_allclose(w_u, 0.37, rtol=1e-14)
    np.testing.assert_allclose(w_m[:, 1:-1], 0.37, rtol=1e-14)
    out = project(IntermediateAverages(w_u, w_m), geom, grid)
    np.testing.assert_allclose(out[:, grid.interior], 0.37, rtol=1e-14)


def test_predictor_on_a_ramp():
    grid = Grid(40, boundary="periodic")
    system = LinearAdvection()
    profile = zero_profile(system)
    d = prepared(grid.centers[None, :].copy(), grid, profile)
    geom = make_geometry(d, profile, grid, system, 0.485)
    mid = midpoint_predictor(d, profile, geom, grid, system)
    # exact transport at unit speed: point value at x minus dt/2 times slope 1
    inner = slice(grid.n_ghost + 1, grid.n_ghost + grid.n_cells - 2)
    np.testing.assert_allclose(mid.left[0, inner], geom.x_l[inner] - 0.5 * geom.dt, rtol=1e-12)
    np.testing.assert_allclose(mid.right[0, inner], geom.x_r[inner] - 0.5 * geom.dt, rtol=1e-12)


def _exact_fan_average(d, grid, geom, i, n=200001):
    """Midpoint-rule average over U_i of the reconstruction transported by dt."""
    edges = np.linspace(geom.x_l[i], geom.x_r[i], n + 1)
    x = 0.5 * (edges[1:] + edges[:-1]) - geom.dt
    j = np.floor((x - grid.x_lo) / grid.dx).astype(int) + grid.n_ghost
    values = d.cells[0, j] + d.slopes[0, j] * (x - grid.centers[j])
    return values.mean()


def test_unsmooth_average_matches_exact_transport():
    grid = Grid(20, boundary="periodic")
    system = LinearAdvection()
    profile = zero_profile(system)
    cells = np.zeros((1, grid.n_total))
    cells[0, grid.n_ghost + 9] = 1.0
    cells[0, grid.n_ghost + 8] = 0.4
    d = prepared(cells, grid, profile)
    geom = make_geometry(d, profile, grid, system, 0.485)
    mid = midpoint_predictor(d, profile, geom, grid, system)
    w_u = evolve_unsmooth(d, profile, geom, grid, system, mid)
    for i in range(grid.n_ghost + 5, grid.n_ghost + 13):
        assert abs(w_u[0, i] - _exact_fan_average(d, grid, geom, i)) <= geom.dt ** 2


def test_symmetric_speeds_remove_slope_term():
    grid = Grid(16, boundary="periodic")
    system = LinearAdvection()
    profile = zero_profile(system)
    d = prepared(np.sin(grid.centers)[None, :], grid, profile)
    geom = make_geometry(d, profile, grid, system, 0.4)
    mid = midpoint_predictor(d, profile, geom, grid, system)
    w_m = evolve_smooth(d, profile, geom, grid, system, mid)
    no_slopes = DeviationField(d.cells, np.zeros_like(d.slopes))
    w_m2 = evolve_smooth(no_slopes, profile, geom, grid, system, mid)
    np.testing.assert_allclose(w_m, w_m2, rtol=0, atol=1e-15)


def test_smooth_region_rejects_cfl_violation():
    grid = Grid(16, boundary="periodic")
    system = LinearAdvection()
    profile = zero_profile(system)
    d = prepared(np.zeros((1, grid.n_total)), grid, profile)
    geom = InterfaceGeometry.build(np.ones(grid.n_total - 1), 0.6 * grid.dx, grid)
    mid = midpoint_predictor(d, profile, geom, grid, system)
    with pytest.raises(DegenerateFanError):
        evolve_smooth(d, profile, geom, grid, system, mid)


def test_projection_weights_tile_cells(rng):
    grid = Grid(50)
    a = rng.uniform(0.0, 3.0, grid.n_total - 1)
    dt = 0.485 * grid.dx / a.max()
    left, mid, right = InterfaceGeometry.build(a, dt, grid).weights()
    total = (left + mid + right)[1:-1]
    np.testing.assert_allclose(total, grid.dx, rtol=4 * np.finfo(float).eps)
    np.testing.assert_allclose(InterfaceGeometry.build(a, dt, grid).width_u, 2 * a * dt, rtol=0)


def test_degenerate_fans_are_inert():
    # Burgers with a zero state has vanishing local speeds
    from wbcentral import Burgers

    grid = Grid(30, boundary="periodic")
    system = Burgers()
    profile = zero_profile(system)
    cells = np.zeros((1, grid.n_total))
    cells[0, grid.n_ghost + 10 : grid.n_ghost + 15] = 0.5
    d = DeviationField(cells)
    new, dt = step_fd(d, profile, grid, system, SchemeConfig())
    assert np.all(np.isfinite(new.cells))
    assert new.cells[0, grid.interior].sum() == pytest.approx(cells[0, grid.interior].sum(), abs=1e-13)


def test_one_step_conserves_without_source():
    grid = Grid(100, boundary="periodic")
    system = LinearAdvection()
    profile = zero_profile(system)
    d = to_deviation(sine_cell_averages(grid)[None] + 2.0, profile, grid)
    new, _ = step_fd(d, profile, grid, system)
    before = d.cells[0, grid.interior].sum()
    assert abs(new.cells[0, grid.interior].sum() - before) <= 1e-13 * grid.n_cells * 3


def test_step_keeps_equilibrium():
    grid = Grid(200)
    profile = isothermal_profile()
    d, _ = step_fd(zero_field(grid), profile, grid, Euler())
    assert np.max(np.abs(d.cells)) <= 1e-13


def test_uniform_state_without_gravity_is_unchanged():
    grid = Grid(40)
    system = Euler()
    profile = zero_profile(system)
    q = np.tile([[0.8], [0.3], [2.2]], grid.n_cells)
    d = to_deviation(q, profile, grid)
    new, _ = step_fd(d, profile, grid, system)
    np.testing.assert_allclose(new.cells[:, grid.interior], q, rtol=0, atol=1e-14)


def test_uniform_state_with_constant_reference():
    grid = Grid(40)
    system = Euler()
    profile = constant_profile([0.8, 0.3, 2.2])
    d = to_deviation(np.tile([[0.8], [0.3], [2.2]], grid.n_cells), profile, grid)
    new, _ = step_fd(d, profile, grid, system)
    assert np.max(np.abs(new.cells)) <= 1e-14


def test_shock_tube_one_step_positive():
    sc = scenario_shock_tube()
    grid = sc.grid(100)
    d = to_deviation(sc.initial_state(grid.interior_centers), sc.profile, grid)
    new, dt = step_fd(d, sc.profile, grid, sc.system)
    q = new.cells[:, grid.interior] + sc.profile.state_at(grid.interior_centers)
    assert dt > 0
    assert np.all(q[0] > 0) and np.all(sc.system.pressure(q) > 0)


def test_dt_is_clipped_to_target():
    grid = Grid(50)
    _, dt = step_fd(zero_field(grid), isothermal_profile(), grid, Euler(), dt_max=1e-5)
    assert dt == 1e-5


@pytest.mark.parametrize("n", [25, 50, 100])
def test_equilibrium_independent_of_resolution(n):
    grid = Grid(n)
    profile = isothermal_profile()
    d, steps, _ = advance(zero_field(grid), profile, grid, Euler(), 0.05, step_fd)
    assert steps > 0
    assert np.all(d.cells == 0.0)


def test_second_order_on_smooth_advection():
    system = LinearAdvection()
    errors = []
    for n in (100, 200, 400):
        grid = Grid(n, boundary="periodic")
        profile = zero_profile(system)
        d = to_deviation(sine_cell_averages(grid)[None], profile, grid)
        d, _, _ = advance(d, profile, grid, system, 1.0, step_fd)
        errors.append(grid.dx * np.abs(d.cells[0, grid.interior] - sine_cell_averages(grid, 1.0)).sum())
    orders = np.log2(np.array(errors[:-1]) / errors[1:])
    assert np.all(orders >= 1.8)
