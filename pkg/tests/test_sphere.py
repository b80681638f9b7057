import math
from dataclasses import replace

import numpy as np
import pytest
from fastcore.test import test_close, test_eq, test_fail

from plijax.distributions.families import DistributionSpec, FamilyTag
from plijax.distributions.fisher import fisher_information
from plijax.solver.geodesic import GeodesicPath, Integrator, PathStatus, integrate_geodesic, path_length
from plijax.solver.sphere import (
    DRIFT_TOLERANCE,
    fisher_sphere,
    gaussian_fisher_distance,
    initial_momenta,
    screen_path,
    sphere_density_table,
    sphere_directions,
    triangular_fisher_distance,
)
from plijax.utils.errors import DomainError, UnsupportedFamilyError

NORMAL = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))


def test_directions():
    u, angles = sphere_directions(2, 4)
    test_close(angles, np.array([0.0, 0.5, 1.0, 1.5]) * math.pi)
    test_close(np.linalg.norm(u, axis=1), np.ones(4))
    u, _ = sphere_directions(1, 100)
    test_eq(u, np.array([[1.0], [-1.0]]))
    test_fail(lambda: sphere_directions(3, 10), exc=UnsupportedFamilyError)
    test_fail(lambda: sphere_directions(2, 0), exc=DomainError)


def test_momenta_have_the_requested_dual_norm():
    center = DistributionSpec(FamilyTag.TruncNormal, (30.0, 7.5), (15.0, 75.0))
    p = initial_momenta(center, 0.7, 12)
    Iinv = fisher_information(center).inverse()
    test_close(np.einsum("ki,ij,kj->k", p, Iinv, p), np.full(12, 0.49), eps=1e-10)


def test_unit_sphere_around_the_standard_normal():
    sphere = fisher_sphere(NORMAL, 1.0, K=100)
    test_eq(sphere.K, 100)
    test_eq(sphere.n_valid, 100)
    distances = [gaussian_fisher_distance(NORMAL.theta, point.theta) for point in sphere.points]
    test_close(np.array(distances), np.ones(100), eps=1e-3)
    test_close(sphere.measured_lengths(), np.ones(100), eps=1e-3)
    assert sphere.max_drift <= 1e-4


def test_euler_sphere_is_accurate_enough():
    sphere = fisher_sphere(NORMAL, 1.0, K=32, method=Integrator.Euler, n_steps=1000)
    distances = np.array([gaussian_fisher_distance(NORMAL.theta, point.theta) for point in sphere.points])
    assert np.all(np.abs(distances - 1.0) <= 5e-3)


def test_sphere_errors():
    test_fail(lambda: fisher_sphere(NORMAL, 0.0), exc=DomainError)
    test_fail(lambda: fisher_sphere(NORMAL, -1.0), exc=DomainError)
    test_fail(lambda: fisher_sphere(NORMAL, 1.0, K=1), exc=DomainError)
    uniform = DistributionSpec(FamilyTag.Uniform, (), (0.0, 1.0))
    test_fail(lambda: fisher_sphere(uniform, 1.0), exc=UnsupportedFamilyError)


def test_closed_form_distances():
    test_close(gaussian_fisher_distance((0.0, 1.0), (0.0, math.e)), math.sqrt(2))
    test_close(gaussian_fisher_distance((0.0, 1.0), (1.0, 1.0)), 2 * math.sqrt(2) * math.asinh(0.25 * math.sqrt(2)), eps=1e-12)
    test_eq(gaussian_fisher_distance((2.0, 3.0), (2.0, 3.0)), 0.0)
    test_close(triangular_fisher_distance(50.0, 50.5, (49.0, 51.0)), math.pi / 6)
    test_fail(lambda: triangular_fisher_distance(49.0, 50.0, (49.0, 51.0)), exc=DomainError)
    test_fail(lambda: gaussian_fisher_distance((0.0, -1.0), (0.0, 1.0)), exc=DomainError)


def test_triangular_sphere_has_two_points():
    center = DistributionSpec(FamilyTag.Triangular, (50.0,), (49.0, 51.0))
    sphere = fisher_sphere(center, 0.5, K=100)
    test_eq(sphere.K, 2)
    modes = sorted(point.theta[0] for point in sphere.points)
    test_close(np.array(modes), 50.0 + np.array([-1.0, 1.0]) * math.sin(0.5), eps=1e-5)


def test_variance_chart_gives_the_same_laws():
    sigma = fisher_sphere(NORMAL, 0.5, K=8)
    variance = fisher_sphere(DistributionSpec(FamilyTag.NormalVariance, (0.0, 1.0)), 0.5, K=8)
    for a, b in zip(sigma.points, variance.points):
        test_close(a.theta[0], b.theta[0], eps=1e-5)
        test_close(a.theta[1] ** 2, b.theta[1], eps=1e-5)


def test_truncated_statuses_are_counted():
    center = DistributionSpec(FamilyTag.TruncGumbel, (1013.0, 558.0), (500.0, 3000.0))
    sphere = fisher_sphere(center, 0.3, K=8, n_steps=100)
    counts = {status: sphere.statuses.count(status) for status in PathStatus}
    test_eq(sum(counts.values()), 8)
    test_eq(counts[PathStatus.Complete], sphere.n_valid)


def test_screening_fails_inaccurate_paths():
    t = np.linspace(0.0, 1.0, 4)
    q = np.tile([0.0, 1.0], (4, 1))
    drifting = GeodesicPath(NORMAL, t, q, np.zeros((4, 2)), np.array([1.0, 1.0005, 1.01, 1.02]), PathStatus.Complete)
    cut = screen_path(drifting, 1.0, 1e-3, 1.0)
    test_eq(cut.status, PathStatus.Failed)
    test_eq(cut.H, np.array([1.0, 1.0005]))
    test_eq(cut.q.shape, (2, 2))

    # a path that never moves has length 0 instead of the radius
    still = GeodesicPath(NORMAL, t, q, np.zeros((4, 2)), np.ones(4), PathStatus.Complete)
    short = screen_path(still, 0.5, 1e-3, 0.01)
    test_eq(short.status, PathStatus.Failed)
    test_eq(len(short.t), 4)

    truncated = replace(drifting, status=PathStatus.TruncatedAtBoundary, t_exit=0.5)
    assert screen_path(truncated, 1.0, 1e-3, 0.01) is truncated

    p0 = np.diag([1.0, math.sqrt(2)]) @ np.array([0.6, 0.8])
    accurate = integrate_geodesic(NORMAL, p0, Integrator.AdamsMoulton, 1000)
    assert screen_path(accurate, 1.0, 1e-3, 0.01) is accurate


@pytest.mark.parametrize("delta", [1.0, 1.4])
def test_truncated_normal_sphere_keeps_accurate_points(delta):
    center = DistributionSpec(FamilyTag.TruncNormal, (30.0, 7.5), (15.0, 75.0))
    sphere = fisher_sphere(center, delta, K=100)
    counts = {status: sphere.statuses.count(status) for status in PathStatus}
    test_eq(sum(counts.values()), 100)
    assert sphere.n_valid > 0
    for k in sphere.valid_indices:
        path = sphere.paths[k]
        assert path.max_drift <= DRIFT_TOLERANCE[Integrator.AdamsMoulton]
        assert abs(path_length(path) - delta) <= 0.01 * delta
        assert np.all(np.isfinite(path.q[-1])) and path.q[-1, 1] > 0
    if delta == 1.4:
        assert counts[PathStatus.Failed] > 0


def test_spheres_are_cached():
    first = fisher_sphere(NORMAL, 0.5, K=6, n_steps=100)
    assert fisher_sphere(NORMAL, 0.5, K=6, method="adams_moulton", n_steps=100) is first
    assert fisher_sphere(NORMAL, 0.5, K=6, method="euler") is not first
    test_fail(lambda: fisher_sphere(NORMAL, 0.5, K=6, drift_tol=0.0), exc=DomainError)


def test_frames():
    sphere = fisher_sphere(NORMAL, 0.5, K=6, n_steps=100)
    frame = sphere.to_frame()
    test_eq(list(frame.columns), ["direction_index", "angle", "theta1", "theta2", "status", "measured_length"])
    test_eq(set(frame["status"]), {"complete"})
    table = sphere_density_table(sphere, n_grid=51)
    test_eq(len(table), 7 * 51)
    test_eq(table["direction_index"].min(), -1)
