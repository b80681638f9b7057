import math

import numpy as np
from fastcore.test import test_close, test_eq, test_fail

from plijax.distributions.families import DistributionSpec, FamilyTag
from plijax.solver.geodesic import (
    GeodesicPath,
    HamiltonianSystem,
    Integrator,
    PathStatus,
    drift_convergence,
    get_system,
    hamiltonian_drift,
    integrate_geodesic,
    path_energy,
    path_length,
)
from plijax.utils.errors import DomainError, UnsupportedFamilyError

NORMAL = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))
TRIANGULAR = DistributionSpec(FamilyTag.Triangular, (50.0,), (49.0, 51.0))


def test_integrator_names():
    test_eq(Integrator.parse("euler"), Integrator.Euler)
    test_eq(Integrator.parse("AdamsMoulton"), Integrator.AdamsMoulton)
    test_fail(lambda: Integrator.parse("rk4"), exc=DomainError, contains="rk4")


def test_zero_momentum_stays_at_the_center():
    path = integrate_geodesic(NORMAL, [0.0, 0.0], n_steps=50)
    test_eq(path.status, PathStatus.Complete)
    test_eq(path.endpoint, NORMAL)
    test_eq(path.drift, np.zeros(51))
    test_eq(path_length(path), 0.0)


def test_rejects_bad_inputs():
    test_fail(lambda: integrate_geodesic(NORMAL, [1.0, 0.0], n_steps=9), exc=DomainError)
    test_fail(lambda: integrate_geodesic(NORMAL, [1.0, 0.0, 0.0]), exc=DomainError)
    test_fail(lambda: integrate_geodesic(NORMAL, [np.nan, 0.0]), exc=DomainError)
    uniform = DistributionSpec(FamilyTag.Uniform, (), (0.0, 1.0))
    test_fail(lambda: HamiltonianSystem(uniform), exc=UnsupportedFamilyError)


def test_unit_speed_geodesic_has_unit_length():
    # p0 = L u with |u| = 1 gives Fisher speed 1
    p0 = np.diag([1.0, math.sqrt(2)]) @ np.array([math.cos(1.0), math.sin(1.0)])
    path = integrate_geodesic(NORMAL, p0, Integrator.AdamsMoulton, 1000)
    test_eq(path.status, PathStatus.Complete)
    test_eq(path.q.shape, (1001, 2))
    test_close(path_length(path), 1.0, eps=1e-3)
    test_close(path_energy(path), 0.5, eps=1e-3)
    assert hamiltonian_drift(path) <= 1e-6


def test_euler_drift_is_first_order():
    p0 = np.array([0.8, 0.6 * math.sqrt(2)])
    coarse, fine, ratio = drift_convergence(NORMAL, p0, Integrator.Euler, 200)
    assert fine < coarse
    assert 1.6 < ratio < 2.4


def test_adams_moulton_drift_is_second_order():
    p0 = np.array([0.8, 0.6 * math.sqrt(2)])
    coarse, fine, ratio = drift_convergence(NORMAL, p0, Integrator.AdamsMoulton, 100)
    assert 0 < fine < coarse
    assert 3.2 < ratio < 4.8


def test_geodesics_are_reversible():
    p0 = np.diag([1.0, math.sqrt(2)]) @ np.array([math.cos(0.7), math.sin(0.7)])
    forward = integrate_geodesic(NORMAL, p0, Integrator.AdamsMoulton, 1000)
    back = integrate_geodesic(forward.endpoint, -forward.p[-1], Integrator.AdamsMoulton, 1000)
    test_eq(back.status, PathStatus.Complete)
    test_close(back.q[-1], np.array([0.0, 1.0]), eps=1e-3)
    test_close(back.p[-1], -p0, eps=1e-3)


def test_triangular_geodesic_is_explicit():
    # with I(m) = 1/((m-a)(b-m)) the unit speed geodesic from the midpoint is m(t) = 50 + sin(t)
    path = integrate_geodesic(TRIANGULAR, [0.5], n_steps=1000)
    test_eq(path.status, PathStatus.Complete)
    test_close(path.q[-1, 0], 50.0 + math.sin(0.5), eps=1e-5)
    test_close(path.endpoint.theta[0], 50.0 + math.sin(0.5), eps=1e-5)


def test_path_frame():
    frame = integrate_geodesic(NORMAL, [0.3, 0.0], n_steps=20).to_frame()
    test_eq(list(frame.columns), ["t", "q1", "q2", "p1", "p2", "H", "delta_H"])
    test_eq(len(frame), 21)
    test_eq(frame["delta_H"].iloc[0], 0.0)


def _synthetic(system, inside, healthy, poison=False):
    t = np.linspace(0.0, 1.0, 4)
    ys = np.tile(np.array([0.0, 1.0, 0.1, 0.0]), (4, 1))
    if poison:
        ys[3] = np.nan
    return system._to_path(t, ys, np.full(4, 0.005), np.array(inside), np.array(healthy))


def test_stops_at_the_first_invalid_state():
    system = get_system(NORMAL)
    complete = _synthetic(system, [True] * 4, [True] * 4)
    test_eq(complete.status, PathStatus.Complete)
    test_eq(complete.t_exit, None)

    truncated = _synthetic(system, [True, True, False, False], [True] * 4)
    test_eq(truncated.status, PathStatus.TruncatedAtBoundary)
    test_close(truncated.t_exit, 2 / 3)
    test_eq(truncated.q.shape, (2, 2))

    failed = _synthetic(system, [True] * 4, [True, True, True, False], poison=True)
    test_eq(failed.status, PathStatus.Failed)
    test_eq(failed.t_exit, None)
    test_eq(len(failed.t), 3)


def test_drift_of_a_constant_hamiltonian():
    path = GeodesicPath(NORMAL, np.array([0.0, 1.0]), np.zeros((2, 2)), np.ones((2, 2)), np.array([2.0, 2.0]), PathStatus.Complete)
    test_eq(path.max_drift, 0.0)
