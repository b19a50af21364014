"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import raywig


def ray(*amps):
    return raywig.Ray(raywig.StateVector(np.array(amps, dtype=complex)))


OCTANT = (
    ray(1, 0),
    ray(1 / math.sqrt(2), 1 / math.sqrt(2)),
    ray(1 / math.sqrt(2), 1j / math.sqrt(2)),
)


def test_state_numpy_round_trip():
    amps = np.array([0.5, 0.5j, -0.5, 0.5], dtype=complex)
    sv = raywig.StateVector(amps)
    assert sv.dim == 4
    np.testing.assert_allclose(sv.amps, amps)
    assert sv.norm == pytest.approx(1.0)


def test_ray_canonical_gauge():
    r = ray(1j, 1j)
    np.testing.assert_allclose(r.rep.amps, np.array([1, 1]) / math.sqrt(2), atol=1e-15)
    assert raywig.overlap(r, ray(1, 1)) == pytest.approx(1.0)


def test_octant_bargmann_invariant():
    inv = raywig.bargmann_invariant(*OCTANT)
    assert inv.delta == pytest.approx(0.25 + 0.25j)
    assert inv.rho == pytest.approx(math.sqrt(2) / 4)
    assert inv.beta == pytest.approx(math.pi / 4)


def test_orthogonal_triple_has_undefined_beta():
    inv = raywig.bargmann_invariant(ray(1, 0), ray(0, 1), OCTANT[1])
    assert inv.rho == pytest.approx(0.0)
    assert inv.beta is None


def test_triangle_identity():
    tri = raywig.triangle_geometry(*OCTANT)
    assert tri.a == pytest.approx(math.pi / 2)
    assert tri.angle_a == pytest.approx(math.pi / 2)
    inv = raywig.bargmann_invariant(*OCTANT)
    assert raywig.cos_beta_from_triangle(tri) == pytest.approx(math.cos(inv.beta))


def test_half_solid_angle():
    report = raywig.check_half_solid_angle(*OCTANT)
    assert report.solid_angle == pytest.approx(math.pi / 2)
    assert report.sign == raywig.HOLONOMY_SIGN == 1
    assert report.residual < 1e-12


def test_discrete_lift_holonomy():
    a, b, c = OCTANT
    out = raywig.discrete_lift([a, b, c, a], a.rep)
    factor = raywig.inner_product(a.rep, out)
    assert factor == pytest.approx(np.exp(-1j * math.pi / 4))


def test_wigner_reconstruction_round_trip():
    rng = raywig.Rng(2026)
    for dim in (2, 3, 5):
        u = raywig.haar_unitary(dim, rng)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(dim), atol=1e-12)

        lift = raywig.wigner_lift(raywig.RayMapOracle.unitary(u), rng)
        assert not lift.antiunitary
        assert abs(np.trace(lift.matrix.conj().T @ u)) / dim == pytest.approx(1.0)

        alift = raywig.wigner_lift(raywig.RayMapOracle.antiunitary(u), rng)
        assert alift.antiunitary
        assert alift.chi == raywig.ChiKind.conjugation


def test_callable_oracle_and_w1_w2():
    rng = raywig.Rng(7)
    u = raywig.haar_unitary(3, rng)
    base = raywig.RayMapOracle.unitary(u)
    wrapped = raywig.RayMapOracle.from_function(3, base.apply)
    lift = raywig.wigner_lift(wrapped, rng)
    report = raywig.verify_w1_w2(wrapped, lift, 50, rng)
    assert report.w1_max_residual < 1e-10
    assert report.w2_max_residual < 1e-10


def test_non_isometry_is_rejected():
    rng = raywig.Rng(1)
    with pytest.raises(raywig.RaywigError):
        raywig.wigner_lift(raywig.RayMapOracle.unitary(np.diag([1.0, 2.0])), rng)


def test_deformation_trace():
    rng = raywig.Rng(12)
    while True:
        a, b, c = (raywig.random_ray(3, rng) for _ in range(3))
        if abs(raywig.bargmann_invariant(a, b, c).delta.imag) > 1e-3:
            break
    trace = raywig.imdelta_deformation_check(a, b, c, 30)
    assert trace.constant_sign
    assert len(trace.stage1) == len(trace.stage2) == 30
