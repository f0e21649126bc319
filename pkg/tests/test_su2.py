import math

import numpy as np
import pytest

from acring.su2 import (
    Generator3,
    SU2Element,
    axis_decompose,
    compose,
    frobenius_distance,
    inverse,
    su2_exp,
    su2_identity,
    to_matrix,
    trace_real,
)
from conftest import random_su2

Z = Generator3((0.0, 0.0, 1.0))
X = Generator3((1.0, 0.0, 0.0))
Y = Generator3((0.0, 1.0, 0.0))


def test_identity():
    e = su2_identity()
    assert e.a0 == 1.0 and e.a == (0.0, 0.0, 0.0)
    assert trace_real(e) == 2.0


def test_identity_law(rng):
    for _ in range(16):
        u = random_su2(rng)
        assert frobenius_distance(compose(su2_identity(), u), u) < 1e-15
        assert frobenius_distance(compose(u, su2_identity()), u) < 1e-15


def test_exp_half_turn():
    u = su2_exp(Z, math.pi)
    assert abs(u.a0 + 1.0) < 1e-15
    assert max(abs(c) for c in u.a) < 1e-15
    assert abs(trace_real(u) + 2.0) < 1e-15


def test_exp_quarter_turn():
    u = su2_exp(Z, math.pi / 2)
    assert abs(u.a0) < 1e-15
    assert abs(u.a[2] - 1.0) < 1e-15
    # matrix view is -i sigma_z
    m = to_matrix(u)
    assert np.allclose(m, np.array([[-1j, 0], [0, 1j]]), atol=1e-15)


def test_exp_zero_generator():
    u = su2_exp(Generator3((0.0, 0.0, 0.0)), 1.234)
    assert u == su2_identity()


def test_exp_rejects_non_finite():
    with pytest.raises(ValueError):
        Generator3((math.nan, 0.0, 0.0))
    with pytest.raises(ValueError):
        su2_exp(Z, math.inf)


def test_same_axis_additivity(rng):
    for _ in range(32):
        g = Generator3(tuple(rng.normal(size=3)))
        s, t = rng.uniform(-3, 3, size=2)
        lhs = compose(su2_exp(g, s), su2_exp(g, t))
        rhs = su2_exp(g, s + t)
        assert frobenius_distance(lhs, rhs) < 1e-12


def test_distinct_axes_do_not_commute():
    a = compose(su2_exp(X, math.pi / 2), su2_exp(Y, math.pi / 2))
    b = compose(su2_exp(Y, math.pi / 2), su2_exp(X, math.pi / 2))
    assert frobenius_distance(a, b) > 1.0


def test_trace_is_axis_independent(rng):
    for _ in range(32):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        angle = rng.uniform(0, math.pi)
        assert abs(trace_real(su2_exp(Generator3(tuple(axis)), angle)) - 2 * math.cos(angle)) < 1e-12


def test_trace_cyclicity(rng):
    for _ in range(32):
        u, v = random_su2(rng), random_su2(rng)
        assert abs(trace_real(compose(u, v)) - trace_real(compose(v, u))) < 1e-12


def test_axis_decompose_basic():
    cos_phi, a = axis_decompose(su2_exp(Z, math.pi / 3))
    assert abs(cos_phi - math.cos(math.pi / 3)) < 1e-15
    assert abs(a[2] - math.sin(math.pi / 3)) < 1e-15
    assert abs(a[0]) < 1e-15 and abs(a[1]) < 1e-15


def test_axis_decompose_degenerate():
    cos_phi, a = axis_decompose(su2_identity())
    assert cos_phi == 1.0 and a == (0.0, 0.0, 0.0)


def test_axis_decompose_round_trip(rng):
    for _ in range(32):
        u = random_su2(rng)
        cos_phi, a = axis_decompose(u)
        norm = math.sqrt(sum(c * c for c in a))
        angle = math.atan2(norm, cos_phi)
        if norm < 1e-12:
            continue
        rebuilt = su2_exp(Generator3(tuple(c / norm for c in a)), angle)
        assert frobenius_distance(rebuilt, u) < 1e-12


def test_unit_norm_invariant(rng):
    u = random_su2(rng)
    for _ in range(512):
        u = compose(u, random_su2(rng))
        assert abs(u.norm_squared() - 1.0) <= 1e-12


def test_associativity(rng):
    for _ in range(64):
        a, b, c = (random_su2(rng) for _ in range(3))
        assert frobenius_distance(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-12


def test_matrix_view_is_special_unitary(rng):
    for _ in range(32):
        m = to_matrix(random_su2(rng))
        assert np.linalg.norm(m.conj().T @ m - np.eye(2)) <= 1e-12
        assert abs(np.linalg.det(m) - 1.0) <= 1e-12


def test_matrix_view_trace_is_real(rng):
    for _ in range(16):
        m = to_matrix(random_su2(rng))
        assert np.trace(m).imag == 0.0


def test_compose_matches_matrix_product(rng):
    for _ in range(32):
        u, v = random_su2(rng), random_su2(rng)
        assert np.linalg.norm(to_matrix(compose(u, v)) - to_matrix(u) @ to_matrix(v)) < 1e-12


def test_inverse_is_conjugate(rng):
    for _ in range(16):
        u = random_su2(rng)
        assert frobenius_distance(compose(u, inverse(u)), su2_identity()) < 1e-12


def test_renormalization_pulls_drift_back():
    # feed a slightly off-manifold element through compose
    drifted = SU2Element(1.0 + 5e-14, (0.0, 0.0, 0.0))
    out = compose(drifted, su2_exp(Z, 0.3))
    assert abs(out.norm_squared() - 1.0) <= 1e-14
