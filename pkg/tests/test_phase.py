import math

import numpy as np
import pytest

from acring.errors import ContinuationError
from acring.fields import ACConfig
from acring.holonomy import IntegratorSpec, oracle_spec, propagate
from acring.phase import (
    continue_branch,
    extract_phase,
    path_dependence_witness,
    sweep_lambda,
    theta0_analytic,
)
from acring.su2 import Generator3, frobenius_distance, su2_exp, su2_identity

PI5 = math.pi / 5
TWO_PI = 2.0 * math.pi
Z = Generator3((0.0, 0.0, 1.0))
CF4 = IntegratorSpec("commutator_free_4", 4096)

FIVE_THETAS = [0.0, math.pi / 20, math.pi / 10, 3 * math.pi / 20, PI5]

# Continued phases at theta = pi/5, frozen from the 1e6-step product oracle
# (tilted-case values are mirrors 2*pi - principal once past the pi crossing).
ORACLE_CONTINUED_PI5 = {
    0.25: 1.6250442424413003,
    0.5: 3.141592653589793,
    0.75: 4.2847388033139655,
    1.0: 4.265390471261961,
}

# Largest tilt-induced phase spreads at fixed charge ratio, frozen from
# oracle-grade sweeps.
ORACLE_WITNESS = {0.3: 0.055838064681086541, 0.8: 0.62299951865481695}


def test_extract_identity():
    r = extract_phase(su2_identity())
    assert r.phi_ac_principal == 0.0
    assert r.cos_phi == 1.0
    assert r.axis == (0.0, 0.0, 0.0)


def test_extract_minus_identity():
    r = extract_phase(su2_exp(Z, math.pi))
    assert abs(r.phi_ac_principal - math.pi) < 1e-12
    assert r.axis == (0.0, 0.0, 0.0)


def test_extract_third_turn():
    r = extract_phase(su2_exp(Z, math.pi / 3))
    assert abs(r.phi_ac_principal - math.pi / 3) < 1e-14
    assert abs(r.cos_phi - 0.5) < 1e-14
    assert abs(r.axis[2] - 1.0) < 1e-14


def test_extract_clamps_cos(rng):
    for _ in range(200):
        g = Generator3(tuple(rng.normal(size=3)))
        r = extract_phase(su2_exp(g, rng.uniform(0, TWO_PI)))
        assert -1.0 <= r.cos_phi <= 1.0
        assert 0.0 <= r.phi_ac_principal <= math.pi
        norm = math.sqrt(sum(c * c for c in r.axis))
        assert norm == 0.0 or abs(norm - 1.0) < 1e-12


def test_triangle_reproduced_on_dense_grid():
    lambdas = list(np.linspace(0.0, 2.0, 801))
    sweep = sweep_lambda(lambdas, 0.0, IntegratorSpec("commutator_free_4", 256))
    for lam, r in sweep.points:
        assert abs(r.phi_ac_continued - theta0_analytic(lam)[1]) <= 1e-8


def test_constant_identity_sweep_is_zero():
    points = [(float(k), extract_phase(su2_identity())) for k in range(20)]
    sweep = continue_branch(points, parameter_name="lambda_ratio")
    assert all(r.phi_ac_continued == 0.0 for _, r in sweep.points)


def test_tilted_sweep_matches_oracle_fixtures():
    lambdas = list(np.linspace(0.0, 1.0, 201))
    sweep = sweep_lambda(lambdas, PI5, CF4)
    continued = {round(p, 4): r.phi_ac_continued for p, r in sweep.points}
    for lam, expected in ORACLE_CONTINUED_PI5.items():
        if lam <= 1.0:
            assert abs(continued[lam] - expected) <= 1e-9


def test_tilted_sweep_shape_rises_then_falls():
    # on [0, 1.2] the tilted curve rises through pi to a single maximum and
    # then decreases; the positive minimum lies beyond this window
    lambdas = list(np.linspace(0.0, 1.2, 241))
    sweep = sweep_lambda(lambdas, PI5, CF4)
    values = np.array([r.phi_ac_continued for _, r in sweep.points])
    peak = int(np.argmax(values))
    assert 0 < peak < len(values) - 1
    assert np.all(np.diff(values[: peak + 1]) > -1e-9)
    assert np.all(np.diff(values[peak:]) < 1e-9)
    assert values[peak] < TWO_PI
    assert values[peak] > values[0] + 4.0
    assert values[peak] > values[-1] + 1.0


def test_continuation_cosine_consistency():
    lambdas = list(np.linspace(0.0, 2.0, 101))
    sweep = sweep_lambda(lambdas, math.pi / 10, CF4)
    for _, r in sweep.points:
        assert abs(math.cos(r.phi_ac_continued) - r.cos_phi) <= 1e-9
        assert r.phi_ac_continued >= 0.0


def test_continuation_rejects_non_monotone():
    points = [(0.0, extract_phase(su2_identity())), (0.0, extract_phase(su2_identity()))]
    with pytest.raises(ContinuationError):
        continue_branch(points)


def test_continuation_rejects_coarse_sweep():
    # untilted slope is 2*pi per unit ratio; a 0.3 spacing jumps the
    # principal value by ~1.9 > pi/2
    lambdas = list(np.arange(0.0, 1.3, 0.3))
    with pytest.raises(ContinuationError, match="refine sweep"):
        sweep_lambda(lambdas, 0.0, IntegratorSpec(steps=64))


def test_theta0_analytic_values():
    assert theta0_analytic(0.0)[1] == 0.0
    assert abs(theta0_analytic(0.5)[1] - math.pi) < 1e-14
    assert abs(theta0_analytic(1.0)[1] - TWO_PI) < 1e-14
    assert abs(theta0_analytic(1.5)[1] - math.pi) < 1e-14
    assert abs(theta0_analytic(2.0)[1]) < 1e-13
    assert abs(theta0_analytic(3.7)[1] - TWO_PI * 0.3) < 1e-12


def test_theta0_analytic_holonomy():
    for lam in (0.0, 0.25, 0.5, 1.0, 2.3):
        u, _ = theta0_analytic(lam)
        assert frobenius_distance(u, su2_exp(Z, TWO_PI * lam)) == 0.0


def test_theta0_numeric_matches_analytic():
    lambdas = list(np.linspace(0.0, 4.0, 161))
    sweep = sweep_lambda(lambdas, 0.0, IntegratorSpec("product_exponentials", 128))
    for lam, r in sweep.points:
        assert abs(r.phi_ac_continued - theta0_analytic(lam)[1]) <= 1e-8


def test_witness_zero_charge():
    assert path_dependence_witness(0.0, [0.0, PI5]) == 0.0


def test_witness_single_path_is_zero():
    assert path_dependence_witness(0.5, [0.0], CF4, sweep_points=33) == 0.0


def test_witness_requires_untilted_baseline():
    with pytest.raises(ValueError):
        path_dependence_witness(0.5, [PI5])
    with pytest.raises(ValueError):
        path_dependence_witness(0.5, [])


def test_witness_generic_charge_is_path_dependent():
    for lam, expected in ORACLE_WITNESS.items():
        got = path_dependence_witness(lam, FIVE_THETAS, CF4)
        assert abs(got - expected) <= 1e-6
        assert got > 0.01


def test_witness_vanishes_at_half_charge_pinch():
    # every tilt returns exactly -identity at lambda_ratio = 1/2, so the
    # spread collapses; frozen oracle value is ~1e-14
    got = path_dependence_witness(0.5, [0.0, PI5], CF4)
    assert got <= 1e-9


def test_cos_symmetry_untilted():
    for lam in np.linspace(0.0, 1.0, 50):
        a = extract_phase(propagate(ACConfig(float(lam), 0.0), CF4)).cos_phi
        b = extract_phase(propagate(ACConfig(float(1.0 - lam), 0.0), CF4)).cos_phi
        assert abs(a - b) <= 1e-9


def test_cos_symmetry_lifted_when_tilted():
    worst = 0.0
    for lam in np.linspace(0.0, 1.0, 21):
        a = extract_phase(propagate(ACConfig(float(lam), PI5), CF4)).cos_phi
        b = extract_phase(propagate(ACConfig(float(1.0 - lam), PI5), CF4)).cos_phi
        worst = max(worst, abs(a - b))
    assert worst > 1e-3


def test_not_periodic_when_tilted():
    worst = 0.0
    for lam in np.linspace(0.0, 1.0, 21):
        a = extract_phase(propagate(ACConfig(float(lam), PI5), CF4)).cos_phi
        b = extract_phase(propagate(ACConfig(float(lam) + 1.0, PI5), CF4)).cos_phi
        worst = max(worst, abs(a - b))
    assert worst > 1e-3


def test_axis_untilted_is_z_aligned():
    for lam in (0.1, 0.3, 0.4, 0.7, 0.9, 1.3):
        r = extract_phase(propagate(ACConfig(lam, 0.0), CF4))
        assert abs(r.axis[0]) < 1e-12 and abs(r.axis[1]) < 1e-12
        assert abs(abs(r.axis[2]) - 1.0) < 1e-12
        # with the principal convention the axis is +z on the rising half
        if 0.0 < lam % 1.0 < 0.5:
            assert r.axis[2] > 0.0


def test_axis_tilted_leaves_z():
    # the rotation axis acquires a radial component but stays in the x-z
    # plane (the connection is even about phi = 0)
    r = extract_phase(propagate(ACConfig(0.3, PI5), oracle_spec()))
    assert r.axis[0] > 0.15
    assert abs(r.axis[1]) < 1e-12
    assert abs(abs(r.axis[2]) - 1.0) > 1e-3
