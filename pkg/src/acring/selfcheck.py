"""Embedded invariant suite behind the ``selfcheck`` subcommand.

Each check is small, deterministic, and sensitive to a different failure
mode (group drift, broken closed forms, wrong integrator coefficients,
ordering mistakes, spectrum regressions). The CLI prints one line per check
and exits nonzero if any fails.
"""

from __future__ import annotations

import math

import numpy as np

from .fields import ACConfig, electric_field, potential_from_field, vector_potential
from .holonomy import IntegratorSpec, convergence_report, propagate, propagate_trace
from .phase import extract_phase, sweep_lambda, theta0_analytic
from .spectrum import SpectrumConfig, solve_spectrum
from .su2 import Generator3, compose, frobenius_distance, su2_exp, to_matrix

Check = tuple[str, bool, str]


def _random_elements(rng: np.random.Generator, count: int):
    vecs = rng.normal(size=(count, 3))
    scales = rng.uniform(0.0, 2.0 * math.pi, size=count)
    return [su2_exp(Generator3(tuple(v)), s) for v, s in zip(vecs, scales)]


def _check_su2_unitarity() -> Check:
    rng = np.random.default_rng(11)
    worst = 0.0
    elements = _random_elements(rng, 64)
    u = elements[0]
    for v in elements[1:]:
        u = compose(u, v)
        worst = max(worst, abs(u.norm_squared() - 1.0))
        m = to_matrix(u)
        worst = max(worst, float(np.abs(m.conj().T @ m - np.eye(2)).max()))
    return ("su2_unitarity", worst <= 1e-12, f"max deviation {worst:.3e}")


def _check_su2_associativity() -> Check:
    rng = np.random.default_rng(12)
    worst = 0.0
    for _ in range(32):
        a, b, c = _random_elements(rng, 3)
        worst = max(
            worst, frobenius_distance(compose(compose(a, b), c), compose(a, compose(b, c)))
        )
    return ("su2_associativity", worst <= 1e-12, f"max deviation {worst:.3e}")


def _check_abelian_exactness() -> Check:
    worst = 0.0
    for r in (0.25, 0.5, 1.0, 1.7):
        for method in ("product_exponentials", "commutator_free_4"):
            u = propagate(ACConfig(r, 0.0), IntegratorSpec(method, 16))
            exact = su2_exp(Generator3((0.0, 0.0, 1.0)), 2.0 * math.pi * r)
            worst = max(worst, frobenius_distance(u, exact))
    return ("abelian_exactness", worst <= 1e-12, f"max deviation {worst:.3e}")


def _check_field_cross_consistency() -> Check:
    worst = 0.0
    for theta in np.linspace(0.0, 0.45 * math.pi, 10):
        for phi in np.linspace(0.0, 2.0 * math.pi, 37):
            direct = vector_potential(phi, theta, 0.8)
            crossed = potential_from_field(electric_field(phi, theta), 0.8)
            worst = max(
                worst,
                abs(direct.e_r - crossed.e_r),
                abs(direct.e_phi - crossed.e_phi),
                abs(direct.e_z - crossed.e_z),
            )
    return ("field_cross_consistency", worst <= 1e-12, f"max deviation {worst:.3e}")


def _order_estimate(method: str) -> float:
    report = convergence_report(
        ACConfig(0.5, math.pi / 5), method, [128, 256, 512, 1024]
    )
    errors = [e for _, e in report]
    if any(e <= 0.0 for e in errors):
        return math.inf
    ratios = [math.log2(a / b) for a, b in zip(errors, errors[1:])]
    return float(np.median(ratios))


def _check_product_order() -> Check:
    order = _order_estimate("product_exponentials")
    return ("product_order", 1.5 <= order <= 2.5, f"empirical order {order:.2f}")


def _check_cf4_order() -> Check:
    order = _order_estimate("commutator_free_4")
    return ("cf4_order", 3.5 <= order <= 4.5, f"empirical order {order:.2f}")


def _check_splitting_consistency() -> Check:
    config = ACConfig(0.7, math.pi / 6)
    spec = IntegratorSpec("commutator_free_4", 2048)
    full = propagate(config, spec)
    worst = 0.0
    for split in (1.1, math.pi, 5.0):
        trace = propagate_trace(config, spec, [split, 2.0 * math.pi])
        rejoined = trace.samples[-1][1]
        worst = max(worst, frobenius_distance(rejoined, full))
    return ("splitting_consistency", worst <= 1e-10, f"max deviation {worst:.3e}")


def _check_triangle_theta0() -> Check:
    lambdas = list(np.linspace(0.0, 3.0, 121))
    sweep = sweep_lambda(lambdas, 0.0, IntegratorSpec("commutator_free_4", 64))
    worst = max(
        abs(r.phi_ac_continued - theta0_analytic(p)[1]) for p, r in sweep.points
    )
    return ("triangle_theta0", worst <= 1e-8, f"max deviation {worst:.3e}")


def _check_spectrum_constant_potential() -> Check:
    config = SpectrumConfig(ACConfig(0.25, 0.0), kappa_pol=0.0, basis_cutoff=12)
    result = solve_spectrum(config, 8)
    offset = extract_phase(
        propagate(config.ac, config.holonomy_spec)
    ).phi_ac_principal / (2.0 * math.pi)
    expected = sorted(
        (n + s * offset) ** 2 + 0.75 for n in range(-4, 5) for s in (1.0, -1.0)
    )[:8]
    worst = max(abs(a - b) for a, b in zip(result.energies, expected))
    return ("spectrum_constant_potential", worst <= 1e-10, f"max deviation {worst:.3e}")


def run_selfcheck() -> list[Check]:
    checks = [
        _check_su2_unitarity,
        _check_su2_associativity,
        _check_abelian_exactness,
        _check_field_cross_consistency,
        _check_product_order,
        _check_cf4_order,
        _check_splitting_consistency,
        _check_triangle_theta0,
        _check_spectrum_constant_potential,
    ]
    return [check() for check in checks]
