"""Bound states on the ring after gauging the spin-orbit coupling away.

In the transformed gauge the Hamiltonian is spin-independent,
-d^2/dphi^2 + v(phi, theta) in units of hbar^2/(2 M r0^2), and the entire
spin-orbit effect lives in the twisted boundary condition
psi(phi + 2*pi) = U_AC^-1 psi(phi). Diagonalizing U_AC decouples the spinor
into two scalar problems whose Bloch quasi-momenta are offset by
+/- phi_ac / (2*pi); each is solved in a plane-wave basis with the potential
entering through its Fourier coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BasisTooSmallError
from .fields import ACConfig, _DENOMINATOR_FLOOR, validate_geometry
from .holonomy import IntegratorSpec, propagate
from .phase import extract_phase

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SpectrumConfig:
    """Ring spectrum parameters.

    kappa_pol is the dimensionless polarizability strength (mass times
    squared charge density times polarizability over hbar^2), so the
    polarizability term is kappa_pol * |E|^2 in the energy unit
    hbar^2/(2 M r0^2). basis_cutoff N spans plane waves n = -N..N per spin
    branch. phi_origin shifts where the closed path starts; physical results
    must not depend on it.
    """

    ac: ACConfig
    kappa_pol: float = 0.0
    basis_cutoff: int = 32
    holonomy_spec: IntegratorSpec = field(default_factory=IntegratorSpec)
    phi_origin: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.kappa_pol) or self.kappa_pol < 0.0:
            raise ValueError(f"kappa_pol must be finite and >= 0, got {self.kappa_pol}")
        if self.basis_cutoff < 8:
            raise ValueError(f"basis_cutoff must be >= 8, got {self.basis_cutoff}")


@dataclass(frozen=True)
class SpectrumResult:
    """Ascending energies, the quasi-momentum offsets used, and the mean potential."""

    energies: tuple[float, ...]
    quasi_momenta: tuple[float, float]
    potential_mean: float


def _potential_samples(phis: np.ndarray, config: SpectrumConfig) -> np.ndarray:
    """Vectorized scalar potential kappa*|E|^2 + r^2*(3|E|^2 + E_phi^2)."""
    shifted = phis + config.phi_origin
    c_phi = np.cos(shifted)
    s_phi = np.sin(shifted)
    theta = config.ac.theta
    c_theta = math.cos(theta)
    d = c_theta * c_theta * c_phi * c_phi + s_phi * s_phi
    if np.any(d <= _DENOMINATOR_FLOOR):
        from .errors import SingularGeometryError

        raise SingularGeometryError(
            f"line of charge intersects the ring path at theta={theta!r}"
        )
    s_theta = math.sin(theta)
    e_phi = s_theta * s_theta * np.sin(2.0 * shifted) / d
    e_z = -math.sin(2.0 * theta) * c_phi / d
    e_phi_sq = e_phi * e_phi
    e_sq = 4.0 + e_phi_sq + e_z * e_z
    r = config.ac.lambda_ratio
    return config.kappa_pol * e_sq + r * r * (3.0 * e_sq + e_phi_sq)


def scalar_potential(phi: float, config: SpectrumConfig) -> float:
    """Dimensionless scalar potential at ring angle phi (spin-independent)."""
    return float(_potential_samples(np.array([float(phi)]), config)[0])


def _fourier_coefficients(config: SpectrumConfig) -> np.ndarray:
    """Potential Fourier coefficients on a 16*N uniform grid (trapezoid rule).

    For a smooth periodic integrand the uniform trapezoid sum is spectrally
    accurate, and the FFT of the samples divided by the grid size gives
    exactly those sums for every needed harmonic.
    """
    m = 16 * config.basis_cutoff
    phis = _TWO_PI * np.arange(m) / m
    v = _potential_samples(phis, config)
    return np.fft.fft(v) / m


def solve_spectrum(config: SpectrumConfig, n_levels: int) -> SpectrumResult:
    """Lowest eigenvalues of the twisted-boundary ring problem.

    The holonomy is diagonalized exactly through its phase: the two spinor
    branches are scalar problems with quasi-momenta n +/- phi_ac/(2*pi);
    each (2N+1)-dimensional Hermitian plane-wave matrix is dense-diagonalized
    and the merged spectrum is returned in ascending order.
    """
    validate_geometry(config.ac.theta)
    n_basis = 2 * config.basis_cutoff + 1
    if n_levels < 1 or n_levels > 2 * n_basis:
        raise ValueError(
            f"n_levels must be in [1, {2 * n_basis}] for basis_cutoff="
            f"{config.basis_cutoff}, got {n_levels}"
        )

    u_ac = propagate(config.ac, config.holonomy_spec, phi_start=config.phi_origin)
    phi_ac = extract_phase(u_ac).phi_ac_principal
    delta = phi_ac / _TWO_PI

    vhat = _fourier_coefficients(config)
    m = vhat.shape[0]
    n = np.arange(-config.basis_cutoff, config.basis_cutoff + 1)
    toeplitz = vhat[(n[:, None] - n[None, :]) % m]

    levels = []
    for offset in (delta, -delta):
        h = toeplitz.copy()
        h[np.diag_indices(n_basis)] += (n + offset) ** 2
        levels.append(np.linalg.eigvalsh(h))
    energies = np.sort(np.concatenate(levels))[:n_levels]

    edge = (config.basis_cutoff - abs(delta)) ** 2
    if energies[-1] >= 0.99 * edge:
        raise BasisTooSmallError(
            f"level {n_levels} at energy {energies[-1]:.6g} lies within 1% of "
            f"the plane-wave cutoff edge {edge:.6g}; increase basis_cutoff"
        )
    return SpectrumResult(
        energies=tuple(float(e) for e in energies),
        quasi_momenta=(delta, -delta),
        potential_mean=float(vhat[0].real),
    )
