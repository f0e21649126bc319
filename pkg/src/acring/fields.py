"""Closed-form electric field and induced vector potential on the ring.

A line of charge tilted by theta from the z-axis threads a unit-strength
circular path; everything is dimensionless (the charge density enters only
as the ratio lambda/lambda0, and no radius appears anywhere in this module).
Components are expressed along the local cylindrical frame (e_r, e_phi, e_z)
at ring angle phi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SingularGeometryError

# Below this the field denominator is treated as an exact geometric
# singularity (line of charge passing through the ring path).
_DENOMINATOR_FLOOR = 1e-30

# Engine-level guard: integration and spectra reject tilts this close to an
# odd multiple of pi/2, where the denominator vanishes at phi = 0, pi.
_THETA_SINGULAR_MARGIN = 1e-9


@dataclass(frozen=True)
class ACConfig:
    """Physical configuration: charge-density ratio and tilt angle (radians)."""

    lambda_ratio: float
    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.lambda_ratio):
            raise ValueError(f"lambda_ratio must be finite, got {self.lambda_ratio}")
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta}")


@dataclass(frozen=True)
class CylindricalVec3:
    """Vector components along (e_r, e_phi, e_z) at a ring point."""

    e_r: float
    e_phi: float
    e_z: float

    def to_cartesian(self, phi: float) -> tuple[float, float, float]:
        """Rotate the local frame at angle phi into fixed Cartesian axes."""
        c, s = math.cos(phi), math.sin(phi)
        return (
            self.e_r * c - self.e_phi * s,
            self.e_r * s + self.e_phi * c,
            self.e_z,
        )


def _denominator(phi: float, theta: float) -> float:
    c_theta = math.cos(theta)
    c_phi = math.cos(phi)
    s_phi = math.sin(phi)
    d = c_theta * c_theta * c_phi * c_phi + s_phi * s_phi
    if d <= _DENOMINATOR_FLOOR:
        raise SingularGeometryError(
            f"line of charge intersects the ring at phi={phi!r}, theta={theta!r}"
        )
    return d


def validate_geometry(theta: float) -> None:
    """Reject tilts at which the line of charge lies in the ring plane.

    The field denominator vanishes at phi in {0, pi} exactly when theta is an
    odd multiple of pi/2; paths through such geometry cannot be integrated.
    """
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")
    if abs(math.cos(theta)) < _THETA_SINGULAR_MARGIN:
        raise SingularGeometryError(
            f"theta={theta!r} places the line of charge in the ring plane"
        )


def electric_field(phi: float, theta: float) -> CylindricalVec3:
    """Dimensionless electric field of the tilted line charge at ring angle phi.

    (2, sin^2(theta) sin(2 phi) / D, -sin(2 theta) cos(phi) / D) with
    D = cos^2(theta) cos^2(phi) + sin^2(phi).
    """
    d = _denominator(phi, theta)
    s_theta = math.sin(theta)
    return CylindricalVec3(
        2.0,
        s_theta * s_theta * math.sin(2.0 * phi) / d,
        -math.sin(2.0 * theta) * math.cos(phi) / d,
    )


def vector_potential(phi: float, theta: float, lambda_ratio: float) -> CylindricalVec3:
    """Dimensionless vector potential induced by the line charge.

    (lambda_ratio) * (sin(2 theta) cos(phi) / (2 D), 0, 1); the azimuthal
    component vanishes identically.
    """
    d = _denominator(phi, theta)
    return CylindricalVec3(
        lambda_ratio * 0.5 * math.sin(2.0 * theta) * math.cos(phi) / d,
        0.0,
        lambda_ratio,
    )


def potential_from_field(field: CylindricalVec3, lambda_ratio: float) -> CylindricalVec3:
    """(lambda_ratio / 2) * (E x e_phi) in cylindrical components.

    Uses e_r x e_phi = e_z, e_z x e_phi = -e_r, e_phi x e_phi = 0; this is the
    cross-product route to the same potential as :func:`vector_potential`.
    """
    half = 0.5 * lambda_ratio
    return CylindricalVec3(-half * field.e_z, 0.0, half * field.e_r)


def field_invariants(phi: float, theta: float) -> tuple[float, float]:
    """(|E|^2, E_phi^2), the scalars entering the ring Hamiltonian potential."""
    f = electric_field(phi, theta)
    e_phi_sq = f.e_phi * f.e_phi
    e_sq = f.e_r * f.e_r + e_phi_sq + f.e_z * f.e_z
    return e_sq, e_phi_sq
