"""Exact SU(2) arithmetic on unit quaternions.

An element U = a0*I - i*(a . sigma) is stored as the unit quaternion
(a0, a): composition is the Hamilton product, exponentials of traceless
Hermitian generators are closed-form, and unitarity is maintained by cheap
renormalization instead of matrix orthogonalization. A complex 2x2 matrix
view exists for tests and serialization only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Renormalize whenever the squared quaternion norm drifts further than this
# from 1; long products are additionally renormalized on a fixed cadence by
# the propagation loops.
NORM_DRIFT_TOLERANCE = 1e-14


@dataclass(frozen=True)
class SU2Element:
    """U = a0*I - i*(a . sigma) with a0^2 + |a|^2 = 1."""

    a0: float
    a: tuple[float, float, float]

    def norm_squared(self) -> float:
        ax, ay, az = self.a
        return self.a0 * self.a0 + ax * ax + ay * ay + az * az


@dataclass(frozen=True)
class Generator3:
    """Traceless Hermitian generator g . sigma, stored as the real 3-vector g."""

    g: tuple[float, float, float]

    def __post_init__(self) -> None:
        if not all(math.isfinite(c) for c in self.g):
            raise ValueError(f"generator components must be finite, got {self.g}")


def su2_identity() -> SU2Element:
    """Identity element (a0=1, a=0)."""
    return SU2Element(1.0, (0.0, 0.0, 0.0))


def su2_exp(gen: Generator3, angle_scale: float) -> SU2Element:
    """exp(-i * angle_scale * (g . sigma)) for a real 3-vector g.

    Closed form: a0 = cos(angle_scale*|g|), a = sin(angle_scale*|g|) * g/|g|.
    The zero generator maps to the identity for any angle_scale.
    """
    if not math.isfinite(angle_scale):
        raise ValueError(f"angle_scale must be finite, got {angle_scale}")
    gx, gy, gz = gen.g
    norm = math.sqrt(gx * gx + gy * gy + gz * gz)
    if norm == 0.0:
        return su2_identity()
    angle = angle_scale * norm
    s = math.sin(angle) / norm
    return SU2Element(math.cos(angle), (s * gx, s * gy, s * gz))


def compose(u: SU2Element, v: SU2Element) -> SU2Element:
    """Quaternion (Hamilton) product representing the matrix product U*V."""
    u0, (ux, uy, uz) = u.a0, u.a
    v0, (vx, vy, vz) = v.a0, v.a
    w0 = u0 * v0 - ux * vx - uy * vy - uz * vz
    wx = u0 * vx + v0 * ux + uy * vz - uz * vy
    wy = u0 * vy + v0 * uy + uz * vx - ux * vz
    wz = u0 * vz + v0 * uz + ux * vy - uy * vx
    n2 = w0 * w0 + wx * wx + wy * wy + wz * wz
    if abs(n2 - 1.0) > NORM_DRIFT_TOLERANCE:
        inv = 1.0 / math.sqrt(n2)
        return SU2Element(w0 * inv, (wx * inv, wy * inv, wz * inv))
    return SU2Element(w0, (wx, wy, wz))


def inverse(u: SU2Element) -> SU2Element:
    """U^-1 = U^dagger, the quaternion conjugate."""
    ax, ay, az = u.a
    return SU2Element(u.a0, (-ax, -ay, -az))


def trace_real(u: SU2Element) -> float:
    """Tr U = 2*a0; purely real in this representation."""
    return 2.0 * u.a0


def axis_decompose(u: SU2Element) -> tuple[float, tuple[float, float, float]]:
    """Return (cos_phi, sin_phi * b_hat) = (a0, a).

    The rotation axis is a/|a| when |a| is above the caller's degeneracy
    threshold; at sin_phi = 0 the vector part is (0,0,0) and no axis exists.
    """
    return u.a0, u.a


def to_matrix(u: SU2Element) -> np.ndarray:
    """Complex 2x2 matrix view [[a0 - i*az, -ay - i*ax], [ay - i*ax, a0 + i*az]]."""
    a0, (ax, ay, az) = u.a0, u.a
    return np.array(
        [
            [a0 - 1j * az, -ay - 1j * ax],
            [ay - 1j * ax, a0 + 1j * az],
        ],
        dtype=complex,
    )


def frobenius_distance(u: SU2Element, v: SU2Element) -> float:
    """Frobenius distance between the 2x2 matrix views.

    The quaternion-to-matrix map is linear and satisfies
    ||U||_F^2 = 2*(a0^2 + |a|^2), so the distance is sqrt(2) times the
    Euclidean distance of the two 4-vectors.
    """
    d0 = u.a0 - v.a0
    dx = u.a[0] - v.a[0]
    dy = u.a[1] - v.a[1]
    dz = u.a[2] - v.a[2]
    return math.sqrt(2.0 * (d0 * d0 + dx * dx + dy * dy + dz * dz))
