"""Phase and axis extraction from the ring holonomy, with branch continuation.

The principal phase is arccos(half the trace), in [0, pi]; along a parameter
sweep the physical phase is the continuous selection from the candidate set
{+/-principal + 2*pi*n}, scanned from a point where the phase is known to be
zero. The axially-symmetric (theta = 0) closed form is also provided: the
phase is linear in the charge ratio and its cosine-compatible continuation is
a triangle wave of period 2 with peak 2*pi at odd integer ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ContinuationError
from .fields import ACConfig
from .holonomy import IntegratorSpec, propagate
from .su2 import SU2Element, Generator3, axis_decompose, su2_exp

# |sin(phase)| below which the rotation axis is numerically meaningless and
# reported as the zero vector.
AXIS_DEGENERACY_THRESHOLD = 1e-9

# Consecutive principal values along a sweep must differ by less than this,
# or the branch choice is ambiguous and the sweep must be refined.
_MAX_PRINCIPAL_JUMP = 0.5 * math.pi

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ACPhaseResult:
    """Extracted phase, rotation axis, and the raw holonomy behind them."""

    phi_ac_principal: float
    cos_phi: float
    axis: tuple[float, float, float]
    holonomy: SU2Element
    phi_ac_continued: float | None = None


@dataclass(frozen=True)
class SweepResult:
    """Branch-continued phases along a monotone 1-D parameter sweep."""

    parameter_name: str
    points: tuple[tuple[float, ACPhaseResult], ...]


def extract_phase(u: SU2Element) -> ACPhaseResult:
    """Principal phase and axis of U = exp(-i*phi*(b . sigma)).

    cos_phi is half the (real) trace, clamped to [-1, 1]. The principal
    value arccos(cos_phi) is evaluated as atan2(|a|, a0), which is the same
    angle but stays fully conditioned where the cosine approaches +/-1 (a
    direct arccos loses half the significant digits there). The axis is the
    normalized vector part, or the zero vector when sin(phi) is degenerate.
    """
    cos_phi_raw, a = axis_decompose(u)
    cos_phi = min(1.0, max(-1.0, cos_phi_raw))
    norm = math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])
    if norm > AXIS_DEGENERACY_THRESHOLD:
        axis = (a[0] / norm, a[1] / norm, a[2] / norm)
    else:
        axis = (0.0, 0.0, 0.0)
    return ACPhaseResult(
        phi_ac_principal=math.atan2(norm, cos_phi_raw),
        cos_phi=cos_phi,
        axis=axis,
        holonomy=u,
    )


def continue_branch(
    sweep: list[tuple[float, ACPhaseResult]],
    parameter_name: str = "lambda_ratio",
) -> SweepResult:
    """Continue the phase branch along a strictly increasing parameter sweep.

    Of the branch candidates {+/-principal + 2*pi*n} exactly two lie in
    [0, 2*pi]: the principal value p and its mirror 2*pi - p. Each point
    takes the one nearest a linear extrapolation of the two preceding
    continued values (the first point takes the candidate nearest zero, so
    sweeps must start where the phase is unambiguous). The extrapolation,
    rather than plain nearest-to-previous, is what disambiguates the points
    where the cosine touches +/-1 exactly: the curve passes straight through
    odd multiples of pi and reflects at 0 and 2*pi, reproducing the
    triangle-wave closed form in the axially symmetric case.

    Consecutive principal values must stay within pi/2 of each other;
    otherwise the branch choice is ambiguous and the sweep must be refined.
    """
    if not sweep:
        raise ValueError("sweep must be non-empty")
    params = [p for p, _ in sweep]
    if any(b <= a for a, b in zip(params, params[1:])):
        raise ContinuationError("sweep parameters must be strictly increasing")

    continued_points: list[tuple[float, ACPhaseResult]] = []
    previous_principal = None
    for i, (param, result) in enumerate(sweep):
        principal = result.phi_ac_principal
        if previous_principal is not None and abs(principal - previous_principal) >= _MAX_PRINCIPAL_JUMP:
            raise ContinuationError(
                f"principal phase jumped by {abs(principal - previous_principal):.3f} rad "
                f"at parameter {param!r}; refine sweep"
            )
        if i == 0:
            target = 0.0
        elif i == 1:
            target = continued_points[0][1].phi_ac_continued
        else:
            (x1, r1), (x2, r2) = continued_points[-2], continued_points[-1]
            y1, y2 = r1.phi_ac_continued, r2.phi_ac_continued
            target = y2 + (y2 - y1) * (param - x2) / (x2 - x1)
        mirror = _TWO_PI - principal
        value = principal if abs(principal - target) <= abs(mirror - target) else mirror
        continued_points.append((param, replace(result, phi_ac_continued=value)))
        previous_principal = principal
    return SweepResult(parameter_name, tuple(continued_points))


def theta0_analytic(lambda_ratio: float) -> tuple[SU2Element, float]:
    """Closed form for the untilted line charge: exact holonomy and phase.

    The holonomy is a z-axis rotation by 2*pi*lambda_ratio; the continued
    phase folds into a triangle wave of period 2 peaking at 2*pi.
    """
    u = su2_exp(Generator3((0.0, 0.0, 1.0)), _TWO_PI * lambda_ratio)
    x = math.fmod(lambda_ratio, 2.0)
    if x < 0.0:
        x += 2.0
    phi_ac = _TWO_PI * x if x < 1.0 else _TWO_PI * (2.0 - x)
    return u, phi_ac


def _default_witness_points(lambda_ratio: float) -> int:
    return max(33, int(math.ceil(abs(lambda_ratio) / 0.01)) + 1)


def sweep_lambda(
    lambdas: list[float],
    theta: float,
    spec: IntegratorSpec | None = None,
) -> SweepResult:
    """Propagate, extract, and branch-continue over a charge-ratio sweep."""
    spec = spec or IntegratorSpec()
    points = [
        (lr, extract_phase(propagate(ACConfig(lr, theta), spec))) for lr in lambdas
    ]
    return continue_branch(points, parameter_name="lambda_ratio")


def path_dependence_witness(
    lambda_ratio: float,
    thetas: list[float],
    spec: IntegratorSpec | None = None,
    sweep_points: int | None = None,
) -> float:
    """Spread of the continued phase across tilt angles at a fixed charge ratio.

    For each theta the phase is continued along an internal sweep from a
    vanishing charge ratio up to ``lambda_ratio``; the witness is the largest
    deviation from the untilted value. A strictly positive witness certifies
    that the phase depends on the path geometry.
    """
    if not thetas:
        raise ValueError("thetas must be non-empty")
    if not any(t == 0.0 for t in thetas):
        raise ValueError("thetas must include 0")
    if lambda_ratio == 0.0:
        return 0.0
    n = sweep_points or _default_witness_points(lambda_ratio)
    lambdas = [lambda_ratio * k / (n - 1) for k in range(n)]
    final_phase = {}
    for theta in thetas:
        result = sweep_lambda(lambdas, theta, spec)
        final_phase[theta] = result.points[-1][1].phi_ac_continued
    base = final_phase[0.0]
    return max(abs(final_phase[t] - base) for t in thetas)
