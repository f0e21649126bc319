"""Holonomy of a spin-1/2 particle on a ring threaded by a tilted line charge.

The library integrates the path-ordered SU(2) exponential of the induced
vector potential around the ring, extracts the acquired phase and rotation
axis with branch continuation along parameter sweeps, and solves the ring's
bound-state spectrum under the resulting twisted boundary condition.
"""

__version__ = "0.1.0"

from .errors import (
    ACRingError,
    BasisTooSmallError,
    ContinuationError,
    NumericsError,
    SingularGeometryError,
)
from .fields import (
    ACConfig,
    CylindricalVec3,
    electric_field,
    field_invariants,
    potential_from_field,
    vector_potential,
)
from .holonomy import (
    HolonomyTrace,
    IntegratorSpec,
    convergence_report,
    oracle_spec,
    propagate,
    propagate_trace,
)
from .phase import (
    ACPhaseResult,
    SweepResult,
    continue_branch,
    extract_phase,
    path_dependence_witness,
    sweep_lambda,
    theta0_analytic,
)
from .spectrum import SpectrumConfig, SpectrumResult, scalar_potential, solve_spectrum
from .su2 import (
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

__all__ = [
    "__version__",
    "ACRingError",
    "BasisTooSmallError",
    "ContinuationError",
    "NumericsError",
    "SingularGeometryError",
    "ACConfig",
    "CylindricalVec3",
    "electric_field",
    "field_invariants",
    "potential_from_field",
    "vector_potential",
    "HolonomyTrace",
    "IntegratorSpec",
    "convergence_report",
    "oracle_spec",
    "propagate",
    "propagate_trace",
    "ACPhaseResult",
    "SweepResult",
    "continue_branch",
    "extract_phase",
    "path_dependence_witness",
    "sweep_lambda",
    "theta0_analytic",
    "SpectrumConfig",
    "SpectrumResult",
    "scalar_potential",
    "solve_spectrum",
    "Generator3",
    "SU2Element",
    "axis_decompose",
    "compose",
    "frobenius_distance",
    "inverse",
    "su2_exp",
    "su2_identity",
    "to_matrix",
    "trace_real",
]
