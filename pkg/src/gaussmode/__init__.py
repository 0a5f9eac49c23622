"""Entanglement of pure two-mode Gaussian states.

The state is specified by the three complex quadrature coefficients of

    psi(q1, q2) = N exp(-(alpha q1^2 + beta q2^2 + 2 gamma q1 q2) / 2)

and everything else follows: covariance matrix, Simon criterion,
entanglement of formation, reduced-state spectrum, plus optical-element
transformations and a grid-based density-matrix oracle for cross-checks.
"""

from .errors import (
    GaussmodeError,
    GridTooCoarseError,
    InvalidInputError,
    KernelNotPhysicalError,
    NonFiniteError,
    NonNormalizableError,
    NonNormalizableResultError,
    NotSymmetricError,
)
from .state import (
    CovarianceMatrix,
    MarginalKernel,
    QuadratureCoefficients,
    covariance,
    marginal_kernel,
    normalization,
    random_coefficients,
    random_symmetric_coefficients,
    vacuum,
    validate,
    wavefunction,
)
from .entanglement import (
    DeterminantSet,
    EffectiveHamiltonian,
    EntanglementReport,
    SimonReport,
    SymmetricStandardForm,
    determinants,
    effective_hamiltonian,
    entanglement_of_formation,
    entropy_from_uncertainty,
    geometric_spectrum,
    heisenberg_residual,
    kernel_from_hamiltonian,
    marginal_uncertainty,
    simon_criterion,
    spectrum_ratio,
    squeezed_eof,
    symmetric_standard_form,
)
from .optics import (
    BeamSplitter,
    BogoliubovMap,
    OneModeSqueeze,
    PhaseShift,
    SqueezeParams,
    TwoModeSqueeze,
    apply_circuit,
    apply_elements,
    beamsplit_squeezed,
    bogoliubov_map,
    element_from_dict,
    element_to_dict,
    squeeze_then_onemode,
    two_mode_squeezed,
)
from .oracle import (
    GridSpec,
    NumericSpectrum,
    audit_certifiable,
    default_audit_grid,
    default_grid,
    discretize_marginal,
    eof_oracle,
    moment_audit,
    numeric_spectrum,
    verification_report,
)

__version__ = "0.1.0"

__all__ = [
    "GaussmodeError",
    "GridTooCoarseError",
    "InvalidInputError",
    "KernelNotPhysicalError",
    "NonFiniteError",
    "NonNormalizableError",
    "NonNormalizableResultError",
    "NotSymmetricError",
    "CovarianceMatrix",
    "MarginalKernel",
    "QuadratureCoefficients",
    "covariance",
    "marginal_kernel",
    "normalization",
    "random_coefficients",
    "random_symmetric_coefficients",
    "vacuum",
    "validate",
    "wavefunction",
    "DeterminantSet",
    "EffectiveHamiltonian",
    "EntanglementReport",
    "SimonReport",
    "SymmetricStandardForm",
    "determinants",
    "effective_hamiltonian",
    "entanglement_of_formation",
    "entropy_from_uncertainty",
    "geometric_spectrum",
    "heisenberg_residual",
    "kernel_from_hamiltonian",
    "marginal_uncertainty",
    "simon_criterion",
    "spectrum_ratio",
    "squeezed_eof",
    "symmetric_standard_form",
    "BeamSplitter",
    "BogoliubovMap",
    "OneModeSqueeze",
    "PhaseShift",
    "SqueezeParams",
    "TwoModeSqueeze",
    "apply_circuit",
    "apply_elements",
    "beamsplit_squeezed",
    "bogoliubov_map",
    "element_from_dict",
    "element_to_dict",
    "squeeze_then_onemode",
    "two_mode_squeezed",
    "GridSpec",
    "NumericSpectrum",
    "audit_certifiable",
    "default_audit_grid",
    "default_grid",
    "discretize_marginal",
    "eof_oracle",
    "moment_audit",
    "numeric_spectrum",
    "verification_report",
    "__version__",
]
