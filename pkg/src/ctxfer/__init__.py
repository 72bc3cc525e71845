"""Simulation and verification toolkit for a five-context three-path interferometer."""

from .contextuality import (
    ContextualityReport,
    ScanResult,
    noncontextual_margin,
    scan_violation,
    symmetric_reflectivity,
)
from .errors import (
    BadTrace,
    ContextSumViolation,
    CouplingTooLarge,
    CtxferError,
    DegenerateKernel,
    DegenerateReflectivity,
    ImpossiblePostselection,
    NonOrthogonalInputs,
    NotHermitian,
    NotPositive,
    ZeroNorm,
)
from .hilbert import basis, inner, maximally_mixed, pure_density, random_density, validate_density
from .interferometer import (
    CONTEXTS,
    INNER_PATHS,
    OUTER_PATHS,
    PATHS,
    InterferometerConfig,
    Network,
    beamsplitter_pair,
    build_network,
    closure_residual,
    contexts,
    derive_reflectivities,
    network,
    path_vector,
)
from .measurement import mark_path, probe_extrapolate, sample_context, weak_probe
from .states import make_nf, nf_closed_forms, nf_density, parse_state, path_probability, probability_table
from .weak import (
    coherence_coefficient,
    continuity_residuals,
    current_difference_coefficients,
    dcont_check,
    kd_element,
    kd_reconstruction_residual,
    weak_report,
    weak_value,
)

__version__ = "0.1.0"
