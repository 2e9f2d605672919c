"""Truncated Fock-space simulation of conditional quantum teleportation.

Two cascaded optical squeezers plus photon counting teleport a single-mode
state up to a photon-number shift; this package computes the conditional
states, event probabilities, fidelities, and success-probability summaries,
and benchmarks them against the quadrature-measurement teleportation scheme
simulated in the same truncated space.
"""

from .analysis import (
    ConvergenceReport,
    GridCellQuantity,
    OutcomeGrid,
    ProfilePointQuantity,
    SuccessProbabilityQuantity,
    all_outcomes,
    conditional_success,
    convergence_check,
    diagonal_only,
    diagonal_sweep,
    grid_csv_rows,
    grid_to_json_dict,
    relative_magnitude_variation,
    sweep_grid,
)
from .errors import (
    CondTeleportError,
    ConvergenceError,
    DimensionTooLargeError,
    ImpossibleOutcomeError,
    PrecisionLossError,
    TruncationOverflowError,
    ZeroDensityError,
    ZeroStateError,
)
from .fock import (
    DEFAULT_CUTOFF,
    FockVector,
    basis_state,
    fidelity,
    inner_product,
    lower_shift,
    make_state,
    normalize,
    pad_to_cutoff,
    raise_shift,
)
from .protocol import (
    MeasurementOutcome,
    TeleportResult,
    conditional_state,
    teleport_event,
)
from .quadrature import (
    BKConfig,
    QuadratureOutcome,
    bk_conditional,
    bk_pu,
    bk_sweep,
    bk_total_probability,
    displacement_element,
    hermite_basis,
    hermite_wavefunction,
    resource_amplitudes,
)
from .squeeze import (
    SqueezeParams,
    coeff_profile,
    matrix_element,
    oracle_expm,
    pair_index,
    s_coeff,
)

__version__ = "0.1.0"

__all__ = [
    "BKConfig",
    "CondTeleportError",
    "ConvergenceError",
    "ConvergenceReport",
    "DEFAULT_CUTOFF",
    "DimensionTooLargeError",
    "FockVector",
    "GridCellQuantity",
    "ImpossibleOutcomeError",
    "MeasurementOutcome",
    "OutcomeGrid",
    "PrecisionLossError",
    "ProfilePointQuantity",
    "QuadratureOutcome",
    "SqueezeParams",
    "SuccessProbabilityQuantity",
    "TeleportResult",
    "TruncationOverflowError",
    "ZeroDensityError",
    "ZeroStateError",
    "all_outcomes",
    "basis_state",
    "bk_conditional",
    "bk_pu",
    "bk_sweep",
    "bk_total_probability",
    "coeff_profile",
    "conditional_state",
    "conditional_success",
    "convergence_check",
    "diagonal_only",
    "diagonal_sweep",
    "displacement_element",
    "fidelity",
    "grid_csv_rows",
    "grid_to_json_dict",
    "hermite_basis",
    "hermite_wavefunction",
    "inner_product",
    "lower_shift",
    "make_state",
    "matrix_element",
    "normalize",
    "oracle_expm",
    "pad_to_cutoff",
    "pair_index",
    "raise_shift",
    "relative_magnitude_variation",
    "resource_amplitudes",
    "s_coeff",
    "sweep_grid",
    "teleport_event",
]
