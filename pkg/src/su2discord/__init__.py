"""Quantum discord, classical correlations and entanglement of SU(2)-invariant
spin-j (x) spin-1/2 states, with a brute-force measurement oracle."""
from .analytic import (
    CorrelationReport,
    classical_correlations,
    correlation_report,
    discord_large_j,
    discord_zero_point,
    entanglement_of_formation,
    mutual_information,
    post_measurement_spectrum,
    post_measurement_states_direct,
    quantum_discord,
    separability_threshold,
)
from .states import SU2State, build_product_basis, build_total_basis

__version__ = "0.1.0"
