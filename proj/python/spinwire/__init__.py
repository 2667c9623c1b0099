"""Spin-chain transport: propagators, logical-qubit correlations and MQC spectra."""

from ._spinwire import (
    ChainSpec,
    Family,
    LogicalAxis,
    Model,
    SpinwireError,
    StateKind,
    __version__,
    chain_from_json,
    chain_to_json,
    dipolar_couplings,
    dq_parity_correction,
    end_autocorrelation,
    engineered_couplings,
    engineered_timing,
    entanglement_fidelity,
    homogeneous_couplings,
    implant_spacings,
    logical_correlations,
    logical_transport_engineered,
    logical_transport_homogeneous,
    mqc_analytic,
    mqc_oracle,
    normalized_time,
    perturb_couplings,
    polarization_correlation,
    propagate,
    similarity_check,
    slater_amplitude,
    spectral_decompose,
    transfer_timing,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
