"""Correlations of a two-mode squeezed state with one photon sent through the
Earth's Kerr space-time to a satellite. All entropies are in nats."""

from ._gravdiscord import (
    AxisRange,
    Baseline,
    ChannelOverlap,
    CorrelationReport,
    Error,
    KerrBody,
    OverlapMode,
    RunConfig,
    ShiftBreakdown,
    ShiftMode,
    StandardForm,
    SweepAxis,
    SweepRow,
    WavePacketSpec,
    analyze,
    change_rate,
    classical_correlation,
    compensation_height,
    default_range,
    emit_csv,
    format_csv,
    format_plot_script,
    frequency_ratio,
    lossy_covariance,
    lossy_standard_form,
    mutual_information,
    overlap,
    overlap_quadrature,
    quantum_discord,
    renyi2_entropy,
    run_point,
    shift,
    shift_terms,
    standard_form_params,
    sweep,
    symplectic_spectrum,
    tmss_covariance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
