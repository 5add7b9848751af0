"""Trigger-based WLAN sensing / saturated EDCA coexistence simulator."""

from .airtime import (
    FrameSizeModel,
    McsEntry,
    csi_size_bytes,
    frame_airtime_us,
    mcs_entry,
    ndp_airtime_us,
    ndpa_airtime_us,
    ofdma_rate_bps,
    report_airtime_us,
)
from .cli import ResultRow, SweepSpec, run_single, run_sweep
from .config import (
    AccessMethod,
    ConfigError,
    SensingAntennaConfig,
    SimParams,
    TimeUnits,
    ru_tones_per_sta,
    saw_duration_us,
    saw_period_us,
    stas_per_sounding_round,
)
from .engine import Event, EventKind, RunResult, Simulation, run_sme
from .metrics import MetricsAccumulator, RunMetrics, pawd, psm, pso, throughput
from .sensing import (
    Classification,
    SawWindow,
    SawWindowLedger,
    SensingDemand,
    classify_window,
    schedule_windows,
    send_partial_report,
)
from .traffic import DataBurst, fill_data_txop

__all__ = [
    "AccessMethod",
    "Classification",
    "ConfigError",
    "DataBurst",
    "Event",
    "EventKind",
    "FrameSizeModel",
    "McsEntry",
    "MetricsAccumulator",
    "ResultRow",
    "RunMetrics",
    "RunResult",
    "SawWindow",
    "SawWindowLedger",
    "SensingAntennaConfig",
    "SensingDemand",
    "SimParams",
    "Simulation",
    "SweepSpec",
    "TimeUnits",
    "classify_window",
    "csi_size_bytes",
    "fill_data_txop",
    "frame_airtime_us",
    "mcs_entry",
    "ndp_airtime_us",
    "ndpa_airtime_us",
    "ofdma_rate_bps",
    "pawd",
    "psm",
    "pso",
    "report_airtime_us",
    "ru_tones_per_sta",
    "run_single",
    "run_sme",
    "run_sweep",
    "saw_duration_us",
    "saw_period_us",
    "schedule_windows",
    "send_partial_report",
    "stas_per_sounding_round",
    "throughput",
]
