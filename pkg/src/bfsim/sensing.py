"""Availability-window scheduling and the measurement-exchange state machine.

Each window carries the same demand: for every application, an announcement
sounding phase over batches of responders, then one OFDMA reporting exchange
where every STA uploads its report in parallel on its RU.  A polling phase
and a trigger-sounding phase are executed per application as well; they use
medium time but are excluded from overhead accounting.

The per-window demand is compiled once into a flat list of atomic exchanges.
Only the uplink report PPDU may be cut short, and only by window close.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import airtime
from .airtime import FrameSizeModel, McsEntry
from .config import ConfigError, SimParams, ru_tones_per_sta


def ds(us: float) -> int:
    """Convert microseconds to the 0.1-us integer grid, exactly."""
    scaled = round(us * 10)
    if abs(scaled - us * 10) > 1e-6:
        raise ConfigError(f"duration {us} us is not on the 0.1 us grid")
    return scaled


@dataclass(frozen=True)
class SawWindow:
    index: int
    open_us: int
    close_us: int


def schedule_windows(params: SimParams) -> list[SawWindow]:
    """Windows at 0, P, 2P, ...; a trailing partial period adds none."""
    period = params.saw_period
    duration = params.saw_duration
    count = params.sim_duration_us // period
    return [SawWindow(i, i * period, i * period + duration) for i in range(count)]


class Classification(enum.Enum):
    COMPLETE = "complete"
    PARTIALLY_MISSED = "partially_missed"
    COMPLETELY_MISSED = "completely_missed"


@dataclass
class SawWindowLedger:
    """Per-window bookkeeping used to classify sensing completeness."""

    window_index: int
    required_bytes: int
    required_rounds: int
    sent_bytes: int = 0
    sounding_rounds_done: int = 0
    counted_airtime_ds: int = 0
    lost_ds: int = 0
    closed: bool = False
    complete_at_ds: int | None = None

    @property
    def demand_complete(self) -> bool:
        return (
            self.sent_bytes == self.required_bytes
            and self.sounding_rounds_done == self.required_rounds
        )


def classify_window(ledger: SawWindowLedger) -> Classification:
    if not ledger.closed:
        raise ValueError("window still open")
    if ledger.demand_complete:
        return Classification.COMPLETE
    if ledger.sent_bytes == 0 and ledger.sounding_rounds_done == 0:
        return Classification.COMPLETELY_MISSED
    return Classification.PARTIALLY_MISSED


class ExchangeKind(enum.Enum):
    POLL = "poll"
    SOUNDING = "sounding"
    TF_SOUNDING = "tf_sounding"
    REPORT = "report"


@dataclass(frozen=True)
class Segment:
    """One contiguous piece of an exchange: a frame or an interframe gap."""

    label: str
    dur_ds: int
    counted: bool
    is_gap: bool = False


@dataclass(frozen=True)
class Exchange:
    """Atomic medium occupation; never split across a TxOP boundary."""

    kind: ExchangeKind
    app: int
    segments: tuple[Segment, ...]
    rounds: int = 0
    # Report-only fields, used for symbol-granular truncation at window close.
    report_symbols: int = 0
    report_bits_per_symbol: int = 0
    report_bytes: int = 0

    @property
    def duration_ds(self) -> int:
        return sum(s.dur_ds for s in self.segments)

    @property
    def counted_ds(self) -> int:
        return sum(s.dur_ds for s in self.segments if s.counted)


def sounding_batches(n_sta: int, per_round: int) -> list[int]:
    batches = []
    left = n_sta
    while left > 0:
        batches.append(min(per_round, left))
        left -= per_round
    return batches


@dataclass(frozen=True)
class SensingDemand:
    """Compiled per-window workload plus its bookkeeping totals."""

    exchanges: tuple[Exchange, ...]
    required_bytes: int
    required_rounds: int
    report_bytes_per_sta: int

    @classmethod
    def build(cls, params: SimParams, model: FrameSizeModel) -> "SensingDemand":
        mcs = airtime.mcs_entry(params.mcs_index)
        sifs = ds(params.units.sifs_us)
        report_bytes = airtime.csi_size_bytes(
            params.stra.tx, params.stra.rx, params.n_b, params.n_sc
        )
        ru = ru_tones_per_sta(params.n_sta)
        n_ss = model.report_spatial_streams
        syms = airtime.report_symbols(report_bytes, ru, mcs, n_ss)
        bps = airtime.bits_per_symbol(ru, mcs, n_ss)
        batches = sounding_batches(params.n_sta, params.stas_per_round)

        poll_air = ds(airtime.control_frame_airtime_us(model.poll_trigger_bytes, model))
        resp_air = ds(airtime.control_frame_airtime_us(model.poll_response_bytes, model))
        tf_air = ds(airtime.control_frame_airtime_us(model.tf_trigger_bytes, model))
        ul_ndp = ds(model.tf_ndp_us)
        rtrig_air = ds(airtime.control_frame_airtime_us(model.report_trigger_bytes, model))
        rep_preamble = ds(model.report_preamble_us)
        sym_ds = ds(model.symbol_duration_us)

        exchanges: list[Exchange] = []
        for app in range(params.num_app):
            exchanges.append(
                Exchange(
                    ExchangeKind.POLL,
                    app,
                    (
                        Segment("poll_trigger", poll_air, False),
                        Segment("sifs", sifs, False, is_gap=True),
                        Segment("poll_response", resp_air, False),
                    ),
                )
            )
            sound_segs = []
            for batch in batches:
                streams = min(batch * params.stra.tx, params.ap_antennas)
                sound_segs.append(
                    Segment("ndpa", ds(airtime.ndpa_airtime_us(batch, model)), True)
                )
                sound_segs.append(
                    Segment("ndp", ds(airtime.ndp_airtime_us(streams, model)), True)
                )
            exchanges.append(
                Exchange(ExchangeKind.SOUNDING, app, tuple(sound_segs), rounds=len(batches))
            )
            exchanges.append(
                Exchange(
                    ExchangeKind.TF_SOUNDING,
                    app,
                    (
                        Segment("tf_trigger", tf_air, False),
                        Segment("sifs", sifs, False, is_gap=True),
                        Segment("ul_ndp", ul_ndp, False),
                    ),
                )
            )
            exchanges.append(
                Exchange(
                    ExchangeKind.REPORT,
                    app,
                    (
                        Segment("report_trigger", rtrig_air, True),
                        Segment("sifs", sifs, False, is_gap=True),
                        Segment("report_ppdu", rep_preamble + syms * sym_ds, True),
                    ),
                    report_symbols=syms,
                    report_bits_per_symbol=bps,
                    report_bytes=report_bytes,
                )
            )
        return cls(
            exchanges=tuple(exchanges),
            required_bytes=params.num_app * params.n_sta * report_bytes,
            required_rounds=params.num_app * len(batches),
            report_bytes_per_sta=report_bytes,
        )


def send_partial_report(
    remaining_us: float,
    full_report_bytes: int,
    ru_tones: int,
    mcs: McsEntry,
    n_ss: int,
    model: FrameSizeModel,
) -> int:
    """Largest per-STA byte count whose report airtime fits in remaining_us."""
    if remaining_us < 0:
        raise ConfigError("remaining_us must be >= 0")
    full = airtime.report_airtime_us(full_report_bytes, ru_tones, mcs, n_ss, model)
    if remaining_us >= full:
        raise ConfigError("remaining time covers the full report; send it whole")
    budget = ds(remaining_us) - ds(model.report_preamble_us)
    if budget <= 0:
        return 0
    syms = budget // ds(model.symbol_duration_us)
    bytes_fit = syms * airtime.bits_per_symbol(ru_tones, mcs, n_ss) // 8
    return min(bytes_fit, full_report_bytes)
