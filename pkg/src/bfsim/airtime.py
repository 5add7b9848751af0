"""Frame sizes and on-air durations.

Two PPDU families are modeled.  Control frames (announcements, triggers,
acks) ride legacy OFDM: a configurable rate with 4-us symbols.  Everything
else (data bursts, uplink reports) uses the wide-band symbol clock of
symbol_duration_us with per-RU data-subcarrier counts.

The default frame-size values are calibrated so that the reporting phase
dominates sensing airtime; sounding frames are kept near-free.  Every value
is a plain config field, so alternates can be swept without code changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import ConfigError

# Data subcarriers per RU size (tones -> N_sd).
RU_DATA_SUBCARRIERS = {26: 24, 52: 48, 106: 102, 242: 234, 484: 468, 996: 980}

# Long-training-field count for a given number of sounded spatial streams.
_LTF_COUNT = {1: 1, 2: 2, 3: 4, 4: 4, 5: 6, 6: 6, 7: 8, 8: 8}


@dataclass(frozen=True)
class McsEntry:
    index: int
    bits_per_subcarrier: int
    coding_num: int
    coding_den: int

    @property
    def coding_rate(self) -> float:
        return self.coding_num / self.coding_den


MCS_TABLE = (
    McsEntry(0, 1, 1, 2),
    McsEntry(1, 2, 1, 2),
    McsEntry(2, 2, 3, 4),
    McsEntry(3, 4, 1, 2),
    McsEntry(4, 4, 3, 4),
    McsEntry(5, 6, 2, 3),
    McsEntry(6, 6, 3, 4),
    McsEntry(7, 6, 5, 6),
    McsEntry(8, 8, 3, 4),
    McsEntry(9, 8, 5, 6),
    McsEntry(10, 10, 3, 4),
    McsEntry(11, 10, 5, 6),
)


def mcs_entry(index: int) -> McsEntry:
    if not 0 <= index <= 11:
        raise ConfigError(f"MCS index must be in 0..11, got {index}")
    return MCS_TABLE[index]


def n_ltf(streams: int) -> int:
    if streams < 1:
        raise ConfigError(f"stream count must be >= 1, got {streams}")
    return _LTF_COUNT[min(streams, 8)]


@dataclass(frozen=True)
class FrameSizeModel:
    """Byte counts and preamble durations for every frame the model emits."""

    ndpa_base_bytes: int = 21
    ndpa_per_sta_info_bytes: int = 1
    control_rate_mbps: int = 54
    control_symbol_us: float = 4.0
    control_preamble_us: float = 0.0
    legacy_preamble_us: float = 0.0
    he_preamble_base_us: float = 0.0
    he_ltf_us_per_stream: float = 0.1
    symbol_duration_us: float = 13.6
    # Reporting phase: uplink PPDU preamble and stream count per responder.
    report_preamble_us: float = 55.0
    report_spatial_streams: int = 1
    report_trigger_bytes: int = 21
    # Polling and trigger-sounding phases occupy the window but are excluded
    # from overhead accounting.
    poll_trigger_bytes: int = 21
    poll_response_bytes: int = 14
    tf_trigger_bytes: int = 21
    tf_ndp_us: float = 39.0
    # Data plane.
    data_preamble_us: float = 44.0
    block_ack_bytes: int = 32

    def __post_init__(self) -> None:
        for name in (
            "ndpa_base_bytes",
            "ndpa_per_sta_info_bytes",
            "control_rate_mbps",
            "control_symbol_us",
            "symbol_duration_us",
            "report_spatial_streams",
            "report_trigger_bytes",
            "poll_trigger_bytes",
            "poll_response_bytes",
            "tf_trigger_bytes",
            "block_ack_bytes",
        ):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be strictly positive")
        bits = Fraction(self.control_rate_mbps) * Fraction(self.control_symbol_us)
        if bits.denominator != 1:
            raise ConfigError("control rate times control symbol must be a whole bit count")

    @property
    def control_bits_per_symbol(self) -> int:
        return int(self.control_rate_mbps * self.control_symbol_us)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def csi_size_bytes(n_tx: int, n_rx: int, n_b: int, n_sc: int) -> int:
    """Bytes in one channel-state report.

    ceil(1.5 * n_tx * n_rx) + (n_tx * n_rx * n_b * n_sc) / 4 + 2 * n_rx,
    with the middle term rounded up to a whole byte.
    """
    if min(n_tx, n_rx, n_b, n_sc) < 1:
        raise ConfigError("csi_size_bytes arguments must all be >= 1")
    return _ceil_div(3 * n_tx * n_rx, 2) + _ceil_div(n_tx * n_rx * n_b * n_sc, 4) + 2 * n_rx


def bits_per_symbol(ru_tones: int, mcs: McsEntry, n_ss: int) -> int:
    """Bits carried per OFDM symbol on one RU; exact integer."""
    if ru_tones not in RU_DATA_SUBCARRIERS:
        raise ConfigError(f"unknown RU size {ru_tones}")
    if n_ss < 1:
        raise ConfigError("n_ss must be >= 1")
    n_sd = RU_DATA_SUBCARRIERS[ru_tones]
    bits = Fraction(n_sd * mcs.bits_per_subcarrier * n_ss * mcs.coding_num, mcs.coding_den)
    assert bits.denominator == 1, "non-integer bits per symbol"
    return int(bits)


def ofdma_rate_bps(ru_tones: int, mcs: McsEntry, n_ss: int, symbol_us: float = 13.6) -> float:
    """Payload rate of one RU in bits per second."""
    return bits_per_symbol(ru_tones, mcs, n_ss) / (symbol_us * 1e-6)


def frame_airtime_us(
    payload_bytes: int,
    rate_bps: float,
    preamble_us: float,
    symbol_us: float = 4.0,
) -> float:
    """Preamble plus payload time, rounded up to a symbol boundary."""
    if rate_bps <= 0:
        raise ConfigError("rate_bps must be positive")
    if payload_bytes < 0:
        raise ConfigError("payload_bytes must be >= 0")
    if payload_bytes == 0:
        return preamble_us
    bits_per_sym = rate_bps * symbol_us * 1e-6
    symbols = _ceil_div(payload_bytes * 8 * 10**9, round(bits_per_sym * 10**9))
    return preamble_us + symbols * symbol_us


def control_frame_airtime_us(payload_bytes: int, model: FrameSizeModel) -> float:
    return frame_airtime_us(
        payload_bytes,
        model.control_rate_mbps * 1e6,
        model.control_preamble_us,
        model.control_symbol_us,
    )


def ndpa_airtime_us(stas_in_round: int, model: FrameSizeModel) -> float:
    """Announcement frame carrying one info field per addressed responder."""
    if stas_in_round < 1:
        raise ConfigError("stas_in_round must be >= 1")
    size = model.ndpa_base_bytes + stas_in_round * model.ndpa_per_sta_info_bytes
    return control_frame_airtime_us(size, model)


def ndp_airtime_us(total_streams: int, model: FrameSizeModel) -> float:
    """Sounding packet: preamble and training fields only, no data portion."""
    return (
        model.legacy_preamble_us
        + model.he_preamble_base_us
        + n_ltf(total_streams) * model.he_ltf_us_per_stream
    )


def report_symbols(report_bytes: int, ru_tones: int, mcs: McsEntry, n_ss: int) -> int:
    if report_bytes < 0:
        raise ConfigError("report_bytes must be >= 0")
    if report_bytes == 0:
        return 0
    return _ceil_div(report_bytes * 8, bits_per_symbol(ru_tones, mcs, n_ss))


def report_airtime_us(
    report_bytes: int,
    ru_tones: int,
    mcs: McsEntry,
    n_ss: int,
    model: FrameSizeModel,
) -> float:
    """Airtime of one uplink report PPDU on its RU.

    Equal-size reports sent in parallel on equal RUs finish together, so this
    is also the medium time of the whole reporting exchange's PPDU.
    """
    syms = report_symbols(report_bytes, ru_tones, mcs, n_ss)
    return model.report_preamble_us + syms * model.symbol_duration_us
