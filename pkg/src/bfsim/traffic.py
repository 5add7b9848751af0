"""Saturated uplink data plane.

Every STA always has traffic queued.  One medium access carries a fixed
number of aggregate/block-ack cycles (one by default): aggregate PPDU, SIFS,
block-ack.  The aggregate holds ampdu_packets ethernet frames sent full-band.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import airtime
from .airtime import FrameSizeModel
from .config import ConfigError, SimParams
from .sensing import ds


@dataclass(frozen=True)
class DataBurst:
    """Precomputed airtimes for one aggregate/block-ack cycle."""

    bits: int
    ppdu_ds: int
    ba_ds: int
    sifs_ds: int

    @property
    def cycle_ds(self) -> int:
        """PPDU + SIFS + block-ack."""
        return self.ppdu_ds + self.sifs_ds + self.ba_ds

    @classmethod
    def build(cls, params: SimParams, model: FrameSizeModel) -> "DataBurst":
        mcs = airtime.mcs_entry(params.mcs_index)
        full_band_ru = 996 if params.bandwidth_mhz == 80 else 996
        bps = airtime.bits_per_symbol(full_band_ru, mcs, params.sta_antennas)
        bits = params.ampdu_packets * params.packet_bytes * 8
        symbols = -(-bits // bps)
        ppdu = ds(model.data_preamble_us) + symbols * ds(model.symbol_duration_us)
        ba = ds(airtime.control_frame_airtime_us(model.block_ack_bytes, model))
        return cls(bits=bits, ppdu_ds=ppdu, ba_ds=ba, sifs_ds=ds(params.units.sifs_us))


def fill_data_txop(burst: DataBurst, limit_us: float) -> tuple[int, float]:
    """Pack whole cycles (SIFS between them) into limit_us.

    Returns (payload bits, occupied microseconds).  A limit shorter than one
    cycle sends nothing and releases the medium.
    """
    if limit_us < 0:
        raise ConfigError("limit_us must be >= 0")
    limit = ds(limit_us)
    if limit < burst.cycle_ds:
        return 0, 0.0
    extra = (limit - burst.cycle_ds) // (burst.sifs_ds + burst.cycle_ds)
    cycles = 1 + extra
    occupied = burst.cycle_ds + extra * (burst.sifs_ds + burst.cycle_ds)
    return cycles * burst.bits, occupied / 10.0
