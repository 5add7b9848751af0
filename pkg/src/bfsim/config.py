"""Simulation configuration: parameter set, lookup tables, and unit conversions.

All durations are microseconds unless a name says otherwise.  The engine
internally works on a 0.1-microsecond integer grid so that runs are exactly
reproducible; every configured duration must land on that grid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum


class ConfigError(ValueError):
    """Raised for parameter values outside their allowed ranges."""


class AccessMethod(Enum):
    EDCA = "edca"
    PIFS = "pifs"
    NO_SENSING = "none"


# RU size (tones) allocated to each reporting STA, keyed by the total number
# of STAs.  Upper-bound keyed rows: (max_n_sta, tones).
_RU_ALLOCATION = ((1, 996), (2, 484), (4, 242), (9, 106), (16, 52))

TU_US = 1024
SAW_CODE_US = 100
MAX_SUBCARRIERS = 996


def ru_tones_per_sta(n_sta: int) -> int:
    """RU size in tones assigned to each STA for OFDMA reporting."""
    if not 1 <= n_sta <= 16:
        raise ConfigError(f"n_sta must be in 1..16, got {n_sta}")
    for upper, tones in _RU_ALLOCATION:
        if n_sta <= upper:
            return tones
    raise AssertionError("unreachable")


def saw_duration_us(code: int) -> int:
    """Availability-window duration; one code unit is 100 us."""
    if not 1 <= code <= 127:
        raise ConfigError(f"SAW duration code must be in 1..127, got {code}")
    return code * SAW_CODE_US


def saw_period_us(code: int) -> int:
    """Availability-window period; one code unit is 100 TU (102.4 ms)."""
    if code < 1:
        raise ConfigError(f"SAW period code must be >= 1, got {code}")
    return code * 100 * TU_US


@dataclass(frozen=True)
class SensingAntennaConfig:
    """Antennas engaged per responder: tx at the AP, rx at the STA."""

    tx: int
    rx: int

    def __post_init__(self) -> None:
        if self.tx not in (1, 2, 4, 8):
            raise ConfigError(f"sensing tx antennas must be 1, 2, 4 or 8, got {self.tx}")
        if self.rx not in (1, 2):
            raise ConfigError(f"sensing rx antennas must be 1 or 2, got {self.rx}")

    @classmethod
    def parse(cls, text: str) -> "SensingAntennaConfig":
        m = re.fullmatch(r"(\d+)x(\d+)", text.strip().lower())
        if not m:
            raise ConfigError(f"antenna config must look like '2x2', got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.tx}x{self.rx}"


def stas_per_sounding_round(ap_antennas: int, stra: SensingAntennaConfig) -> int:
    """How many responders one announcement/sounding exchange covers."""
    if stra.tx > ap_antennas:
        raise ConfigError(f"stra tx {stra.tx} exceeds AP antennas {ap_antennas}")
    return ap_antennas // stra.tx


@dataclass(frozen=True)
class TimeUnits:
    """MAC interframe spacings. pifs = sifs + slot, difs = sifs + 2*slot."""

    sifs_us: int = 16
    slot_us: int = 9
    pifs_us: int = field(default=25)
    difs_us: int = field(default=34)

    def __post_init__(self) -> None:
        if self.pifs_us != self.sifs_us + self.slot_us:
            raise ConfigError("pifs_us must equal sifs_us + slot_us")
        if self.difs_us != self.sifs_us + 2 * self.slot_us:
            raise ConfigError("difs_us must equal sifs_us + 2*slot_us")

    tu_us: int = TU_US
    saw_code_us: int = SAW_CODE_US


@dataclass(frozen=True)
class SimParams:
    """Full description of one simulation run."""

    n_sta: int = 4
    num_app: int = 4
    stra: SensingAntennaConfig = field(default_factory=lambda: SensingAntennaConfig(2, 2))
    saw_duration_code: int = 127
    saw_period_code: int = 1
    access_method: AccessMethod = AccessMethod.PIFS
    txop_limit_us: int = 5484
    ap_antennas: int = 8
    sta_antennas: int = 2
    bandwidth_mhz: int = 80
    mcs_index: int = 6
    n_b: int = 8
    n_sc: int = 250
    n_g: int = 4
    ampdu_packets: int = 10
    packet_bytes: int = 1500
    # Data senders transmit this many aggregate/ack cycles per medium access.
    data_ampdus_per_txop: int = 1
    sim_duration_s: float = 100.0
    rng_seed: int = 1
    # EDCA contention: everyone arbitrates at the best-effort AIFS (AIFSN 3).
    # Data senders keep a pinned window; the sensing initiator draws from a
    # wider window once per attempt and holds its countdown through
    # collisions, so heavier data contention slows it down smoothly.
    cw_min: int = 15
    cw_max: int = 15
    aifs_us: int = 43
    ap_aifs_us: int = 43
    ap_cw_min: int = 31
    # Initiator behavior when its sensing access collides with data:
    #   persist - retry at the next opportunity, keeping the drained counter
    #   rearm   - draw a fresh backoff from ap_cw_min
    #   double  - escalate like a data sender
    ap_retry_policy: str = "persist"
    units: TimeUnits = field(default_factory=TimeUnits)

    def __post_init__(self) -> None:
        if not 1 <= self.n_sta <= 16:
            raise ConfigError(f"n_sta must be in 1..16, got {self.n_sta}")
        if not 1 <= self.num_app <= 8:
            raise ConfigError(f"num_app must be in 1..8, got {self.num_app}")
        saw_duration_us(self.saw_duration_code)
        saw_period_us(self.saw_period_code)
        if self.saw_duration_code * SAW_CODE_US > self.saw_period_code * 100 * TU_US:
            raise ConfigError("SAW duration does not fit inside the SAW period")
        if self.stra.tx > self.ap_antennas:
            raise ConfigError("stra.tx exceeds ap_antennas")
        if self.stra.rx > self.sta_antennas:
            raise ConfigError("stra.rx exceeds sta_antennas")
        if not 0 <= self.mcs_index <= 11:
            raise ConfigError(f"mcs_index must be in 0..11, got {self.mcs_index}")
        if self.n_b <= 0 or self.n_sc <= 0 or self.n_g <= 0:
            raise ConfigError("n_b, n_sc and n_g must be positive")
        # Table-style parameter sets round 996/4 = 249 up to 250; tolerate that.
        max_sc = -(-MAX_SUBCARRIERS // self.n_g)
        if self.n_sc > max_sc + 1:
            raise ConfigError(f"n_sc {self.n_sc} exceeds {max_sc} reportable subcarriers")
        if self.txop_limit_us <= 0:
            raise ConfigError("txop_limit_us must be positive")
        if self.sim_duration_s <= 0:
            raise ConfigError("sim_duration_s must be positive")
        if not 0 <= self.cw_min <= self.cw_max:
            raise ConfigError("cw window must satisfy 0 <= cw_min <= cw_max")
        if self.ap_cw_min < 0:
            raise ConfigError("ap_cw_min must be >= 0")
        if min(self.aifs_us, self.ap_aifs_us) < self.units.sifs_us:
            raise ConfigError("interframe waits must be at least sifs_us")
        if self.ap_retry_policy not in ("persist", "rearm", "double"):
            raise ConfigError(f"unknown ap_retry_policy {self.ap_retry_policy!r}")

    @property
    def saw_duration(self) -> int:
        return saw_duration_us(self.saw_duration_code)

    @property
    def saw_period(self) -> int:
        return saw_period_us(self.saw_period_code)

    @property
    def sim_duration_us(self) -> int:
        return round(self.sim_duration_s * 1_000_000)

    @property
    def stas_per_round(self) -> int:
        return stas_per_sounding_round(self.ap_antennas, self.stra)
