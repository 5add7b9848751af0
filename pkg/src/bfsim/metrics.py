"""Run-level metrics: overhead, missed-sensing, throughput, window availability."""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import RunResult
from .sensing import Classification


class MetricsError(ValueError):
    """Raised when a metric is requested from an empty or unfinished run."""


@dataclass
class MetricsAccumulator:
    """Totals a finished run feeds into the four summary metrics."""

    sim_time_us: float = 0.0
    sensing_airtime_us: float = 0.0
    data_bits: int = 0
    window_count: int = 0
    missed_windows: int = 0
    class_counts: dict[str, int] = field(default_factory=dict)
    pawd_samples: list[float] = field(default_factory=list)

    @classmethod
    def from_run(cls, result: RunResult) -> "MetricsAccumulator":
        acc = cls()
        acc.sim_time_us = result.totals.sim_time_ds / 10.0
        acc.sensing_airtime_us = result.totals.buckets["sensing_counted"] / 10.0
        acc.data_bits = result.totals.data_bits
        acc.window_count = result.window_count
        duration_ds = None
        if result.window_count:
            duration_ds = 10 * result.params.saw_duration
        for led, cls_ in zip(result.ledgers, result.classifications):
            acc.class_counts[cls_.value] = acc.class_counts.get(cls_.value, 0) + 1
            if cls_ is not Classification.COMPLETE:
                acc.missed_windows += 1
            acc.pawd_samples.append(100.0 * (duration_ds - led.lost_ds) / duration_ds)
        assert acc.sensing_airtime_us <= acc.sim_time_us
        return acc


def pso(acc: MetricsAccumulator) -> float:
    """Percent of simulated time spent on counted sensing frames."""
    if acc.sim_time_us <= 0:
        raise MetricsError("no simulated time")
    return 100.0 * acc.sensing_airtime_us / acc.sim_time_us


def psm(acc: MetricsAccumulator) -> float:
    """Percent of windows in which sensing was partially or completely missed."""
    if acc.window_count == 0:
        raise MetricsError("no availability windows")
    return 100.0 * acc.missed_windows / acc.window_count


def throughput(acc: MetricsAccumulator) -> float:
    """Total data bits over simulated seconds, in bits per second."""
    if acc.sim_time_us <= 0:
        raise MetricsError("no simulated time")
    return acc.data_bits / (acc.sim_time_us * 1e-6)


def pawd(acc: MetricsAccumulator) -> float:
    """Mean percent of the window duration usable for sensing tasks."""
    if not acc.pawd_samples:
        raise MetricsError("no availability windows")
    return sum(acc.pawd_samples) / len(acc.pawd_samples)


@dataclass(frozen=True)
class RunMetrics:
    """The four summary numbers of one run; sensing-free runs leave gaps."""

    pso_pct: float
    psm_pct: float | None
    throughput_mbps: float
    pawd_pct: float | None
    window_count: int

    @classmethod
    def from_run(cls, result: RunResult) -> "RunMetrics":
        acc = MetricsAccumulator.from_run(result)
        has_windows = acc.window_count > 0
        return cls(
            pso_pct=pso(acc),
            psm_pct=psm(acc) if has_windows else None,
            throughput_mbps=throughput(acc) / 1e6,
            pawd_pct=pawd(acc) if has_windows else None,
            window_count=acc.window_count,
        )
