"""Discrete-event engine for the shared half-duplex medium.

The medium is strictly sequential, so the event loop marches a time cursor
through alternating idle (contention) periods and occupations.  All state
lives on a 0.1-us integer grid; with a fixed seed every timestamp is
bit-identical across runs.

Contention follows standard CSMA/CA: after each busy period contenders wait
AIFS and count down backoff slots together; the lowest counter transmits,
ties collide and double their windows, and counters persist (freeze) across
busy periods.  A data sender defers transmission - parking a finished
countdown at zero - whenever its access would cross the next window-open
boundary or the end of the run, which keeps availability windows aligned
with an idle medium.

Sensing service: under PIFS access the initiator seizes the medium PIFS
after the window opens (and PIFS after each of its own TxOPs), which beats
any AIFS countdown; under EDCA access it contends like a station.  Exchanges
are atomic within a TxOP; one that would cross the TxOP limit defers to the
next TxOP of the same window; only the report PPDU may be truncated, and
only by window close.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from random import Random
from typing import Callable

from .airtime import FrameSizeModel
from .config import AccessMethod, ConfigError, SimParams
from .sensing import (
    Classification,
    Exchange,
    ExchangeKind,
    SawWindow,
    SawWindowLedger,
    SensingDemand,
    classify_window,
    ds,
    schedule_windows,
)
from .traffic import DataBurst

AP = -1  # station id of the access point


class EventKind(enum.IntEnum):
    # Numeric order is the tiebreak order at equal timestamps.
    WINDOW_OPEN = 0
    WINDOW_CLOSE = 1
    BACKOFF_EXPIRY = 2
    FRAME_END = 3
    TXOP_END = 4
    SIM_END = 5


@dataclass(frozen=True)
class Event:
    time_ds: int
    kind: EventKind
    subject: int
    detail: str = ""


class MediumMode(enum.Enum):
    IDLE = "idle"
    DATA_TXOP = "data"
    SENSING_TXOP = "sensing"


@dataclass
class MediumState:
    busy_until_ds: int = 0
    holder: int | None = None
    mode: MediumMode = MediumMode.IDLE


@dataclass
class EdcaState:
    """Per-contender backoff state; cw doubles on collision, resets on success."""

    cw: int
    counter: int
    retries: int = 0


def _draw(cw: int, rng: Random) -> int:
    # Contention windows are 2^k - 1 in practice; getrandbits keeps the hot
    # path cheap while odd windows still work.
    if cw == 0:
        return 0
    if (cw + 1) & cw == 0:
        return rng.getrandbits(cw.bit_length())
    return rng.randint(0, cw)


def draw_backoff(state: EdcaState, rng: Random) -> int:
    state.counter = _draw(state.cw, rng)
    return state.counter


def pifs_grab(time_ds: int, busy_until_ds: int, pifs_ds: int) -> int:
    """Grant time of a priority grab: PIFS after the medium last went idle."""
    return max(time_ds, busy_until_ds) + pifs_ds


@dataclass(frozen=True)
class ContentionOutcome:
    winners: tuple[int, ...]
    grant_ds: int
    collision: bool


def resolve_contention(
    states: dict[int, EdcaState],
    time_ds: int,
    aifs_ds: int,
    slot_ds: int,
    cw_max: int,
    rng: Random,
) -> ContentionOutcome | None:
    """One contention round among `states`, mutating counters in place.

    The lowest counter wins at AIFS plus that many slots; everyone else keeps
    the remainder (freeze).  Simultaneous zeros collide: each collider doubles
    its window (capped) and redraws.  An empty contender set yields no event.
    """
    if not states:
        return None
    min_c = min(st.counter for st in states.values())
    grant = time_ds + aifs_ds + min_c * slot_ds
    winners = tuple(sorted(i for i, st in states.items() if st.counter == min_c))
    for i, st in states.items():
        if i not in winners:
            st.counter -= min_c
    collision = len(winners) > 1
    if collision:
        for i in winners:
            st = states[i]
            st.cw = min(2 * (st.cw + 1) - 1, cw_max)
            st.retries += 1
            draw_backoff(st, rng)
    return ContentionOutcome(winners, grant, collision)


def hold_txop(
    frame_durations_us: list[float], limit_us: float, sifs_us: float
) -> tuple[int, float]:
    """Pack frames plus SIFS gaps back-to-back under the TxOP limit.

    Returns (frames sent, occupied microseconds); occupied never exceeds the
    limit.  A first frame longer than the limit sends nothing.
    """
    limit = ds(limit_us)
    sifs = ds(sifs_us)
    occupied = 0
    sent = 0
    for dur in frame_durations_us:
        step = ds(dur) if sent == 0 else sifs + ds(dur)
        if occupied + step > limit:
            break
        occupied += step
        sent += 1
    return sent, occupied / 10.0


# Time-partition buckets; their sum equals the simulated time exactly.
BUCKETS = (
    "idle",
    "data_frames",
    "data_gaps",
    "sensing_counted",
    "sensing_uncounted",
    "collisions",
)


@dataclass
class RunTotals:
    buckets: dict[str, int] = field(default_factory=lambda: {b: 0 for b in BUCKETS})
    data_bits: int = 0
    sim_time_ds: int = 0

    def add(self, bucket: str, dur_ds: int) -> None:
        assert dur_ds >= 0
        self.buckets[bucket] += dur_ds

    def verify_partition(self) -> None:
        total = sum(self.buckets.values())
        assert total == self.sim_time_ds, (
            f"time partition broken: {total} != {self.sim_time_ds}"
        )


@dataclass
class RunResult:
    params: SimParams
    totals: RunTotals
    ledgers: list[SawWindowLedger]
    classifications: list[Classification]
    window_count: int


class Simulation:
    """One run: parameters in, totals and per-window ledgers out."""

    def __init__(
        self,
        params: SimParams,
        model: FrameSizeModel | None = None,
        trace: Callable[[Event], None] | None = None,
    ) -> None:
        self.params = params
        self.model = model or FrameSizeModel()
        self.rng = Random(params.rng_seed)
        self.trace = trace
        u = params.units
        self.sifs = ds(u.sifs_us)
        self.slot = ds(u.slot_us)
        self.pifs = ds(u.pifs_us)
        self.aifs = ds(params.aifs_us)
        self.ap_aifs = ds(params.ap_aifs_us)
        self.txop_limit = ds(params.txop_limit_us)
        self.sim_end = ds(params.sim_duration_us)
        self.sym = ds(self.model.symbol_duration_us)
        self.burst = DataBurst.build(params, self.model)
        c = params.data_ampdus_per_txop
        self.data_access = c * self.burst.cycle_ds + (c - 1) * self.burst.sifs_ds
        if self.data_access > self.txop_limit:
            raise ConfigError("data access exceeds the TxOP limit")
        self.sensing_on = params.access_method is not AccessMethod.NO_SENSING
        if self.sensing_on:
            self.windows = schedule_windows(params)
            self.win_open = [ds(w.open_us) for w in self.windows]
            self.win_close = [ds(w.close_us) for w in self.windows]
            self.demand = SensingDemand.build(params, self.model)
        else:
            self.windows = []
            self.win_open = []
            self.win_close = []
            self.demand = None
        self.totals = RunTotals(sim_time_ds=self.sim_end)
        # Contender state as parallel lists; the loop runs millions of rounds.
        self.cnt = [_draw(params.cw_min, self.rng) for _ in range(params.n_sta)]
        self.cw = [params.cw_min] * params.n_sta
        self.ap_cnt = 0
        self.ap_cw = params.ap_cw_min
        c = params.data_ampdus_per_txop
        self.data_frames_per_access = c * (self.burst.ppdu_ds + self.burst.ba_ds)
        self.data_gaps_per_access = (2 * c - 1) * self.burst.sifs_ds
        self.bits_per_access = c * self.burst.bits
        # Window service state.
        self.win_idx = 0
        self.current: SawWindow | None = None
        self.cur_open = 0
        self.cur_close = 0
        self.next_exchange = 0
        self.ledger: SawWindowLedger | None = None
        self.ledgers: list[SawWindowLedger] = []
        self.classifications: list[Classification] = []

    # -- helpers -----------------------------------------------------------

    def _emit(self, time_ds: int, kind: EventKind, subject: int, detail: str = "") -> None:
        if self.trace is not None:
            self.trace(Event(time_ds, kind, subject, detail))

    def _next_open_ds(self, t: int) -> int:
        """Open time of the first window at or after t (sim end if none)."""
        idx = self.win_idx
        while idx < len(self.win_open) and self.win_open[idx] < t:
            idx += 1
        return self.win_open[idx] if idx < len(self.win_open) else self.sim_end

    def _pending(self) -> bool:
        return (
            self.ledger is not None
            and not self.ledger.closed
            and self.next_exchange < len(self.demand.exchanges)
        )

    # -- window lifecycle ----------------------------------------------------

    def _open_window(self, w: SawWindow) -> None:
        self.current = w
        self.cur_open = ds(w.open_us)
        self.cur_close = ds(w.close_us)
        self.next_exchange = 0
        self.ledger = SawWindowLedger(
            window_index=w.index,
            required_bytes=self.demand.required_bytes,
            required_rounds=self.demand.required_rounds,
        )
        # Fresh attempt series for the initiator each window.
        self.ap_cw = self.params.ap_cw_min
        self.ap_cnt = _draw(self.ap_cw, self.rng)
        self._emit(self.cur_open, EventKind.WINDOW_OPEN, AP, f"window {w.index}")

    def _close_window(self) -> None:
        led = self.ledger
        led.closed = True
        self.ledgers.append(led)
        self.classifications.append(classify_window(led))
        self._emit(
            self.cur_close,
            EventKind.WINDOW_CLOSE,
            AP,
            f"window {self.current.index} {self.classifications[-1].value}",
        )
        self.win_idx = self.current.index + 1
        self.current = None
        self.ledger = None

    def _note_loss(self, start: int, end: int) -> None:
        """Window time spent on non-sensing traffic or contention (EDCA only)."""
        if self.params.access_method is not AccessMethod.EDCA:
            return
        if (
            self.ledger is None
            or self.ledger.closed
            or self.ledger.complete_at_ds is not None
        ):
            return
        lo = max(start, self.cur_open)
        hi = min(end, self.cur_close)
        if hi > lo:
            self.ledger.lost_ds += hi - lo

    # -- sensing service -------------------------------------------------------

    def _serve_sensing(self, grant: int) -> int:
        """Run one sensing TxOP from `grant`; returns the release time."""
        close = self.cur_close
        txop_end = grant + self.txop_limit
        t = grant
        self._emit(grant, EventKind.BACKOFF_EXPIRY, AP, "sensing txop start")
        first = True
        while self._pending():
            ex = self.demand.exchanges[self.next_exchange]
            gap = 0 if first else self.sifs
            end = t + gap + ex.duration_ds
            if end > txop_end and txop_end < close:
                # TxOP limit binds first; defer to the next TxOP of this window.
                if first:
                    raise ConfigError(
                        "sensing exchange exceeds the TxOP limit and cannot be sent"
                    )
                break
            if end > close:
                if ex.kind is ExchangeKind.REPORT:
                    self._run_report_truncated(ex, t, close, gap)
                    t = close
                # Whatever could not start stays unsent; the window is over.
                self.next_exchange = len(self.demand.exchanges)
                break
            if gap:
                self.totals.add("sensing_uncounted", gap)
            self._run_exchange(ex, t + gap)
            t = end
            first = False
            self.next_exchange += 1
            if self.next_exchange == len(self.demand.exchanges):
                self.ledger.complete_at_ds = t
        self._emit(t, EventKind.TXOP_END, AP, "sensing txop end")
        return t

    def _run_exchange(self, ex: Exchange, start: int) -> None:
        t = start
        for seg in ex.segments:
            bucket = "sensing_counted" if seg.counted else "sensing_uncounted"
            self.totals.add(bucket, seg.dur_ds)
            if seg.counted:
                self.ledger.counted_airtime_ds += seg.dur_ds
            if not seg.is_gap:
                self._emit(
                    t, EventKind.FRAME_END, AP, f"{seg.label} dur={seg.dur_ds}"
                )
            t += seg.dur_ds
        if ex.kind is ExchangeKind.SOUNDING:
            self.ledger.sounding_rounds_done += ex.rounds
        elif ex.kind is ExchangeKind.REPORT:
            self.ledger.sent_bytes += ex.report_bytes * self.params.n_sta

    def _run_report_truncated(self, ex: Exchange, entry: int, close: int, gap: int) -> None:
        """Send what fits of the reporting exchange; account up to the close."""
        cur = entry
        if gap:
            g = min(gap, close - cur)
            self.totals.add("sensing_uncounted", g)
            cur += g
            if cur >= close:
                return
        trigger, inner, ppdu = ex.segments
        if cur + trigger.dur_ds > close:
            self.totals.add("idle", close - cur)
            return
        self.totals.add("sensing_counted", trigger.dur_ds)
        self.ledger.counted_airtime_ds += trigger.dur_ds
        self._emit(cur, EventKind.FRAME_END, AP, f"{trigger.label} dur={trigger.dur_ds}")
        cur += trigger.dur_ds
        preamble = ppdu.dur_ds - ex.report_symbols * self.sym
        if cur + inner.dur_ds + preamble > close:
            self.totals.add("idle", close - cur)
            return
        self.totals.add("sensing_uncounted", inner.dur_ds)
        cur += inner.dur_ds
        fit = min(ex.report_symbols, (close - cur - preamble) // self.sym)
        sent = preamble + fit * self.sym
        self.totals.add("sensing_counted", sent)
        self.ledger.counted_airtime_ds += sent
        bytes_fit = min(ex.report_bytes, fit * ex.report_bits_per_symbol // 8)
        self.ledger.sent_bytes += bytes_fit * self.params.n_sta
        self._emit(
            cur,
            EventKind.FRAME_END,
            AP,
            f"partial_report dur={sent} symbols={fit}/{ex.report_symbols}",
        )
        cur += sent
        self.totals.add("idle", close - cur)

    # -- data service ------------------------------------------------------------

    def _serve_data(self, sta: int, start: int) -> int:
        end = start + self.data_access
        buckets = self.totals.buckets
        buckets["data_frames"] += self.data_frames_per_access
        buckets["data_gaps"] += self.data_gaps_per_access
        self.totals.data_bits += self.bits_per_access
        if self.trace is not None:
            self._emit(
                start,
                EventKind.FRAME_END,
                sta,
                f"data dur={self.data_access} bits={self.bits_per_access}",
            )
        self._note_loss(start, end)
        return end

    # -- main loop ------------------------------------------------------------------

    def run(self) -> RunResult:
        t = 0
        while t < self.sim_end:
            if self.current is not None and t >= self.cur_close:
                self._close_window()
            if (
                self.sensing_on
                and self.current is None
                and self.win_idx < len(self.windows)
                and t >= self.win_open[self.win_idx]
            ):
                self._open_window(self.windows[self.win_idx])
            t = self._idle_period(t)
        if self.current is not None:
            self._close_window()
        self._emit(self.sim_end, EventKind.SIM_END, AP, "end")
        self.totals.verify_partition()
        return RunResult(
            params=self.params,
            totals=self.totals,
            ledgers=self.ledgers,
            classifications=self.classifications,
            window_count=len(self.ledgers),
        )

    def _idle_period(self, t0: int) -> int:
        """Resolve the medium from idle time t0 to the next busy end/boundary."""
        p = self.params
        in_win = self.current is not None
        pending = in_win and self._pending()

        if in_win:
            boundary = self.cur_close
        elif self.sensing_on and self.win_idx < len(self.windows):
            boundary = self.win_open[self.win_idx]
        else:
            boundary = self.sim_end

        # Priority grab preempts every countdown.
        if pending and p.access_method is AccessMethod.PIFS:
            grant = pifs_grab(t0, t0, self.pifs)
            self.totals.add("idle", grant - t0)
            return self._serve_sensing(grant)

        # Data senders may not start an access that crosses the next window
        # open or the end of the run.  All of them share one cutoff, so the
        # earliest permitted expiry is the one of the minimum counter.
        next_open = self._next_open_ds(self.cur_close if in_win else t0)
        data_cutoff = min(next_open, self.sim_end) - self.data_access

        cnt = self.cnt
        slot = self.slot
        sta_base = t0 + self.aifs
        ap_base = t0 + self.ap_aifs
        min_c = min(cnt) if cnt else None
        sta_expiry = sta_base + min_c * slot if min_c is not None else None
        if sta_expiry is not None and sta_expiry > data_cutoff:
            sta_expiry = None
        ap_contending = pending and p.access_method is AccessMethod.EDCA
        ap_expiry = ap_base + self.ap_cnt * slot if ap_contending else None
        if ap_expiry is not None and ap_expiry >= self.cur_close:
            ap_expiry = None

        if sta_expiry is None and ap_expiry is None:
            expiry = boundary
        elif sta_expiry is None:
            expiry = ap_expiry
        elif ap_expiry is None:
            expiry = sta_expiry
        else:
            expiry = min(sta_expiry, ap_expiry)

        if expiry >= boundary:
            # The boundary arrives first; counters tick over the idle slots.
            elapsed = (boundary - sta_base) // slot
            if elapsed > 0:
                self.cnt = [c - elapsed if c > elapsed else 0 for c in cnt]
            if ap_contending:
                ap_elapsed = (boundary - ap_base) // slot
                if ap_elapsed > 0:
                    self.ap_cnt = max(0, self.ap_cnt - ap_elapsed)
            self._note_loss(t0, boundary)
            self.totals.add("idle", boundary - t0)
            return boundary

        sta_slots = max(0, (expiry - sta_base) // slot)
        sta_winners = (
            [i for i, c in enumerate(cnt) if c == min_c]
            if sta_expiry == expiry
            else []
        )
        ap_wins = ap_expiry == expiry
        if sta_slots > 0:
            for i, c in enumerate(cnt):
                if c > sta_slots:
                    cnt[i] = c - sta_slots
                elif not (sta_expiry == expiry and c == min_c):
                    cnt[i] = 0
        if ap_contending and not ap_wins:
            ap_slots = max(0, (expiry - ap_base) // slot)
            if ap_slots > 0:
                self.ap_cnt = max(0, self.ap_cnt - ap_slots)
        self._note_loss(t0, expiry)
        self.totals.add("idle", expiry - t0)

        if len(sta_winners) + (1 if ap_wins else 0) > 1:
            return self._collide(sta_winners, ap_wins, expiry)

        if ap_wins:
            release = self._serve_sensing(expiry)
            self.ap_cw = p.ap_cw_min
            self.ap_cnt = _draw(self.ap_cw, self.rng)
            return release
        winner = sta_winners[0]
        end = self._serve_data(winner, expiry)
        self.cw[winner] = p.cw_min
        cnt[winner] = _draw(p.cw_min, self.rng)
        return end

    def _collide(self, sta_winners: list[int], ap_wins: bool, start: int) -> int:
        """Simultaneous expiries: overlapping frames, no ack, windows double."""
        p = self.params
        dur = self.burst.ppdu_ds if sta_winners else 0
        if ap_wins:
            ex = self.demand.exchanges[self.next_exchange]
            dur = max(dur, ex.segments[0].dur_ds)
        self.totals.add("collisions", dur)
        if self.trace is not None:
            parties = ",".join(str(w) for w in sta_winners) + (",AP" if ap_wins else "")
            self._emit(start, EventKind.FRAME_END, sta_winners[0] if sta_winners else AP,
                       f"collision dur={dur} parties={parties}")
        self._note_loss(start, start + dur)
        for w in sta_winners:
            self.cw[w] = min(2 * (self.cw[w] + 1) - 1, p.cw_max)
            self.cnt[w] = _draw(self.cw[w], self.rng)
        if ap_wins:
            if p.ap_retry_policy == "persist":
                self.ap_cnt = 0
            else:
                if p.ap_retry_policy == "double":
                    cap = max(p.cw_max, p.ap_cw_min)
                    self.ap_cw = min(2 * (self.ap_cw + 1) - 1, cap)
                self.ap_cnt = _draw(self.ap_cw, self.rng)
        return start + dur


def run_sme(window: SawWindow, demand: SensingDemand, sim: Simulation) -> SawWindowLedger:
    """Drive a primed engine across `window` and return that window's ledger."""
    assert sim.demand is not None
    assert sim.demand.required_bytes == demand.required_bytes
    sim.run()
    for led in sim.ledgers:
        if led.window_index == window.index:
            return led
    raise ValueError(f"window {window.index} was never simulated")
