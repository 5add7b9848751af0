"""Command-line front end: single runs and the three standard sweeps.

Sweep grids:
  1: n_sta 1..16 at SAW durations {10, 50, 90, 127}, four apps, 2x2 antennas
  2: apps {1,2,4,6,8} at n_sta {1,4,8,12,16}, SAW 127, 2x2 antennas
  3: antennas {1x1,2x2,4x2,8x2} at n_sta {1,4,8,12,16}, four apps, SAW 127

Output CSV header is fixed:
  nsta,numapp,stra,saw_code,access,seed,duration_s,pso_pct,psm_pct,
  throughput_mbps,pawd_pct,window_count
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import multiprocessing
import sys
from dataclasses import dataclass
from pathlib import Path

from .airtime import FrameSizeModel
from .config import (
    AccessMethod,
    ConfigError,
    SensingAntennaConfig,
    SimParams,
    TimeUnits,
)
from .engine import Event, Simulation
from .metrics import RunMetrics

CSV_HEADER = [
    "nsta",
    "numapp",
    "stra",
    "saw_code",
    "access",
    "seed",
    "duration_s",
    "pso_pct",
    "psm_pct",
    "throughput_mbps",
    "pawd_pct",
    "window_count",
]

SWEEP_GRIDS = {
    1: dict(
        nsta=list(range(1, 17)),
        saw=[10, 50, 90, 127],
        numapp=[4],
        stra=["2x2"],
    ),
    2: dict(
        nsta=[1, 4, 8, 12, 16],
        saw=[127],
        numapp=[1, 2, 4, 6, 8],
        stra=["2x2"],
    ),
    3: dict(
        nsta=[1, 4, 8, 12, 16],
        saw=[127],
        numapp=[4],
        stra=["1x1", "2x2", "4x2", "8x2"],
    ),
}


@dataclass(frozen=True)
class SweepSpec:
    config_id: int
    access: AccessMethod
    duration_s: float
    seed: int

    def grid(self) -> list[SimParams]:
        if self.config_id not in SWEEP_GRIDS:
            raise ConfigError(f"config must be 1, 2 or 3, got {self.config_id}")
        g = SWEEP_GRIDS[self.config_id]
        points = []
        for stra in g["stra"]:
            for saw in g["saw"]:
                for numapp in g["numapp"]:
                    for nsta in g["nsta"]:
                        points.append(
                            SimParams(
                                n_sta=nsta,
                                num_app=numapp,
                                stra=SensingAntennaConfig.parse(stra),
                                saw_duration_code=saw,
                                access_method=self.access,
                                sim_duration_s=self.duration_s,
                                rng_seed=self.seed,
                            )
                        )
        return points


@dataclass(frozen=True)
class ResultRow:
    nsta: int
    numapp: int
    stra: str
    saw_code: int
    access: str
    seed: int
    duration_s: float
    pso_pct: float
    psm_pct: float | None
    throughput_mbps: float
    pawd_pct: float | None
    window_count: int

    def as_csv(self) -> list[str]:
        def num(x: float | None) -> str:
            return "" if x is None else f"{x:.6f}"

        return [
            str(self.nsta),
            str(self.numapp),
            self.stra,
            str(self.saw_code),
            self.access,
            str(self.seed),
            f"{self.duration_s:g}",
            f"{self.pso_pct:.6f}",
            num(self.psm_pct),
            f"{self.throughput_mbps:.6f}",
            num(self.pawd_pct),
            str(self.window_count),
        ]

    @classmethod
    def from_csv(cls, row: dict[str, str]) -> "ResultRow":
        def opt(x: str) -> float | None:
            return None if x == "" else float(x)

        return cls(
            nsta=int(row["nsta"]),
            numapp=int(row["numapp"]),
            stra=row["stra"],
            saw_code=int(row["saw_code"]),
            access=row["access"],
            seed=int(row["seed"]),
            duration_s=float(row["duration_s"]),
            pso_pct=float(row["pso_pct"]),
            psm_pct=opt(row["psm_pct"]),
            throughput_mbps=float(row["throughput_mbps"]),
            pawd_pct=opt(row["pawd_pct"]),
            window_count=int(row["window_count"]),
        )


def run_single(
    params: SimParams,
    model: FrameSizeModel | None = None,
    trace_path: str | Path | None = None,
    ledger_path: str | Path | None = None,
) -> ResultRow:
    """Run one simulation and summarize it as a result row."""
    trace_file = open(trace_path, "w") if trace_path else None

    def tracer(ev: Event) -> None:
        trace_file.write(f"{ev.time_ds / 10:.1f},{ev.kind.name},{ev.subject},{ev.detail}\n")

    sim = Simulation(params, model=model, trace=tracer if trace_file else None)
    try:
        result = sim.run()
    finally:
        if trace_file:
            trace_file.close()
    if ledger_path:
        with open(ledger_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(
                ["window_index", "required_bytes", "sent_bytes", "classification", "available_us"]
            )
            dur = params.saw_duration
            for led, cls_ in zip(result.ledgers, result.classifications):
                w.writerow(
                    [led.window_index, led.required_bytes, led.sent_bytes,
                     cls_.value, f"{dur - led.lost_ds / 10:.1f}"]
                )
    m = RunMetrics.from_run(result)
    return ResultRow(
        nsta=params.n_sta,
        numapp=params.num_app,
        stra=str(params.stra),
        saw_code=params.saw_duration_code,
        access=params.access_method.value,
        seed=params.rng_seed,
        duration_s=params.sim_duration_s,
        pso_pct=m.pso_pct,
        psm_pct=m.psm_pct,
        throughput_mbps=m.throughput_mbps,
        pawd_pct=m.pawd_pct,
        window_count=m.window_count,
    )


def _run_point(args: tuple[SimParams, FrameSizeModel | None]) -> ResultRow:
    params, model = args
    return run_single(params, model=model)


def run_sweep(
    spec: SweepSpec,
    out_path: str | Path,
    model: FrameSizeModel | None = None,
    workers: int = 1,
) -> list[ResultRow]:
    """One row per grid point, written in grid order, flushed per row."""
    points = spec.grid()
    rows: list[ResultRow] = []
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        fh.flush()
        if workers > 1:
            with multiprocessing.Pool(workers) as pool:
                for row in pool.imap(_run_point, [(p, model) for p in points]):
                    rows.append(row)
                    writer.writerow(row.as_csv())
                    fh.flush()
        else:
            for p in points:
                row = run_single(p, model=model)
                rows.append(row)
                writer.writerow(row.as_csv())
                fh.flush()
    return rows


def load_param_file(path: str | Path) -> dict[str, str]:
    """Flat key=value file; blank lines and #-comments ignored."""
    values: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


_PARAM_FIELDS = {f.name: f.type for f in dataclasses.fields(SimParams)}
_MODEL_FIELDS = {f.name: f.type for f in dataclasses.fields(FrameSizeModel)}
_UNIT_FIELDS = {f.name: f.type for f in dataclasses.fields(TimeUnits)}


def _coerce(raw: str, kind: object) -> object:
    text = str(kind)
    if "float" in text:
        return float(raw)
    if "str" in text:
        return raw
    return int(raw)


def apply_param_overrides(
    values: dict[str, str],
) -> tuple[dict[str, object], dict[str, object]]:
    """Split raw overrides into SimParams kwargs and FrameSizeModel kwargs."""
    params_kw: dict[str, object] = {}
    model_kw: dict[str, object] = {}
    units_kw: dict[str, object] = {}
    for key, raw in values.items():
        if key == "stra":
            params_kw["stra"] = SensingAntennaConfig.parse(raw)
        elif key in ("access", "access_method"):
            params_kw["access_method"] = AccessMethod(raw)
        elif key in _PARAM_FIELDS and key != "units":
            params_kw[key] = _coerce(raw, _PARAM_FIELDS[key])
        elif key in _UNIT_FIELDS:
            units_kw[key] = _coerce(raw, _UNIT_FIELDS[key])
        elif key in _MODEL_FIELDS:
            model_kw[key] = _coerce(raw, _MODEL_FIELDS[key])
        else:
            raise ConfigError(f"unknown parameter {key!r}")
    if units_kw:
        base = TimeUnits()
        units_kw.setdefault("sifs_us", base.sifs_us)
        units_kw.setdefault("slot_us", base.slot_us)
        units_kw.setdefault("pifs_us", units_kw["sifs_us"] + units_kw["slot_us"])
        units_kw.setdefault("difs_us", units_kw["sifs_us"] + 2 * units_kw["slot_us"])
        params_kw["units"] = TimeUnits(**units_kw)
    return params_kw, model_kw


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bfsim",
        description="Trigger-based WLAN sensing / saturated EDCA coexistence simulator",
    )
    ap.add_argument("--config", type=int, choices=(1, 2, 3), help="run a standard sweep")
    ap.add_argument("--access", choices=("edca", "pifs", "none"), default="pifs")
    ap.add_argument("--nsta", type=int, default=4)
    ap.add_argument("--numapp", type=int, default=4)
    ap.add_argument("--saw-duration", type=int, default=127, metavar="CODE")
    ap.add_argument("--stra", default="2x2", metavar="TxR")
    ap.add_argument("--duration-s", type=float, default=100.0)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", metavar="FILE", help="CSV output path (sweeps require it)")
    ap.add_argument("--trace", metavar="FILE", help="write an event trace")
    ap.add_argument("--window-ledger", metavar="FILE", help="write per-window ledger CSV")
    ap.add_argument("--param-file", metavar="FILE", help="key=value overrides")
    ap.add_argument("--workers", type=int, default=1, help="parallel sweep processes")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params_kw: dict[str, object] = {}
        model_kw: dict[str, object] = {}
        if args.param_file:
            params_kw, model_kw = apply_param_overrides(load_param_file(args.param_file))
        model = FrameSizeModel(**model_kw) if model_kw else None

        if args.config is not None:
            if not args.out:
                raise ConfigError("sweeps need --out FILE")
            spec = SweepSpec(
                config_id=args.config,
                access=AccessMethod(args.access),
                duration_s=args.duration_s,
                seed=args.seed,
            )
            rows = run_sweep(spec, args.out, model=model, workers=args.workers)
            print(f"wrote {len(rows)} rows to {args.out}")
            return 0

        params_kw.setdefault("n_sta", args.nsta)
        params_kw.setdefault("num_app", args.numapp)
        params_kw.setdefault("saw_duration_code", args.saw_duration)
        params_kw.setdefault("stra", SensingAntennaConfig.parse(args.stra))
        params_kw.setdefault("access_method", AccessMethod(args.access))
        params_kw.setdefault("sim_duration_s", args.duration_s)
        params_kw.setdefault("rng_seed", args.seed)
        params = SimParams(**params_kw)
        row = run_single(
            params, model=model, trace_path=args.trace, ledger_path=args.window_ledger
        )
        if args.out:
            with open(args.out, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(CSV_HEADER)
                w.writerow(row.as_csv())
        header = ",".join(CSV_HEADER)
        print(header)
        print(",".join(row.as_csv()))
        return 0
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
