"""Itemize how one application's measurement exchange spends window time.

Shows the allocation-table cliff: the per-station resource unit shrinks as
stations are added, so the parallel report upload dominates the budget.
"""

from bfsim import FrameSizeModel, SensingDemand, SimParams, ru_tones_per_sta
from bfsim.sensing import ExchangeKind

model = FrameSizeModel()

print(f"{'nsta':>4s} {'RU':>4s} {'exchange us (per app)':>22s} "
      f"{'counted us':>11s} {'window demand us':>17s}")
for nsta in (1, 2, 4, 8, 9, 10, 16):
    params = SimParams(n_sta=nsta, num_app=4)
    demand = SensingDemand.build(params, model)
    per_app = [ex for ex in demand.exchanges if ex.app == 0]
    elapsed = sum(ex.duration_ds for ex in per_app) / 10
    counted = sum(ex.counted_ds for ex in per_app) / 10
    total = sum(ex.duration_ds for ex in demand.exchanges) / 10
    print(f"{nsta:4d} {ru_tones_per_sta(nsta):4d} {elapsed:22.1f} "
          f"{counted:11.1f} {total:17.1f}")

print("\nbreakdown for 16 stations, one app:")
demand = SensingDemand.build(SimParams(n_sta=16, num_app=1), model)
for ex in demand.exchanges:
    names = {
        ExchangeKind.POLL: "polling (uncounted)",
        ExchangeKind.SOUNDING: "announcement sounding",
        ExchangeKind.TF_SOUNDING: "trigger sounding (uncounted)",
        ExchangeKind.REPORT: "report upload",
    }
    print(f"  {names[ex.kind]:30s} {ex.duration_ds / 10:8.1f} us "
          f"(counted {ex.counted_ds / 10:.1f})")
