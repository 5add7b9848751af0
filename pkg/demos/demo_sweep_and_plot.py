"""Produce a small sweep CSV and summarize the curves it holds.

The full-scale experiments run through the CLI; this uses short runs so the
demo finishes in about a minute.  The emitted CSV feeds the plotgen frontend:

    node plotgen/dist/cli.js --csv demo_sweep.csv --figure psm \
        --x nsta --group saw --out demo_psm.svg
"""

from collections import defaultdict

from bfsim import AccessMethod, run_sweep
from bfsim.cli import SweepSpec

OUT = "demo_sweep.csv"

spec = SweepSpec(config_id=1, access=AccessMethod.PIFS, duration_s=5.0, seed=1)
rows = run_sweep(spec, OUT, workers=2)
print(f"wrote {len(rows)} rows to {OUT}")

by_saw = defaultdict(list)
for row in rows:
    by_saw[row.saw_code].append(row)

print(f"\n{'saw':>4s} {'psm range %':>14s} {'pso range %':>16s}")
for saw, group in sorted(by_saw.items()):
    group.sort(key=lambda r: r.nsta)
    psm = [r.psm_pct for r in group]
    pso = [r.pso_pct for r in group]
    print(f"{saw:4d} {min(psm):6.1f}..{max(psm):5.1f} {min(pso):8.3f}..{max(pso):6.3f}")

print("\nthe 1 ms window (code 10) misses everything; codes 90 and 127 miss nothing")
