"""Walk through one simulation run and unpack what the engine produced.

A short run (2 s, ~19 availability windows) keeps the output readable.
"""

from bfsim import (
    AccessMethod,
    Classification,
    RunMetrics,
    SimParams,
    Simulation,
)

params = SimParams(
    n_sta=8,
    num_app=4,
    saw_duration_code=127,
    access_method=AccessMethod.PIFS,
    sim_duration_s=2.0,
    rng_seed=42,
)

print(f"stations={params.n_sta} apps={params.num_app} "
      f"window={params.saw_duration} us every {params.saw_period} us "
      f"access={params.access_method.value}")

result = Simulation(params).run()
metrics = RunMetrics.from_run(result)

print(f"\nwindows simulated: {result.window_count}")
print(f"sensing overhead : {metrics.pso_pct:.3f} % of airtime")
print(f"missed windows   : {metrics.psm_pct:.1f} %")
print(f"data throughput  : {metrics.throughput_mbps:.1f} Mb/s")
print(f"window available : {metrics.pawd_pct:.1f} %")

print("\nper-window ledger (first five):")
for led, cls_ in list(zip(result.ledgers, result.classifications))[:5]:
    print(
        f"  window {led.window_index}: sent {led.sent_bytes}/{led.required_bytes} B, "
        f"rounds {led.sounding_rounds_done}/{led.required_rounds}, {cls_.value}"
    )

print("\ntime partition (ms):")
for bucket, ds_total in result.totals.buckets.items():
    print(f"  {bucket:18s} {ds_total / 10_000:.3f}")
total = sum(result.totals.buckets.values())
assert total == result.totals.sim_time_ds
print(f"  {'sum':18s} {total / 10_000:.3f}  (exactly the simulated time)")

complete = sum(1 for c in result.classifications if c is Classification.COMPLETE)
print(f"\n{complete}/{result.window_count} windows complete")
