"""Contrast the two ways the initiator can seize the medium, plus no sensing.

Priority grab (PIFS) gets the whole window deterministically; contention
(EDCA) shares it with saturated uplink data and sometimes loses it.
"""

from bfsim import AccessMethod, RunMetrics, SimParams, Simulation

DURATION_S = 20.0

print(f"{'access':10s} {'pso %':>8s} {'psm %':>8s} {'thrpt Mb/s':>11s} {'pawd %':>8s}")
for access in (AccessMethod.PIFS, AccessMethod.EDCA, AccessMethod.NO_SENSING):
    params = SimParams(
        n_sta=12,
        num_app=4,
        saw_duration_code=127,
        access_method=access,
        sim_duration_s=DURATION_S,
        rng_seed=7,
    )
    m = RunMetrics.from_run(Simulation(params).run())
    psm = f"{m.psm_pct:8.2f}" if m.psm_pct is not None else "       -"
    pawd = f"{m.pawd_pct:8.2f}" if m.pawd_pct is not None else "       -"
    print(f"{access.value:10s} {m.pso_pct:8.3f} {psm} {m.throughput_mbps:11.1f} {pawd}")

print(
    "\nPriority access never misses here; contention access trades some misses"
    "\nand availability for slightly less sensing overhead."
)
