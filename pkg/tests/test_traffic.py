import pytest

from bfsim import DataBurst, FrameSizeModel, SimParams, fill_data_txop


@pytest.fixture
def burst():
    return DataBurst.build(SimParams(), FrameSizeModel())


class TestDataBurst:
    def test_payload_bits(self, burst):
        assert burst.bits == 10 * 1500 * 8 == 120000

    def test_cycle_composition(self, burst):
        assert burst.cycle_ds == burst.ppdu_ds + burst.sifs_ds + burst.ba_ds
        # 120000 bits over 8820 bits/symbol is 14 symbols.
        assert burst.ppdu_ds == 440 + 14 * 136


class TestFillDataTxop:
    def test_exactly_one_cycle(self, burst):
        bits, occupied = fill_data_txop(burst, burst.cycle_ds / 10.0)
        assert bits == 120000
        assert occupied == pytest.approx(burst.cycle_ds / 10.0)

    def test_full_txop_packing(self, burst):
        bits, occupied = fill_data_txop(burst, 5484.0)
        cycle = burst.cycle_ds
        step = cycle + burst.sifs_ds
        expected_cycles = 1 + (54840 - cycle) // step
        assert bits == expected_cycles * 120000
        assert occupied <= 5484.0

    def test_zero_limit(self, burst):
        assert fill_data_txop(burst, 0.0) == (0, 0.0)

    def test_limit_below_one_cycle(self, burst):
        bits, occupied = fill_data_txop(burst, burst.cycle_ds / 10.0 - 0.1)
        assert bits == 0 and occupied == 0.0

    def test_bits_always_multiple_of_burst(self, burst):
        for limit in (300.0, 1000.0, 2500.0, 5484.0):
            bits, _ = fill_data_txop(burst, limit)
            assert bits % 120000 == 0

    def test_occupied_never_exceeds_limit(self, burst):
        for limit in (258.4, 532.8, 5484.0, 10000.0):
            _, occupied = fill_data_txop(burst, limit)
            assert occupied <= limit
