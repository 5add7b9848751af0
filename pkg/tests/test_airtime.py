import math
import random
from fractions import Fraction

import pytest

from bfsim import (
    ConfigError,
    FrameSizeModel,
    csi_size_bytes,
    frame_airtime_us,
    mcs_entry,
    ndp_airtime_us,
    ndpa_airtime_us,
    ofdma_rate_bps,
    report_airtime_us,
)
from bfsim.airtime import RU_DATA_SUBCARRIERS, bits_per_symbol, report_symbols


def csi_size_oracle(n_tx, n_rx, n_b, n_sc):
    """Independent evaluation with exact rational arithmetic."""
    first = math.ceil(Fraction(3, 2) * n_tx * n_rx)
    middle = math.ceil(Fraction(n_tx * n_rx * n_b * n_sc, 4))
    return first + middle + 2 * n_rx


class TestCsiSize:
    def test_hand_values(self):
        assert csi_size_bytes(2, 2, 8, 250) == 2010  # 6 + 2000 + 4
        assert csi_size_bytes(1, 1, 8, 250) == 504  # 2 + 500 + 2
        assert csi_size_bytes(8, 2, 8, 250) == 8028  # 24 + 8000 + 4

    def test_oracle_1000_random_tuples(self):
        rng = random.Random(0xC51)
        for _ in range(1000):
            n_tx = rng.randint(1, 8)
            n_rx = rng.randint(1, 2)
            n_b = rng.choice((4, 8))
            n_sc = rng.randint(50, 996)
            assert csi_size_bytes(n_tx, n_rx, n_b, n_sc) == csi_size_oracle(
                n_tx, n_rx, n_b, n_sc
            )

    def test_strictly_increasing_in_each_argument(self):
        base = (2, 2, 8, 250)
        ref = csi_size_bytes(*base)
        for i in range(4):
            bumped = list(base)
            bumped[i] += 1
            assert csi_size_bytes(*bumped) > ref

    def test_rejects_nonpositive(self):
        with pytest.raises(ConfigError):
            csi_size_bytes(0, 1, 8, 250)
        with pytest.raises(ConfigError):
            csi_size_bytes(2, 2, 8, 0)


class TestOfdmaRate:
    def test_full_band_two_streams(self):
        # 980 * 6 * 0.75 * 2 bits per 13.6 us symbol
        rate = ofdma_rate_bps(996, mcs_entry(6), 2)
        assert rate == pytest.approx(648.5e6, rel=1e-3)

    def test_smallest_allocation(self):
        rate = ofdma_rate_bps(52, mcs_entry(6), 2)
        assert rate == pytest.approx(31.8e6, rel=1e-2)

    def test_single_stream_base_rate(self):
        rate = ofdma_rate_bps(26, mcs_entry(0), 1)
        assert rate == pytest.approx(0.88e6, rel=1e-2)

    def test_linear_in_streams(self):
        for ru in RU_DATA_SUBCARRIERS:
            one = ofdma_rate_bps(ru, mcs_entry(6), 1)
            two = ofdma_rate_bps(ru, mcs_entry(6), 2)
            assert two == pytest.approx(2 * one)

    def test_unknown_ru(self):
        with pytest.raises(ConfigError):
            ofdma_rate_bps(100, mcs_entry(6), 1)

    def test_mcs6_is_64qam_three_quarters(self):
        e = mcs_entry(6)
        assert e.bits_per_subcarrier == 6
        assert (e.coding_num, e.coding_den) == (3, 4)


class TestFrameAirtime:
    def test_empty_payload_is_preamble_only(self):
        assert frame_airtime_us(0, 24e6, 20.0) == 20.0

    def test_symbol_rounded_payload(self):
        # 12000 bits at 24 Mb/s is 500 us, an exact symbol multiple.
        assert frame_airtime_us(1500, 24e6, 20.0) == 520.0

    def test_rounds_up_to_symbol(self):
        # 8 bits at 24 Mb/s and 4 us symbols: one whole symbol.
        assert frame_airtime_us(1, 24e6, 0.0) == 4.0

    def test_payload_monotone(self):
        small = frame_airtime_us(100, 24e6, 20.0)
        big = frame_airtime_us(200, 24e6, 20.0)
        assert big - 20.0 >= 2 * (small - 20.0) - 4.0  # within one symbol

    def test_zero_rate_rejected(self):
        with pytest.raises(ConfigError):
            frame_airtime_us(100, 0, 20.0)


class TestNdpa:
    def test_size_grows_with_round(self):
        model = FrameSizeModel()
        assert ndpa_airtime_us(4, model) >= ndpa_airtime_us(1, model)

    def test_byte_count_through_frame_airtime(self):
        # With 4-byte per-responder info fields a 4-STA round is 37 bytes.
        model = FrameSizeModel(ndpa_per_sta_info_bytes=4)
        expected = frame_airtime_us(
            37, model.control_rate_mbps * 1e6, model.control_preamble_us,
            model.control_symbol_us,
        )
        assert ndpa_airtime_us(4, model) == expected
        expected_1 = frame_airtime_us(
            25, model.control_rate_mbps * 1e6, model.control_preamble_us,
            model.control_symbol_us,
        )
        assert ndpa_airtime_us(1, model) == expected_1

    def test_rejects_empty_round(self):
        with pytest.raises(ConfigError):
            ndpa_airtime_us(0, FrameSizeModel())


class TestNdp:
    def test_monotone_in_streams(self):
        model = FrameSizeModel()
        assert ndp_airtime_us(8, model) > ndp_airtime_us(2, model)

    def test_training_field_structure(self):
        model = FrameSizeModel(
            legacy_preamble_us=20.0, he_preamble_base_us=16.0, he_ltf_us_per_stream=13.6
        )
        assert ndp_airtime_us(1, model) == pytest.approx(20 + 16 + 13.6)
        assert ndp_airtime_us(8, model) == pytest.approx(20 + 16 + 8 * 13.6)
        # 3 streams round up to 4 training fields.
        assert ndp_airtime_us(3, model) == pytest.approx(20 + 16 + 4 * 13.6)


class TestReportAirtime:
    def test_symbol_count_and_duration(self):
        model = FrameSizeModel()
        # 2010 bytes on a 52-tone RU with 2 streams: 432 bits per symbol.
        assert report_symbols(2010, 52, mcs_entry(6), 2) == 38
        air = report_airtime_us(2010, 52, mcs_entry(6), 2, model)
        assert air == pytest.approx(model.report_preamble_us + 38 * 13.6)
        # Close to the unrounded 16080 bits / 31.8 Mb/s = 506 us.
        assert abs((air - model.report_preamble_us) - 506.0) <= 13.6

    def test_zero_bytes_is_preamble_only(self):
        model = FrameSizeModel()
        assert report_airtime_us(0, 52, mcs_entry(6), 2, model) == model.report_preamble_us

    def test_deterministic(self):
        model = FrameSizeModel()
        a = report_airtime_us(504, 106, mcs_entry(6), 1, model)
        b = report_airtime_us(504, 106, mcs_entry(6), 1, model)
        assert a == b

    def test_airtimes_are_symbol_multiples(self):
        model = FrameSizeModel()
        for ru in (52, 106, 242, 484, 996):
            air = report_airtime_us(2010, ru, mcs_entry(6), 1, model)
            payload = air - model.report_preamble_us
            assert payload == pytest.approx(
                round(payload / model.symbol_duration_us) * model.symbol_duration_us
            )

    def test_bits_per_symbol_exact(self):
        assert bits_per_symbol(52, mcs_entry(6), 2) == 432
        assert bits_per_symbol(996, mcs_entry(6), 2) == 8820
        assert bits_per_symbol(106, mcs_entry(6), 1) == 459
