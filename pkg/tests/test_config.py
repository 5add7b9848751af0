import pytest

from bfsim import (
    AccessMethod,
    ConfigError,
    SensingAntennaConfig,
    SimParams,
    TimeUnits,
    ru_tones_per_sta,
    saw_duration_us,
    saw_period_us,
    stas_per_sounding_round,
)


class TestRuAllocation:
    def test_table_values(self):
        assert ru_tones_per_sta(1) == 996
        assert ru_tones_per_sta(2) == 484
        assert ru_tones_per_sta(3) == 242
        assert ru_tones_per_sta(4) == 242
        assert ru_tones_per_sta(7) == 106
        assert ru_tones_per_sta(9) == 106
        assert ru_tones_per_sta(10) == 52
        assert ru_tones_per_sta(16) == 52

    @pytest.mark.parametrize("bad", [0, -1, 17, 100])
    def test_out_of_range(self, bad):
        with pytest.raises(ConfigError):
            ru_tones_per_sta(bad)

    def test_allocations_fit_the_band(self):
        for n in range(1, 17):
            assert n * ru_tones_per_sta(n) <= 996

    def test_non_increasing(self):
        tones = [ru_tones_per_sta(n) for n in range(1, 17)]
        assert tones == sorted(tones, reverse=True)


class TestSawCodes:
    def test_duration(self):
        assert saw_duration_us(127) == 12700
        assert saw_duration_us(10) == 1000
        assert saw_duration_us(1) == 100

    def test_duration_bounds(self):
        for bad in (0, 128, -3):
            with pytest.raises(ConfigError):
                saw_duration_us(bad)

    def test_period(self):
        assert saw_period_us(1) == 102400
        assert saw_period_us(2) == 204800
        with pytest.raises(ConfigError):
            saw_period_us(0)

    def test_exactly_linear(self):
        for code in range(1, 128):
            assert saw_duration_us(code) == code * 100
        for code in range(1, 10):
            assert saw_period_us(code) == code * 102400


class TestSoundingRounds:
    def test_examples(self):
        assert stas_per_sounding_round(8, SensingAntennaConfig(2, 2)) == 4
        assert stas_per_sounding_round(8, SensingAntennaConfig(8, 2)) == 1
        assert stas_per_sounding_round(8, SensingAntennaConfig(4, 2)) == 2

    def test_never_exceeds_antennas(self):
        for tx in (1, 2, 4, 8):
            stra = SensingAntennaConfig(tx, 2)
            assert stas_per_sounding_round(8, stra) * tx <= 8


class TestAntennaConfig:
    def test_parse_roundtrip(self):
        for text in ("1x1", "2x2", "4x2", "8x2"):
            assert str(SensingAntennaConfig.parse(text)) == text

    @pytest.mark.parametrize("bad", ["3x2", "2x3", "0x1", "2", "x", "2x2x2"])
    def test_rejects(self, bad):
        with pytest.raises(ConfigError):
            SensingAntennaConfig.parse(bad)


class TestTimeUnits:
    def test_defaults_consistent(self):
        u = TimeUnits()
        assert u.pifs_us == u.sifs_us + u.slot_us == 25
        assert u.difs_us == u.sifs_us + 2 * u.slot_us == 34

    def test_inconsistent_rejected(self):
        with pytest.raises(ConfigError):
            TimeUnits(sifs_us=16, slot_us=9, pifs_us=26)


class TestSimParams:
    def test_defaults_valid(self):
        p = SimParams()
        assert p.saw_duration == 12700
        assert p.saw_period == 102400
        assert p.stas_per_round == 4

    def test_window_must_fit_period(self):
        # 127 * 100 us < 102400 us always holds; a period code of zero cannot.
        with pytest.raises(ConfigError):
            SimParams(saw_period_code=0)

    def test_antenna_limits(self):
        with pytest.raises(ConfigError):
            SimParams(stra=SensingAntennaConfig(2, 2), sta_antennas=1)

    def test_nsc_upper_bound(self):
        SimParams(n_sc=250)  # table-style rounding of 996/4 is tolerated
        with pytest.raises(ConfigError):
            SimParams(n_sc=251)

    def test_bad_counts(self):
        with pytest.raises(ConfigError):
            SimParams(n_sta=0)
        with pytest.raises(ConfigError):
            SimParams(n_sta=17)
        with pytest.raises(ConfigError):
            SimParams(num_app=0)
        with pytest.raises(ConfigError):
            SimParams(mcs_index=12)

    def test_access_methods(self):
        assert AccessMethod("edca") is AccessMethod.EDCA
        assert AccessMethod("pifs") is AccessMethod.PIFS
        assert AccessMethod("none") is AccessMethod.NO_SENSING
