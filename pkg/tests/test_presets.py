import pytest

from varreg.presets import PRESET_IDS, PRESETS, get_preset, preset_checksum

PINNED = "b01d47a0f874f6486427e00696db7856bfedf49f27eefe0735fe732d7de9a3f6"


def test_ids():
    assert PRESET_IDS == ("1L", "1R", "2L", "2R", "3L", "3R", "4L", "4R", "5L", "5R", "6L", "6R")


def test_checksum_pins_values():
    assert preset_checksum() == PINNED


def test_sample_values():
    p = get_preset("6l")
    assert p.z0 == 0.556307 - 0.814404j
    assert p.lam == 0.226895 - 0.384635j
    assert p.mu == 13589.3 - 25797.8j


def test_all_valid():
    for p in PRESETS.values():
        assert abs(p.z0) < 1 and abs(p.lam) < 1 and p.mu.real > 0


def test_unknown():
    with pytest.raises(KeyError):
        get_preset("7L")
