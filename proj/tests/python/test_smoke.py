"""Smoke tests of the Python bindings."""

import json
import math

import pytest

import wurkit


def test_decode_matches_oracle():
    trace, activity = wurkit.run_stream("101", "0101")
    assert trace == "0001"
    assert activity["cycles"] == 4 and activity["wakes"] == 1
    assert wurkit.wake_oracle("1111", "1101", m=1) == "0001"
    assert wurkit.run_stream("10011101", "0001101", len=4)[0] == "0000001"
    assert wurkit.run_stream("101", "0101", arch="legacy")[0] == "0001"


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError, match="position 2"):
        wurkit.run_stream("10X1", "0101")
    with pytest.raises(wurkit.ConfigError):
        wurkit.run_stream("101", "0101", len=0)
    with pytest.raises(wurkit.InfeasibleError):
        wurkit.build_codebook(3, 3, 1)


def test_models():
    assert wurkit.p_lpsd(8, 1, 0.1) == pytest.approx(0.81310473, abs=1e-8)
    assert wurkit.p_conv(8, 0.1) == pytest.approx(0.43046721)
    assert wurkit.ber(0.5, math.log(5)) == pytest.approx(0.1)
    assert wurkit.max_delay("lpsd", 64, 2) - wurkit.max_delay("lpsd", 64, 0) == pytest.approx(10e-12)
    assert wurkit.area("lpsd", 64, 0) == (1866.24, False)
    assert wurkit.eta(3.0, 3.0) == 100


def test_power_and_calibration():
    lp = wurkit.estimate_power("lpsd", 64)
    lg = wurkit.estimate_power("legacy", 64)
    assert lp["total_w"] == pytest.approx(68e-9, rel=0.05)
    assert lp["total_w"] < lg["total_w"]
    doc = json.loads(wurkit.calibrate())
    assert len(doc["anchors"]) == 2


def test_monte_carlo_and_codebook():
    est, err = wurkit.monte_carlo_detection("1011001110001111", 1, 0.05, 5000, seed=3)
    assert abs(est - wurkit.p_lpsd(16, 1, 0.05)) <= 3 * err + 1e-12
    book = wurkit.build_codebook(4, 8, 1)
    assert book[0] == "00000000"
    assert wurkit.false_wake_rate(book, 1, 0.0, 1000) == (0.0, 0.0)


def test_stream_generation():
    bits, placements = wurkit.gen_test_stream("1011001110001111", seed=4)
    assert len(bits) == 5000
    kinds = {kind for _, kind, _ in placements}
    assert kinds == {"exact", "near", "half"}
    assert wurkit.gen_test_stream("1011001110001111", seed=4)[0] == bits


def test_energy():
    assert wurkit.energy_avg_power("DL_WUR") == pytest.approx(21e-6)
    rows = wurkit.energy_sweep("dl", "paging_rate", [0.01, 0.1, 0.5])
    gaps = [r[3] for r in rows]
    assert gaps[0] > gaps[1] > gaps[2]
    with_wur, without = wurkit.energy_total_power({"paging_rate_hz": 0.1, "report_rate_hz": 0.01})
    assert with_wur < without
    with pytest.raises(wurkit.ConfigError):
        wurkit.energy_avg_power("DL", {"nope": 1})
