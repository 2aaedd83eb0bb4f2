import math

import pytest

import _winokit as wk

DISC_F43 = ["0", "5/6", "-5/6", "7/6", "-7/6"]
STD_F43 = ["0", "1", "-1", "2", "-2"]


def test_construct_and_verify():
    t = wk.construct(4, 3, DISC_F43)
    assert t["m"] == 4 and t["r"] == 3
    assert len(t["AT"]) == 4 and len(t["AT"][0]) == 6
    assert len(t["G_f64"]) == 6 and len(t["G_f64"][0]) == 3
    assert wk.verify(4, 3, DISC_F43)
    assert wk.verify(4, 3, STD_F43)


def test_verify_rejects_duplicates():
    with pytest.raises(Exception):
        wk.verify(2, 3, ["0", "1", "1"])


def test_kappa2():
    assert wk.kappa2([[1.0, 0.0], [0.0, 1.0]]) == pytest.approx(1.0)
    v = [[p ** j for j in range(5)] for p in [0, 5 / 6, -5 / 6, 7 / 6, -7 / 6]]
    assert wk.kappa2(v) == pytest.approx(14.5456, rel=1e-3)


def test_analyze():
    rep = wk.analyze(4, 3, DISC_F43)
    assert rep["kappa2_v"] == pytest.approx(14.5456, rel=1e-3)
    assert rep["kappa2_v_2d"] == pytest.approx(14.5456 ** 2, rel=1e-2)
    assert rep["norm_product"] > 0


def test_discover_symmetric():
    res = wk.discover(4, 3, mode="symmetric")
    assert res["verified"]
    assert sorted(res["points"]) == sorted(DISC_F43)


def test_measure_tile_error():
    d = wk.measure_tile_error(4, 3, DISC_F43, precision="int8", samples=50, seed=42)
    s = wk.measure_tile_error(4, 3, STD_F43, precision="int8", samples=50, seed=42)
    assert 0 < d["mean_rel_l2"] < s["mean_rel_l2"]
    again = wk.measure_tile_error(4, 3, DISC_F43, precision="int8", samples=50, seed=42)
    assert again["mean_rel_l2"] == d["mean_rel_l2"]


def test_snap_and_fp16():
    assert wk.snap_to_rational(0.8333) == "5/6"
    assert wk.round_fp16(1.0) == 1.0
    assert wk.round_fp16(5 / 6) != 5 / 6
    assert math.isinf(wk.round_fp16(70000.0))


def test_catalog():
    cat = {e["name"]: e for e in wk.catalog()}
    assert cat["disc-F43"]["points"] == DISC_F43
    assert cat["std-F63"]["reference_kappa2"] == pytest.approx(2074.51, rel=1e-2)
