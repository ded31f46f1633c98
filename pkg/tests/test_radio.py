import pytest
from hypothesis import given
from hypothesis import strategies as st

from mapsim import (
    SimConfig,
    alpha_sinr,
    compute_sinr,
    link_bandwidth,
    make_link_stats,
    path_delay,
)

CFG = SimConfig()


def test_sinr_oracle_no_interference():
    # 2 W over 100 m at exponent 4 is 2e-8 W received, against 1e-13 W noise
    assert compute_sinr(2.0, 100.0, [], CFG) == pytest.approx(2e5, rel=1e-12)


def test_sinr_oracle_one_interferer():
    # same link jammed from 200 m; value derived by hand
    got = compute_sinr(2.0, 100.0, [200.0], CFG)
    assert got == pytest.approx(15.998720102391808, rel=1e-12)


def test_sinr_distance_floor():
    assert compute_sinr(2.0, 0.0, [], CFG) == compute_sinr(2.0, 1.0, [], CFG)
    assert compute_sinr(2.0, 0.5, [], CFG) == compute_sinr(2.0, 1.0, [], CFG)


@given(st.lists(st.floats(10.0, 5000.0), min_size=1, max_size=5))
def test_interference_always_hurts(interferers):
    clean = compute_sinr(2.0, 150.0, [], CFG)
    assert compute_sinr(2.0, 150.0, interferers, CFG) < clean


def test_bandwidth_oracles():
    assert link_bandwidth(1.0, 1, CFG) == 2.0
    assert link_bandwidth(3.0, 2, CFG) == 2.0


def test_bandwidth_rejects_zero_attachment():
    with pytest.raises(ValueError):
        link_bandwidth(100.0, 0, CFG)


@given(
    sinr=st.floats(0.01, 1e9),
    n=st.integers(1, 50),
)
def test_bandwidth_shares_conserve_the_pool(sinr, n):
    # n equal shares never exceed the single occupant rate
    share = link_bandwidth(sinr, n, CFG)
    assert n * share == pytest.approx(link_bandwidth(sinr, 1, CFG), rel=1e-9)


def test_delay_oracles():
    assert path_delay(100.0, 20.0, CFG) == 6.5
    assert path_delay(50.0, 5.0, CFG) == 6.75
    assert path_delay(0.0, 1e6, CFG) == 1e-05


def test_delay_rejects_nonpositive_sinr():
    with pytest.raises(ValueError):
        path_delay(100.0, 0.0, CFG)
    with pytest.raises(ValueError):
        path_delay(100.0, -3.0, CFG)


def test_alpha_sinr_floor_at_threshold():
    assert alpha_sinr(CFG.sinr_threshold, CFG) == CFG.b0
    assert alpha_sinr(CFG.sinr_threshold * 10, CFG) == CFG.b0
    assert alpha_sinr(CFG.sinr_threshold / 2, CFG) == 2 * CFG.b0


@given(
    d1=st.floats(0.0, 5000.0),
    d2=st.floats(0.0, 5000.0),
)
def test_delay_monotone_in_distance(d1, d2):
    lo, hi = sorted((d1, d2))
    assert path_delay(lo, 50.0, CFG) <= path_delay(hi, 50.0, CFG)


@given(
    s1=st.floats(0.01, 1e8),
    s2=st.floats(0.01, 1e8),
)
def test_delay_monotone_in_sinr(s1, s2):
    lo, hi = sorted((s1, s2))
    assert path_delay(100.0, hi, CFG) <= path_delay(100.0, lo, CFG)


def test_make_link_stats_consistent():
    stats = make_link_stats(7, 3, 190.0, CFG, attached_count=2)
    assert stats.vehicle == 7
    assert stats.map_ident == 3
    assert stats.sinr == compute_sinr(CFG.tx_power, 190.0, [], CFG)
    assert stats.total_delay == path_delay(190.0, stats.sinr, CFG)
    assert stats.bandwidth == link_bandwidth(stats.sinr, 2, CFG)
    assert stats.total_delay == stats.trans_delay + stats.sinr_delay
