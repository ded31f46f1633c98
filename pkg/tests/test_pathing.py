import pytest

from mapsim import (
    SimConfig,
    baseline_paths,
    count_handovers,
    grow_paths,
    make_link_stats,
    retain_paths,
    ring_distance,
    select_paths,
)

CFG = SimConfig()


def make_provider(cfg, pos):
    def provider(vehicle, m, att):
        d = ring_distance(pos[vehicle], pos[m], cfg.road_length)
        return make_link_stats(vehicle, m, d, cfg, att)

    return provider


def candidates_for(cfg, pos, vehicle, maps):
    return [(ring_distance(pos[vehicle], pos[m], cfg.road_length), m) for m in maps]


def test_count_handovers_oracles():
    assert count_handovers((), (1,)) == 1
    assert count_handovers((1,), ()) == 0
    assert count_handovers((1, 2), (2, 3)) == 1
    assert count_handovers((1, 2), (1, 2)) == 0
    assert count_handovers((1, 2), (3, 4)) == 2


def test_select_paths_takes_two_nearest():
    pos = {0: 0.0, 10: 100.0, 11: 200.0, 12: 240.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10, 11, 12])
    counts = {}
    pa = select_paths(0, cand, provider, (), counts, CFG)
    assert pa.paths == (10, 11)
    assert [s.distance for s in pa.stats] == [100.0, 200.0]
    assert counts == {10: 1, 11: 1}


def test_out_of_window_map_skipped():
    # transmission delay alone exceeds the bound beyond ~262 m at defaults
    pos = {0: 0.0, 10: 400.0, 11: 150.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10, 11])
    pa = select_paths(0, cand, provider, (), {}, CFG)
    assert pa.paths == (11,)


def test_retention_beats_nearer_newcomer():
    cfg = CFG.replace(max_paths=1)
    pos = {0: 0.0, 10: 50.0, 12: 200.0}
    provider = make_provider(cfg, pos)
    cand = candidates_for(cfg, pos, 0, [10, 12])
    pa = select_paths(0, cand, provider, (12,), {}, cfg)
    assert pa.paths == (12,)


def test_retention_ignores_dead_map():
    pos = {0: 0.0, 10: 50.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10])
    pa = select_paths(0, cand, provider, (99,), {}, CFG)
    assert pa.paths == (10,)


def test_retention_requalifies_under_current_geometry():
    # previously held access point has drifted out of the window
    pos = {0: 0.0, 10: 300.0, 11: 120.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10, 11])
    held = retain_paths(0, (10,), cand, provider, {}, CFG)
    assert held == []
    pa = select_paths(0, cand, provider, (10,), {}, CFG)
    assert pa.paths == (11,)


# b_cap 0.16 at 300 m: one attachment earns 1.80 Mbps, a second would get
# 0.90 Mbps and miss the 1 Mbps floor
SCARCE = CFG.replace(b_cap=0.16, delay_threshold=30.0)


def test_bandwidth_slot_competition():
    pos = {1: 300.0, 2: 9700.0, 50: 0.0}
    provider = make_provider(SCARCE, pos)
    counts = {}
    first = select_paths(1, candidates_for(SCARCE, pos, 1, [50]), provider, (), counts, SCARCE)
    second = select_paths(2, candidates_for(SCARCE, pos, 2, [50]), provider, (), counts, SCARCE)
    assert first.paths == (50,)
    assert second.paths == ()
    assert counts == {50: 1}


def test_incumbent_keeps_slot_against_lower_id_newcomer():
    pos = {1: 300.0, 2: 9700.0, 50: 0.0}
    provider = make_provider(SCARCE, pos)
    counts = {}
    cand1 = candidates_for(SCARCE, pos, 1, [50])
    cand2 = candidates_for(SCARCE, pos, 2, [50])
    # retention pass runs for every vehicle before any growth happens
    held1 = retain_paths(1, (), cand1, provider, counts, SCARCE)
    held2 = retain_paths(2, (50,), cand2, provider, counts, SCARCE)
    pa1 = grow_paths(1, held1, cand1, provider, counts, SCARCE)
    pa2 = grow_paths(2, held2, cand2, provider, counts, SCARCE)
    assert pa2.paths == (50,)
    assert pa1.paths == ()


def test_grow_skips_already_held():
    pos = {0: 0.0, 10: 100.0, 11: 150.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10, 11])
    counts = {}
    held = retain_paths(0, (10,), cand, provider, counts, CFG)
    pa = grow_paths(0, held, cand, provider, counts, CFG)
    assert pa.paths == (10, 11)
    assert counts == {10: 1, 11: 1}


class StubIntRng:
    def __init__(self, values):
        self.values = list(values)

    def integers(self, low, high):
        v = self.values.pop(0)
        assert low <= v < high
        return v


def test_sequence_rotates_through_roster():
    pos = {0: 0.0, 10: 0.0, 11: 0.0, 12: 0.0, 13: 0.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10, 11, 12, 13])
    picks = []
    for r in range(5):
        pa = baseline_paths("sequence-based", 0, 1, r, cand, provider, {}, None, CFG)
        picks.append(pa.paths[0])
    assert picks == [11, 12, 13, 10, 11]


def test_sequence_respects_admission():
    pos = {0: 0.0, 10: 3000.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10])
    counts = {}
    pa = baseline_paths("sequence-based", 0, 0, 0, cand, provider, counts, None, CFG)
    assert pa.paths == ()
    assert counts == {}


def test_distance_based_attaches_unconditionally():
    pos = {0: 0.0, 20: 3000.0, 21: 5000.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [20, 21])
    counts = {}
    pa = baseline_paths("distance-based", 0, 0, 0, cand, provider, counts, None, CFG)
    assert pa.paths == (20,)
    assert pa.stats[0].total_delay > CFG.delay_threshold
    assert counts == {20: 1}


def test_random_uses_the_rng_index():
    pos = {0: 0.0, 20: 3000.0, 21: 5000.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [21, 20])
    pa = baseline_paths("independent-random", 0, 0, 0, cand, provider, {}, StubIntRng([1]), CFG)
    assert pa.paths == (21,)


def test_empty_roster_disconnects():
    for strategy in ("independent-random", "distance-based", "sequence-based"):
        pa = baseline_paths(strategy, 0, 0, 0, [], None, {}, None, CFG)
        assert pa.paths == ()


def test_unknown_strategy_rejected():
    pos = {0: 0.0, 10: 10.0}
    provider = make_provider(CFG, pos)
    cand = candidates_for(CFG, pos, 0, [10])
    with pytest.raises(ValueError):
        baseline_paths("psychic", 0, 0, 0, cand, provider, {}, None, CFG)
