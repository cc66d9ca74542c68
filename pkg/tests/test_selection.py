"""Configuration selection vs an exhaustive enumeration oracle."""
import itertools
import random

import pytest

from setd2d.radio import CQIReport, FramePlan, capacity_kbits
from setd2d.selection import (
    Configuration, eligible_relays, partition_by_cqi, select_configuration,
)

PLAN = FramePlan()


def brute_force_best(report, registered, trust, threshold):
    """Try every CQI level and every eligible relay assignment; return the
    best (throughput, cqi) with ties to the lower CQI level."""
    best = None  # (thr, c, mc set, pairs)
    for c in range(1, 16):
        u_m = {n for n in registered if report.cellular.get(n, 0) >= c}
        if not u_m:
            continue
        rest = sorted(registered - u_m)
        options = []
        for r in rest:
            cands = [s for s in u_m
                     if report.d2d_cqi(r, s) > 0
                     and trust(r, s) >= threshold]
            options.append(cands)
        if any(not o for o in options):
            continue
        mc = capacity_kbits(c, PLAN, "multicast_dl") * len(u_m)
        for combo in itertools.product(*options):
            thr = mc + sum(capacity_kbits(report.d2d_cqi(r, s), PLAN, "d2d_ul")
                           for r, s in zip(rest, combo))
            if best is None or thr > best[0] + 1e-9:
                best = (thr, c, u_m, tuple(zip(rest, combo)))
    return best


def random_instance(rng, max_nodes=8):
    n = rng.randrange(2, max_nodes + 1)
    registered = set(range(n))
    report = CQIReport()
    for i in registered:
        report.cellular[i] = rng.randrange(1, 16)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                report.d2d[(i, j)] = rng.randrange(1, 16)
    st = {}
    for i in range(n):
        for j in range(n):
            st[(i, j)] = rng.random()
    return report, registered, (lambda r, s: st[(r, s)])


def test_matches_exhaustive_enumeration_on_random_instances():
    rng = random.Random(12345)
    checked = 0
    for _ in range(300):
        report, registered, trust = random_instance(rng)
        threshold = rng.choice([0.0, 0.3, 0.5, 0.8])
        cfg = select_configuration(report, registered, trust, threshold, PLAN)
        want = brute_force_best(report, registered, trust, threshold)
        if want is None:
            # fallback case: everyone served in plain multicast
            assert cfg.pairs == ()
            assert cfg.multicast_served == frozenset(registered)
            continue
        thr, c, u_m, _ = want
        assert cfg.throughput_kbits == pytest.approx(thr)
        assert cfg.multicast_cqi == c
        assert cfg.multicast_served == frozenset(u_m)
        checked += 1
    assert checked > 100


def test_everyone_decodable_gives_no_pairs():
    report = CQIReport(cellular={0: 15, 1: 15, 2: 15})
    cfg = select_configuration(report, {0, 1, 2}, lambda r, s: 1.0, 0.3, PLAN)
    assert cfg.multicast_cqi == 15
    assert cfg.pairs == ()
    assert cfg.multicast_served == frozenset({0, 1, 2})


def test_edge_node_served_through_best_relay():
    report = CQIReport(cellular={0: 15, 1: 15, 2: 1},
                       d2d={(0, 2): 10, (1, 2): 12})
    cfg = select_configuration(report, {0, 1, 2}, lambda r, s: 1.0, 0.3, PLAN)
    assert cfg.multicast_cqi == 15
    assert cfg.pairs == ((2, 1),)


def test_untrusted_relay_is_skipped():
    report = CQIReport(cellular={0: 15, 1: 15, 2: 1},
                       d2d={(0, 2): 10, (1, 2): 12})
    trust = lambda r, s: 0.1 if s == 1 else 0.9
    cfg = select_configuration(report, {0, 1, 2}, trust, 0.3, PLAN)
    assert cfg.pairs == ((2, 0),)


def test_no_trusted_relay_forces_cms_fallback():
    report = CQIReport(cellular={0: 15, 1: 3}, d2d={(0, 1): 10})
    cfg = select_configuration(report, {0, 1}, lambda r, s: 0.0, 0.3, PLAN)
    # level 1..3 serve both in multicast; above that node 1 is uncovered
    assert cfg.multicast_cqi == 3
    assert cfg.pairs == ()
    assert cfg.multicast_served == frozenset({0, 1})


def test_cms_fallback_when_no_level_covers():
    # node 1 reports no cellular CQI at all and has no D2D link
    report = CQIReport(cellular={0: 15})
    cfg = select_configuration(report, {0, 1}, lambda r, s: 1.0, 0.3, PLAN)
    assert cfg.pairs == ()
    assert cfg.multicast_served == frozenset({0, 1})
    assert cfg.multicast_cqi == 1


def test_common_cqi_level_serves_all_at_that_level():
    # both nodes decode CQI 7, so level 7 dominates the lower levels
    report = CQIReport(cellular={0: 7, 1: 7})
    cfg = select_configuration(report, {0, 1}, lambda r, s: 1.0, 0.3, PLAN)
    assert cfg.multicast_cqi == 7
    assert cfg.pairs == ()


def test_eligible_relays_sorted_by_cqi_then_id():
    report = CQIReport(cellular={1: 15, 2: 15, 3: 15, 9: 1},
                       d2d={(3, 9): 12, (2, 9): 12, (1, 9): 8})
    got = eligible_relays(9, {1, 2, 3}, report, lambda r, s: 1.0, 0.3)
    assert got == [2, 3, 1]


def test_partition_by_cqi():
    report = CQIReport(cellular={0: 5, 1: 9, 2: 15})
    u_m, rest = partition_by_cqi(report, 9, [0, 1, 2])
    assert u_m == {1, 2}
    assert rest == {0}


def test_empty_registered_rejected():
    with pytest.raises(ValueError):
        select_configuration(CQIReport(), set(), lambda r, s: 1.0, 0.3, PLAN)


def test_configuration_accessors():
    cfg = Configuration(multicast_cqi=5, multicast_served=frozenset({0}),
                        pairs=((2, 0), (3, 0)), throughput_kbits=1.0)
    assert cfg.receivers == frozenset({2, 3})
    assert cfg.relay_of(2) == 0
    assert cfg.relay_of(9) is None
