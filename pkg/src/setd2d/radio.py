"""Channel abstraction: node geometry to CQI, CQI to per-frame capacity,
and the TDD frame split between multicast downlink and D2D uplink slots.
"""
import math
import random
from dataclasses import dataclass, field
from typing import Optional

NodeId = int


class RadioError(ValueError):
    pass


# Standard 4-bit CQI spectral efficiency table (bits/symbol).
CQI_EFFICIENCY = {
    1: 0.1523, 2: 0.2344, 3: 0.3770, 4: 0.6016, 5: 0.8770,
    6: 1.1758, 7: 1.4766, 8: 1.9141, 9: 2.4063, 10: 2.7305,
    11: 3.3223, 12: 3.9023, 13: 4.5234, 14: 5.1152, 15: 5.5547,
}

# Resource elements per resource block per slot: 12 subcarriers x 14 symbols.
RE_PER_RB_SLOT = 168


@dataclass(frozen=True)
class FramePlan:
    """10-slot NR frame, TDD split: 6 downlink, 3 uplink, 1 special."""

    slots: int = 10
    dl_slots: int = 6
    ul_slots: int = 3
    special_slots: int = 1
    slot_duration_ms: float = 1.0
    bandwidth_rbs: int = 100

    def __post_init__(self):
        if self.dl_slots + self.ul_slots + self.special_slots != self.slots:
            raise RadioError("slot split must sum to the frame size")

    @property
    def frame_duration_s(self) -> float:
        return self.slots * self.slot_duration_ms / 1000.0


@dataclass
class CellLayout:
    side: float
    positions: dict[NodeId, tuple[float, float]]
    gnb_position: tuple[float, float]

    def distance_to_gnb(self, node: NodeId) -> float:
        x, y = self._pos(node)
        gx, gy = self.gnb_position
        return math.hypot(x - gx, y - gy)

    def distance(self, a: NodeId, b: NodeId) -> float:
        xa, ya = self._pos(a)
        xb, yb = self._pos(b)
        return math.hypot(xa - xb, ya - yb)

    def _pos(self, node: NodeId) -> tuple[float, float]:
        try:
            return self.positions[node]
        except KeyError:
            raise RadioError(f"unknown node id {node}") from None


def generate_layout(n_nodes: int, side: float, seed: int) -> CellLayout:
    """Nodes uniform over the square cell, gNB at the center."""
    rng = random.Random(seed)
    positions = {i: (rng.uniform(0, side), rng.uniform(0, side))
                 for i in range(n_nodes)}
    return CellLayout(side=side, positions=positions,
                      gnb_position=(side / 2, side / 2))


def layout_to_csv(layout: CellLayout) -> str:
    lines = ["node,x,y"]
    for node in sorted(layout.positions):
        x, y = layout.positions[node]
        lines.append(f"{node},{x!r},{y!r}")
    return "\n".join(lines) + "\n"


def layout_from_csv(text: str, side: float) -> CellLayout:
    positions = {}
    lines = [l for l in text.splitlines() if l.strip()]
    for line in lines[1:]:
        node, x, y = line.split(",")
        positions[int(node)] = (float(x), float(y))
    return CellLayout(side=side, positions=positions,
                      gnb_position=(side / 2, side / 2))


@dataclass(frozen=True)
class ChannelParams:
    """Parameters of the CQI abstraction.

    `banded` maps distance to CQI through fixed-width bands and is fully
    deterministic; `shadowed` adds log-distance path loss with seeded
    log-normal shadowing before quantizing SINR to CQI.
    """

    mode: str = "banded"
    max_d2d_range: float = 25.0
    cellular_band_m: float = 5.0
    d2d_band_m: float = 2.0
    ref_snr_db: float = 32.0
    d2d_ref_snr_db: float = 26.0
    pl_exponent: float = 3.0
    shadow_sigma_db: float = 3.0
    snr_min_db: float = 2.0
    snr_step_db: float = 2.0


@dataclass
class CQIReport:
    """Cellular CQI per node plus symmetric D2D CQI per pair (0 = no link)."""

    cellular: dict[NodeId, int] = field(default_factory=dict)
    d2d: dict[tuple[NodeId, NodeId], int] = field(default_factory=dict)

    def d2d_cqi(self, a: NodeId, b: NodeId) -> int:
        return self.d2d.get((min(a, b), max(a, b)), 0)


def _shadow(seed: int, tag: str, sigma: float) -> float:
    if sigma <= 0:
        return 0.0
    return random.Random(f"{seed}:{tag}").gauss(0.0, sigma)


def _snr_to_cqi(snr_db: float, params: ChannelParams) -> int:
    level = 1 + math.floor((snr_db - params.snr_min_db) / params.snr_step_db)
    return max(1, min(15, level))


def cellular_cqi(layout: CellLayout, node: NodeId,
                 params: ChannelParams, seed: int = 0) -> int:
    dist = layout.distance_to_gnb(node)
    if params.mode == "banded":
        return max(1, min(15, 15 - math.floor(dist / params.cellular_band_m)))
    if params.mode == "shadowed":
        snr = (params.ref_snr_db
               - 10 * params.pl_exponent * math.log10(max(dist, 1.0))
               + _shadow(seed, f"cell:{node}", params.shadow_sigma_db))
        return _snr_to_cqi(snr, params)
    raise RadioError(f"unknown channel mode {params.mode!r}")


def d2d_cqi(layout: CellLayout, a: NodeId, b: NodeId,
            params: ChannelParams, seed: int = 0) -> int:
    dist = layout.distance(a, b)
    if dist > params.max_d2d_range:
        return 0
    if params.mode == "banded":
        return max(1, min(15, 15 - math.floor(dist / params.d2d_band_m)))
    if params.mode == "shadowed":
        lo, hi = min(a, b), max(a, b)
        snr = (params.d2d_ref_snr_db
               - 10 * params.pl_exponent * math.log10(max(dist, 1.0))
               + _shadow(seed, f"d2d:{lo}:{hi}", params.shadow_sigma_db))
        return _snr_to_cqi(snr, params)
    raise RadioError(f"unknown channel mode {params.mode!r}")


def build_cqi_report(layout: CellLayout, params: ChannelParams,
                     seed: int = 0) -> CQIReport:
    report = CQIReport()
    nodes = sorted(layout.positions)
    for node in nodes:
        report.cellular[node] = cellular_cqi(layout, node, params, seed)
    for idx, a in enumerate(nodes):
        for b in nodes[idx + 1:]:
            cqi = d2d_cqi(layout, a, b, params, seed)
            if cqi > 0:
                report.d2d[(a, b)] = cqi
    return report


def capacity_kbits(cqi: int, plan: FramePlan, role: str) -> float:
    """Per-frame capacity in kbits for a link at the given CQI.

    multicast_dl uses the downlink slots, d2d_ul the uplink slots; strictly
    increasing in CQI.
    """
    if cqi == 0:
        raise RadioError("CQI 0 means no link")
    if cqi not in CQI_EFFICIENCY:
        raise RadioError(f"CQI out of range: {cqi}")
    if role == "multicast_dl":
        n_slots = plan.dl_slots
    elif role == "d2d_ul":
        n_slots = plan.ul_slots
    else:
        raise RadioError(f"unknown role {role!r}")
    bits = CQI_EFFICIENCY[cqi] * RE_PER_RB_SLOT * plan.bandwidth_rbs * n_slots
    return bits / 1000.0
