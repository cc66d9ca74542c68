"""Multicast and D2D configuration selection.

For every candidate multicast CQI level: nodes able to decode the matching
MCS are served directly, the rest via D2D from the trust-eligible relay
with the best D2D CQI. Only full-coverage configurations are eligible; the
throughput-maximizing one wins.
"""
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .radio import CQIReport, FramePlan, capacity_kbits

NodeId = int

# st values for candidate (receiver, relay) pairs, frozen at frame start.
TrustSource = Callable[[NodeId, NodeId], float]


@dataclass(frozen=True)
class Configuration:
    """One multicast+D2D plan: MCS level, directly-served set, relay pairs."""

    multicast_cqi: int
    multicast_served: frozenset[NodeId]
    pairs: tuple[tuple[NodeId, NodeId], ...]  # (receiver, relay)
    throughput_kbits: float

    @property
    def receivers(self) -> frozenset[NodeId]:
        return frozenset(r for r, _ in self.pairs)

    def relay_of(self, receiver: NodeId) -> Optional[NodeId]:
        for r, s in self.pairs:
            if r == receiver:
                return s
        return None


def partition_by_cqi(reports: CQIReport, c: int,
                     registered: Iterable[NodeId]) -> tuple[set[NodeId], set[NodeId]]:
    """Split registered nodes into multicast-decodable (cellular CQI >= c)
    and the rest."""
    u_m, u_rest = set(), set()
    for node in registered:
        if reports.cellular.get(node, 0) >= c:
            u_m.add(node)
        else:
            u_rest.add(node)
    return u_m, u_rest


def eligible_relays(receiver: NodeId, u_m: Iterable[NodeId],
                    reports: CQIReport, trust: TrustSource,
                    threshold: float) -> list[NodeId]:
    """Trust-eligible multicast-served candidates with a live D2D link,
    best D2D CQI first (ties broken by lower node id)."""
    candidates = []
    for s in u_m:
        cqi = reports.d2d_cqi(receiver, s)
        if cqi == 0:
            continue
        if trust(receiver, s) < threshold:
            continue
        candidates.append((-cqi, s))
    candidates.sort()
    return [s for _, s in candidates]


def configuration_throughput(c: int, u_m: set[NodeId],
                             pairs: Iterable[tuple[NodeId, NodeId]],
                             reports: CQIReport, plan: FramePlan) -> float:
    """Aggregate cell goodput: multicast capacity counted per served node
    plus the D2D capacity of every pair."""
    mc = capacity_kbits(c, plan, "multicast_dl")
    thr = mc * len(u_m)
    for r, s in pairs:
        thr += capacity_kbits(reports.d2d_cqi(r, s), plan, "d2d_ul")
    return thr


def select_configuration(reports: CQIReport, registered: set[NodeId],
                         trust: TrustSource, threshold: float,
                         plan: FramePlan) -> Configuration:
    """Best full-coverage configuration over all candidate CQI levels.

    Ties on throughput go to the lower (more robust) CQI level. If no level
    yields full coverage, falls back to pure CMS at the minimum reported
    cellular CQI.
    """
    if not registered:
        raise ValueError("registered set must be nonempty")
    best: Optional[Configuration] = None
    for c in range(1, 16):
        u_m, u_rest = partition_by_cqi(reports, c, registered)
        if not u_m:
            continue
        pairs = []
        covered = True
        for r in sorted(u_rest):
            cands = eligible_relays(r, u_m, reports, trust, threshold)
            if not cands:
                covered = False
                break
            pairs.append((r, cands[0]))
        if not covered:
            continue
        thr = configuration_throughput(c, u_m, pairs, reports, plan)
        cfg = Configuration(multicast_cqi=c,
                            multicast_served=frozenset(u_m),
                            pairs=tuple(pairs),
                            throughput_kbits=thr)
        if best is None or thr > best.throughput_kbits:
            best = cfg
    if best is not None:
        return best
    # Fallback: serve everyone in multicast at the most robust needed MCS.
    c = min(reports.cellular.get(n, 1) for n in registered)
    c = max(1, c)
    thr = capacity_kbits(c, plan, "multicast_dl") * len(registered)
    return Configuration(multicast_cqi=c,
                         multicast_served=frozenset(registered),
                         pairs=(), throughput_kbits=thr)
