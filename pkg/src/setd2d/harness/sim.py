"""Frame-by-frame scenario execution and the evaluation metrics."""
import json
import math
import random
from dataclasses import dataclass, field
from typing import Optional

from ..attacks import AttackProfile, HONEST, TAMPER, decide
from ..radio import (ChannelParams, FramePlan, build_cqi_report,
                     capacity_kbits, generate_layout)
from ..secure import GNodeB, SUITES, Transcript, run_relay_round
from ..selection import Configuration, select_configuration
from ..social import centrality, generate_social_graph
from ..trust import HistoryStore, service_reputation, service_trust
from .config import Scenario


@dataclass
class MetricsRow:
    frame: int
    multicast_cqi: int
    n_multicast: int
    n_pairs: int
    non_corrupted_kbits: float
    wasted_capacity_pct: float
    malicious_selected: bool
    total_d2d_kbits: float
    corrupted_kbits: float

    def as_csv(self) -> str:
        return (f"{self.frame},{self.multicast_cqi},{self.n_multicast},"
                f"{self.n_pairs},{self.non_corrupted_kbits!r},"
                f"{self.wasted_capacity_pct!r},"
                f"{int(self.malicious_selected)},"
                f"{self.total_d2d_kbits!r},{self.corrupted_kbits!r}")


CSV_HEADER = ("frame,multicast_cqi,n_multicast,n_pairs,non_corrupted_kbits,"
              "wasted_capacity_pct,malicious_selected,total_d2d_kbits,"
              "corrupted_kbits")


@dataclass
class ScenarioResult:
    scenario: Scenario
    rows: list[MetricsRow]
    st_trace: list[dict]
    transcript: Transcript
    malicious_nodes: frozenset[int]

    @property
    def mean_non_corrupted_kbits(self) -> float:
        return sum(r.non_corrupted_kbits for r in self.rows) / len(self.rows)

    @property
    def mean_wasted_pct(self) -> float:
        return sum(r.wasted_capacity_pct for r in self.rows) / len(self.rows)

    @property
    def malicious_selection_pct(self) -> float:
        hits = sum(1 for r in self.rows if r.malicious_selected)
        return 100.0 * hits / len(self.rows)

    def summary(self) -> dict:
        return {
            "variant": self.scenario.variant,
            "seed": self.scenario.seed,
            "malicious_fraction": self.scenario.malicious_fraction,
            "threshold": self.scenario.weights.threshold,
            "file_kbits": self.scenario.file_kbits,
            "frames": len(self.rows),
            "mean_non_corrupted_kbits": self.mean_non_corrupted_kbits,
            "mean_wasted_pct": self.mean_wasted_pct,
            "malicious_selection_pct": self.malicious_selection_pct,
            "malicious_nodes": sorted(self.malicious_nodes),
        }

    def metrics_csv(self) -> str:
        return "\n".join([CSV_HEADER] + [r.as_csv() for r in self.rows]) + "\n"

    def st_trace_jsonl(self) -> str:
        return "".join(json.dumps(e, sort_keys=True) + "\n"
                       for e in self.st_trace)


def pick_malicious(scenario: Scenario, social) -> frozenset[int]:
    """Seeded malicious-node draw, optionally biased toward nodes with low
    social standing (weak relationships, low centrality, high intelligence).

    Badness is one minus the mean cold-start indirect trust other nodes
    would assign, so the draw concentrates on exactly the nodes the social
    layer is suspicious of."""
    n = scenario.n_nodes
    k = round(scenario.malicious_fraction * n)
    if k == 0:
        return frozenset()
    w = scenario.weights
    rng = random.Random(scenario.resolved_seed("attack"))
    weights = []
    for j in range(n):
        ind = sum(w.gamma * w.sr_default
                  + w.epsilon * social.relationship_factor(i, j)
                  + w.zeta * centrality(i, j, social)
                  + w.theta * (1.0 - social.intelligence[j])
                  for i in range(n) if i != j) / (n - 1)
        weights.append(math.exp(scenario.social_malice_bias * (1.0 - ind)))
    chosen: set[int] = set()
    pool = list(range(n))
    while len(chosen) < k:
        total = sum(weights[i] for i in pool)
        x = rng.random() * total
        acc = 0.0
        for idx, i in enumerate(pool):
            acc += weights[i]
            if x <= acc:
                chosen.add(i)
                pool.pop(idx)
                break
    return frozenset(chosen)


def build_attack_profile(scenario: Scenario, node: int) -> AttackProfile:
    a = scenario.attacks
    return AttackProfile(node=node, kind=a.kind, attack_rate=a.rate,
                         attack_phase=a.phase, total_rounds=scenario.frames,
                         seed=a.seed * 100003 + node, period=a.period,
                         victims=frozenset(a.victims))


class TrustEvaluator:
    """Frozen-snapshot trust lookups for one frame."""

    def __init__(self, scenario: Scenario, store: HistoryStore, social,
                 centrality_cache: dict, t: float):
        self.scenario = scenario
        self.store = store
        self.social = social
        self.centrality_cache = centrality_cache
        self.t = t
        self._sr: dict[int, float] = {}
        self._st: dict[tuple[int, int], float] = {}

    def reputation(self, relay: int) -> float:
        sr = self._sr.get(relay)
        if sr is None:
            sr = service_reputation(relay, self.store,
                                    self.scenario.weights)
            self._sr[relay] = sr
        return sr

    def st(self, receiver: int, relay: int) -> float:
        if self.scenario.variant == "d2d":
            return 1.0  # trust-unaware
        key = (receiver, relay)
        cached = self._st.get(key)
        if cached is not None:
            return cached
        hist = self.store.get(receiver, relay)
        f_ij = self.social.relationship_factor(receiver, relay)
        r_ij = self.centrality_cache[(receiver, relay)]
        i_j = self.social.intelligence[relay]
        snap = service_trust(receiver, relay, hist, f_ij, r_ij, i_j,
                             self.reputation(relay), self.scenario.weights,
                             self.t,
                             social=(self.scenario.variant == "setd2d"))
        self._st[key] = snap.st
        return snap.st


def run_scenario(scenario: Scenario) -> ScenarioResult:
    """Run all frames of one scenario; deterministic for fixed seeds."""
    scenario.validate()
    plan = FramePlan()
    layout = generate_layout(scenario.n_nodes, scenario.cell_side,
                             scenario.resolved_seed("layout"))
    social = generate_social_graph(scenario.n_nodes,
                                   scenario.resolved_seed("social"))
    malicious = pick_malicious(scenario, social)
    profiles = {i: build_attack_profile(scenario, i) for i in malicious}

    suite = SUITES[scenario.suite]
    gnb = GNodeB(suite, seed=scenario.seed)
    transcript = Transcript()
    ues = {}
    for i in range(scenario.n_nodes):
        ue = gnb.make_ue(i, seed=scenario.seed)
        gnb.register(ue, transcript, frame=0)
        ues[i] = ue

    registered = set(range(scenario.n_nodes))
    threshold = scenario.weights.threshold if scenario.variant != "d2d" else -1.0
    store = HistoryStore()
    centrality_cache: dict[tuple[int, int], float] = {}
    rows: list[MetricsRow] = []
    st_trace: list[dict] = []
    payload = b"setd2d-frame-payload" * 3

    for frame in range(1, scenario.frames + 1):
        t = (frame - 1) * plan.frame_duration_s
        report = build_cqi_report(layout, scenario.radio,
                                  seed=scenario.resolved_seed("channel"))
        evaluator = TrustEvaluator(scenario, store, social,
                                   centrality_cache, t)
        # warm the centrality cache lazily for pairs the selector may probe
        for (a, b) in report.d2d:
            for (r, s) in ((a, b), (b, a)):
                if (r, s) not in centrality_cache:
                    centrality_cache[(r, s)] = centrality(r, s, social)
        config = select_configuration(report, registered, evaluator.st,
                                      threshold, plan)

        mc_cap = capacity_kbits(config.multicast_cqi, plan, "multicast_dl")
        frame_payload_kbits = min(scenario.file_kbits, mc_cap)
        fanout: dict[int, int] = {}
        for _, s in config.pairs:
            fanout[s] = fanout.get(s, 0) + 1

        total_d2d = corrupted = non_corrupted = 0.0
        malicious_selected = False
        sigma1 = gnb.signing.sign(payload)
        for r, s in config.pairs:
            if s in malicious:
                malicious_selected = True
                decision = decide(profiles[s], frame, r)
            else:
                decision = HONEST
            gtf, _ = run_relay_round(gnb, ues[s], ues[r], payload,
                                     attack_decision=decision,
                                     transcript=transcript, frame=frame,
                                     precomputed_sigma1=sigma1)
            share = (capacity_kbits(report.d2d_cqi(r, s), plan, "d2d_ul")
                     / fanout[s])
            delivered = min(frame_payload_kbits, share)
            total_d2d += delivered
            if decision == TAMPER:
                corrupted += delivered
            else:
                non_corrupted += delivered
            store.get_or_create(r, s).add_transaction(timestamp=t, gtf=gtf)
            st_trace.append({"frame": frame, "receiver": r, "relay": s,
                             "st": evaluator.st(r, s), "gtf": gtf})

        n_pairs = len(config.pairs)
        rows.append(MetricsRow(
            frame=frame,
            multicast_cqi=config.multicast_cqi,
            n_multicast=len(config.multicast_served),
            n_pairs=n_pairs,
            non_corrupted_kbits=(non_corrupted / n_pairs) if n_pairs else 0.0,
            wasted_capacity_pct=(100.0 * corrupted / total_d2d)
            if total_d2d > 0 else 0.0,
            malicious_selected=malicious_selected,
            total_d2d_kbits=total_d2d,
            corrupted_kbits=corrupted,
        ))

    return ScenarioResult(scenario=scenario, rows=rows, st_trace=st_trace,
                          transcript=transcript, malicious_nodes=malicious)
