"""Adversarial relay behavior schedules.

`decide` is a pure function of (profile, round, receiver): the same inputs
give the same answer in any process, which keeps runs reproducible.
"""
import random
from dataclasses import dataclass, field
from typing import Optional

NodeId = int

HONEST = "honest"
TAMPER = "tamper"


class AttackConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AttackProfile:
    """Maliciousness schedule for one node.

    kinds: honest, onoff_consecutive (one solid attack block at the start
    or end of the horizon), onoff_irregular (seeded shuffle of an exact-
    rate schedule), onoff_periodic (alternating blocks of `period` rounds,
    honest first), receiver_selective (always malicious toward the victim
    set, honest toward everyone else).
    """

    node: NodeId
    kind: str = "honest"
    attack_rate: float = 0.0
    attack_phase: str = "final"       # consecutive: initial | final
    total_rounds: int = 0             # consecutive/irregular horizon
    seed: int = 0                     # irregular shuffle seed
    period: int = 10                  # periodic block length
    victims: frozenset[NodeId] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in ("honest", "onoff_consecutive", "onoff_irregular",
                             "onoff_periodic", "receiver_selective"):
            raise AttackConfigError(f"unknown attack kind {self.kind!r}")
        if not 0.0 <= self.attack_rate <= 1.0:
            raise AttackConfigError(f"attack_rate out of [0,1]: {self.attack_rate}")
        if self.kind in ("onoff_consecutive", "onoff_irregular") \
                and self.total_rounds < 1:
            raise AttackConfigError(f"{self.kind} needs total_rounds >= 1")
        if self.attack_phase not in ("initial", "final"):
            raise AttackConfigError(f"attack_phase must be initial or final")


def _irregular_schedule(profile: AttackProfile) -> list[bool]:
    n = profile.total_rounds
    n_bad = int(profile.attack_rate * n)
    schedule = [True] * n_bad + [False] * (n - n_bad)
    random.Random(profile.seed).shuffle(schedule)
    return schedule


def decide(profile: AttackProfile, round_index: int,
           receiver: NodeId) -> str:
    """Behavior of the profiled node in `round_index` (1-based) toward
    `receiver`."""
    if round_index < 1:
        raise AttackConfigError(f"round index must be >= 1, got {round_index}")
    if profile.kind == "honest":
        return HONEST
    if profile.kind == "receiver_selective":
        return TAMPER if receiver in profile.victims else HONEST
    if profile.kind == "onoff_consecutive":
        n_bad = round(profile.attack_rate * profile.total_rounds)
        if profile.attack_phase == "final":
            bad = round_index > profile.total_rounds - n_bad
        else:
            bad = round_index <= n_bad
        return TAMPER if bad else HONEST
    if profile.kind == "onoff_irregular":
        schedule = _irregular_schedule(profile)
        if round_index > len(schedule):
            return HONEST
        return TAMPER if schedule[round_index - 1] else HONEST
    if profile.kind == "onoff_periodic":
        block = (round_index - 1) // profile.period
        return TAMPER if block % 2 == 1 else HONEST
    raise AttackConfigError(f"unknown attack kind {profile.kind!r}")
