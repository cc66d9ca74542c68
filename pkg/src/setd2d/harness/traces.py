"""Single-pair trust trace generators.

These drive the trust engine directly (no radio or crypto) and back both
the plot-data emitters and the trace-shape acceptance tests: decay-preset
comparisons, the all-satisfactory integrity comparison, on-off and
periodic attack traces, and the receiver-selective split.
"""
import dataclasses
from typing import Optional, Sequence

from ..attacks import AttackProfile, decide
from ..trust import (DECAY_PRESETS, InteractionHistory, TrustWeights,
                     competence_belief, service_trust)

# Default social standing of the traced pair: middle of every scale.
TRACE_F = 0.5
TRACE_R = 0.5
TRACE_I = 0.5

# Seconds between consecutive trace interactions. Large enough that the
# temporal decay term is on its logarithmic branch for all but the newest
# record.
TRACE_SPACING = 10.0


def _history_from_flags(flags: Sequence[int], spacing: float = TRACE_SPACING
                        ) -> InteractionHistory:
    hist = InteractionHistory(receiver=0, relay=1)
    for k, gtf in enumerate(flags):
        hist.add_transaction(timestamp=k * spacing, gtf=gtf)
    return hist


def st_trace(flags: Sequence[int], weights: TrustWeights,
             f_ij: float = TRACE_F, r_ij: float = TRACE_R,
             i_j: float = TRACE_I, spacing: float = TRACE_SPACING,
             integrity_mode: str = "deviation") -> list[float]:
    """Service trust after each interaction of a single-pair trace.

    The pair's reputation is its own running mean satisfaction (single
    receiver, so pair history and provider history coincide).
    """
    hist = InteractionHistory(receiver=0, relay=1)
    out = []
    good = 0
    for k, gtf in enumerate(flags):
        hist.add_transaction(timestamp=k * spacing, gtf=gtf)
        good += gtf
        sr = good / (k + 1)
        snap = service_trust(0, 1, hist, f_ij, r_ij, i_j, sr, weights,
                             t=k * spacing + 1.0,
                             integrity_mode=integrity_mode)
        out.append(snap.st)
    return out


def onoff_weights(n_rounds: int, base: Optional[TrustWeights] = None
                  ) -> TrustWeights:
    """Window configuration used by the on-off trace presets.

    A one-record short window and a long window covering the whole trace
    keep the integrity term free of sliding-window transients, so the
    trust trace moves with the attack profile instead of with window
    boundary effects.
    """
    base = base or TrustWeights()
    return dataclasses.replace(base, l_lon=max(n_rounds, 2), l_rec=1)


def onoff_flags(profile: AttackProfile, n_rounds: int,
                receiver: int = 0) -> list[int]:
    return [0 if decide(profile, r, receiver) == "tamper" else 1
            for r in range(1, n_rounds + 1)]


def consecutive_trace(rate: float, phase: str, n_rounds: int = 100
                      ) -> tuple[list[int], list[float]]:
    profile = AttackProfile(node=1, kind="onoff_consecutive",
                            attack_rate=rate, attack_phase=phase,
                            total_rounds=n_rounds)
    flags = onoff_flags(profile, n_rounds)
    return flags, st_trace(flags, onoff_weights(n_rounds))


def irregular_trace(rate: float, seed: int, n_rounds: int = 100
                    ) -> tuple[list[int], list[float]]:
    profile = AttackProfile(node=1, kind="onoff_irregular", attack_rate=rate,
                            seed=seed, total_rounds=n_rounds)
    flags = onoff_flags(profile, n_rounds)
    return flags, st_trace(flags, onoff_weights(n_rounds))


def periodic_trace(beta2: float, period: int = 10, n_rounds: int = 100
                   ) -> tuple[list[int], list[float]]:
    """Periodic attack trace under one integrity weight, default windows."""
    profile = AttackProfile(node=1, kind="onoff_periodic", period=period)
    flags = onoff_flags(profile, n_rounds)
    weights = dataclasses.replace(TrustWeights(), beta2=beta2)
    return flags, st_trace(flags, weights)


def all_satisfactory_trace(n_rounds: int = 100, integrity_mode: str = "deviation"
                           ) -> list[dict]:
    """Ideal-provider trace: sf always 1. Rows carry sh, sib and st."""
    weights = TrustWeights()
    hist = InteractionHistory(receiver=0, relay=1)
    rows = []
    for k in range(n_rounds):
        hist.add_transaction(timestamp=k * TRACE_SPACING, gtf=1)
        # evaluate > e seconds after the newest record so its temporal
        # decay term is on the logarithmic branch (matters for the
        # comparison integrity mode, which is 0 under unit decay)
        snap = service_trust(0, 1, hist, 0.9, 1.0, 0.2, 1.0, weights,
                             t=k * TRACE_SPACING + 5.0,
                             integrity_mode=integrity_mode)
        rows.append({"sh": k + 1, "sib": snap.sib, "st": snap.st})
    return rows


def decay_comparison(interval: str) -> dict[str, float]:
    """Competence belief per decay preset in the two decay scenarios.

    short: 10 transactions 0.01 s apart. long: a 3600 s pause between the
    fifth and the sixth. In both only the last five are satisfactory.
    """
    if interval == "short":
        times = [l * 0.01 for l in range(1, 11)]
    elif interval == "long":
        times = [l * 0.01 for l in range(1, 6)]
        times += [times[-1] + 3600.0 + l * 0.01 for l in range(1, 6)]
    else:
        raise ValueError(f"interval must be 'short' or 'long', got {interval!r}")
    flags = [0] * 5 + [1] * 5
    hist = InteractionHistory(receiver=0, relay=1)
    for k, (ts, gtf) in enumerate(zip(times, flags)):
        hist.add_transaction(timestamp=ts, gtf=gtf)
    t_eval = times[-1] + 0.005
    out = {}
    for name, (mu, nu) in DECAY_PRESETS.items():
        weights = TrustWeights().with_decay(mu, nu)
        out[name] = competence_belief(hist, t_eval, weights)
    return out


def receiver_selective_trace(n_rounds: int = 20, n_receivers: int = 3
                             ) -> tuple[list[float], list[float]]:
    """st traces toward the malicious relay for its victim and for one
    non-victim receiver it serves honestly.

    The relay serves `n_receivers` receivers each round; receiver 0 is the
    only victim. Reputation pools every receiver's flags.
    """
    weights = TrustWeights()
    hists = [InteractionHistory(receiver=r, relay=99)
             for r in range(n_receivers)]
    st_victim, st_other = [], []
    good = total = 0
    for k in range(n_rounds):
        ts = k * TRACE_SPACING
        for r, hist in enumerate(hists):
            gtf = 0 if r == 0 else 1
            hist.add_transaction(timestamp=ts, gtf=gtf)
            good += gtf
            total += 1
        sr = good / total
        t_eval = ts + 1.0
        st_victim.append(service_trust(0, 99, hists[0], TRACE_F, TRACE_R,
                                       TRACE_I, sr, weights, t_eval).st)
        st_other.append(service_trust(1, 99, hists[1], TRACE_F, TRACE_R,
                                      TRACE_I, sr, weights, t_eval).st)
    return st_victim, st_other
