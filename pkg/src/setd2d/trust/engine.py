"""Trustworthiness model: competence, integrity, opinions, reputation and
the combined service trust score.

All evaluation is pure over a frozen history snapshot; the history store is
written only by the simulated gNB between evaluations.
"""
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .history import InteractionHistory, InteractionRecord
from .weights import TrustWeights


class EmptyHistoryError(ValueError):
    """Raised by direct-contribution operations on an empty history; the
    caller must route to the indirect-only path."""


class SatisfactionConfigError(ValueError):
    pass


@dataclass(frozen=True)
class TrustSnapshot:
    """Per-pair trust quantities frozen at one evaluation time."""

    receiver: int
    relay: int
    sh: int
    scb: float
    sib: float
    so_lon: float
    so_rec: float
    sr: float
    st: float
    computed_at: float


def satisfaction(record: InteractionRecord, weights: TrustWeights,
                 mode: str = "flag_only") -> float:
    """Satisfaction of one interaction.

    flag_only: the good transmission flag verbatim. extended: weighted sum
    of flag, throughput and delay terms (requires chi+psi+sigma == 1 and
    both quality terms present).
    """
    if mode == "flag_only":
        return float(record.gtf)
    if mode == "extended":
        if record.throughput is None or record.delay is None:
            raise SatisfactionConfigError(
                "extended satisfaction requires throughput and delay")
        s = weights.chi + weights.psi + weights.sigma
        if abs(s - 1.0) > 1e-9:
            raise SatisfactionConfigError(
                f"chi+psi+sigma must equal 1, got {s!r}")
        return (weights.chi * record.gtf + weights.psi * record.throughput
                + weights.sigma * record.delay)
    raise SatisfactionConfigError(f"unknown satisfaction mode {mode!r}")


def decay_factor(l: int, sh: int, t: float, t_i: float,
                 mu: float, nu: float) -> float:
    """Decay of the l-th (1-based) of sh interactions, evaluated at time t.

    Combines the cardinal term (interactions since) with the temporal term
    (reciprocal log of elapsed time, active once ln|t-t_i| exceeds 1).
    """
    if not 1 <= l <= sh:
        raise ValueError(f"l must be in [1, sh], got l={l}, sh={sh}")
    return kernels.decay_weight(l, sh, t, t_i, mu, nu)


def competence_belief(history: InteractionHistory, t: float,
                      weights: TrustWeights) -> float:
    """Decayed, importance-weighted mean satisfaction over the whole history."""
    if history.sh == 0:
        raise EmptyHistoryError("competence belief needs at least one record")
    return kernels.windowed_opinion(history.sf, history.somega, history.ts,
                                    t, weights.mu, weights.nu, history.sh)


def service_opinion(history: InteractionHistory, window: int, t: float,
                    weights: TrustWeights) -> float:
    """Weighted mean satisfaction over the most recent `window` records."""
    if history.sh == 0:
        raise EmptyHistoryError("service opinion needs at least one record")
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    return kernels.windowed_opinion(history.sf, history.somega, history.ts,
                                    t, weights.mu, weights.nu, window)


def integrity_belief(history: InteractionHistory, t: float,
                     weights: TrustWeights) -> float:
    """Root-mean-square deviation of the short-window opinion from the
    long-window opinion.

    The summand is constant in the summation index, so the literal form
    reduces to |so_rec - so_lon|; the multiply-then-divide form is kept
    and the reduction is asserted by tests.
    """
    if history.sh == 0:
        raise EmptyHistoryError("integrity belief needs at least one record")
    so_lon = service_opinion(history, weights.l_lon, t, weights)
    so_rec = service_opinion(history, weights.l_rec, t, weights)
    d = so_rec - so_lon
    return math.sqrt(history.sh * (d * d) / history.sh)


def integrity_belief_sort(history: InteractionHistory, t: float,
                          weights: TrustWeights) -> float:
    """Comparison mode: integrity as the rms deviation of each weighted
    satisfaction term from the competence belief (the formulation this
    model replaces)."""
    if history.sh == 0:
        raise EmptyHistoryError("integrity belief needs at least one record")
    scb = competence_belief(history, t, weights)
    return kernels.sort_integrity(history.sf, history.somega, history.ts,
                                  t, weights.mu, weights.nu, scb)


def service_reputation(relay: int,
                       histories: Iterable[InteractionHistory],
                       weights: TrustWeights) -> float:
    """Mean satisfaction earned by `relay` across all receivers.

    Returns the configured neutral default when the relay has no
    transactions at all.
    """
    total = 0.0
    n = 0
    for hist in histories:
        if hist.relay != relay:
            continue
        total += sum(hist.sf)
        n += hist.sh
    if n == 0:
        return weights.sr_default
    return total / n


def direct_weight(sh: int) -> float:
    """Weight of the direct contribution; grows with history size and is
    exactly 0 for an empty history (natural log)."""
    g = math.log(sh + 1)
    return g / (1.0 + g)


def service_trust(receiver: int, relay: int,
                  history: Optional[InteractionHistory],
                  f_ij: float, r_ij: float, i_j: float,
                  sr: float, weights: TrustWeights, t: float,
                  integrity_mode: str = "deviation",
                  social: bool = True) -> TrustSnapshot:
    """Combined service trust of `relay` as seen for `receiver`.

    Direct term: beta1*scb - beta2*sib, weighted by log(sh+1)/(1+log(sh+1)).
    Indirect term: gamma*sr + epsilon*F + zeta*R + theta*(1-I), weighted by
    the complement. With `social=False` (the interactions-only comparison
    protocol) the social terms are dropped and the indirect term is the
    reputation alone. Output clamped to [0,1].
    """
    sh = history.sh if history is not None else 0
    if sh == 0:
        scb = sib = so_lon = so_rec = 0.0
        w_d = 0.0
    else:
        if integrity_mode == "deviation":
            scb, so_lon, so_rec = kernels.opinion_stats(
                history.sf, history.somega, history.ts,
                t, weights.mu, weights.nu, weights.l_lon, weights.l_rec)
            d = so_rec - so_lon
            sib = math.sqrt(sh * (d * d) / sh)
        elif integrity_mode == "sort":
            scb, so_lon, so_rec = kernels.opinion_stats(
                history.sf, history.somega, history.ts,
                t, weights.mu, weights.nu, weights.l_lon, weights.l_rec)
            sib = kernels.sort_integrity(history.sf, history.somega,
                                         history.ts, t, weights.mu,
                                         weights.nu, scb)
        else:
            raise ValueError(f"unknown integrity mode {integrity_mode!r}")
        w_d = direct_weight(sh)
    w_i = 1.0 - w_d
    if social:
        indirect = (weights.gamma * sr + weights.epsilon * f_ij
                    + weights.zeta * r_ij + weights.theta * (1.0 - i_j))
    else:
        indirect = sr
    st = w_d * (weights.beta1 * scb - weights.beta2 * sib) + w_i * indirect
    st = min(1.0, max(0.0, st))
    return TrustSnapshot(receiver=receiver, relay=relay, sh=sh, scb=scb,
                         sib=sib, so_lon=so_lon, so_rec=so_rec, sr=sr,
                         st=st, computed_at=t)
