"""Tunable constants of the trustworthiness model."""
from dataclasses import dataclass, replace


class WeightError(ValueError):
    """Raised when a weight set violates the model constraints."""


@dataclass(frozen=True)
class TrustWeights:
    """All tunable constants of the trust model.

    Defaults follow the simulation campaign values: competence 1, integrity
    0.5, reputation 0.5, relationship factor 0.175, centrality 0.175,
    intelligence 0.15. The extended-satisfaction weights (chi, psi, sigma)
    are placeholders; no shipped experiment exercises them.
    """

    beta1: float = 1.0      # direct: competence
    beta2: float = 0.5      # direct: integrity (punishment severity)
    gamma: float = 0.5      # indirect: reputation
    epsilon: float = 0.175  # indirect: relationship factor
    zeta: float = 0.175     # indirect: centrality
    theta: float = 0.15     # indirect: intelligence
    mu: float = 0.5         # decay: cardinal contribution
    nu: float = 0.5         # decay: temporal contribution
    chi: float = 0.5        # extended satisfaction: flag
    psi: float = 0.3        # extended satisfaction: throughput
    sigma: float = 0.2      # extended satisfaction: delay
    l_lon: int = 20         # long-term opinion window (records)
    l_rec: int = 5          # short-term opinion window (records)
    threshold: float = 0.3  # relay eligibility threshold on st
    sr_default: float = 0.5  # reputation for a provider with no transactions

    def validate(self) -> None:
        indirect = self.gamma + self.epsilon + self.zeta + self.theta
        if abs(indirect - 1.0) > 1e-9:
            raise WeightError(
                f"indirect weights must sum to 1, got {indirect!r}")
        if abs(self.mu + self.nu - 1.0) > 1e-9:
            raise WeightError(f"mu + nu must equal 1, got {self.mu + self.nu!r}")
        if not self.l_lon > self.l_rec >= 1:
            raise WeightError(
                f"need l_lon > l_rec >= 1, got {self.l_lon}/{self.l_rec}")
        for name in ("beta1", "beta2", "gamma", "epsilon", "zeta", "theta",
                     "mu", "nu", "chi", "psi", "sigma"):
            if getattr(self, name) < 0:
                raise WeightError(f"{name} must be nonnegative")
        if not 0.0 <= self.threshold <= 1.0:
            raise WeightError(f"threshold must be in [0,1], got {self.threshold}")
        if not 0.0 <= self.sr_default <= 1.0:
            raise WeightError(f"sr_default must be in [0,1], got {self.sr_default}")

    def with_decay(self, mu: float, nu: float) -> "TrustWeights":
        return replace(self, mu=mu, nu=nu)


# Decay presets used in the decay-factor comparison experiments.
DECAY_PRESETS = {
    "cardinal_only": (1.0, 0.0),
    "temporal_only": (0.0, 1.0),
    "balanced": (0.5, 0.5),
}
