from .weights import TrustWeights, WeightError, DECAY_PRESETS
from .history import (HistoryError, HistoryStore, InteractionHistory,
                      InteractionRecord)
from .engine import (EmptyHistoryError, SatisfactionConfigError,
                     TrustSnapshot, competence_belief, decay_factor,
                     direct_weight, integrity_belief, integrity_belief_sort,
                     satisfaction, service_opinion, service_reputation,
                     service_trust)
from .kernels import BACKEND_NAME

__all__ = [
    "TrustWeights", "WeightError", "DECAY_PRESETS",
    "HistoryError", "HistoryStore", "InteractionHistory", "InteractionRecord",
    "EmptyHistoryError", "SatisfactionConfigError", "TrustSnapshot",
    "competence_belief", "decay_factor", "direct_weight", "integrity_belief",
    "integrity_belief_sort", "satisfaction", "service_opinion",
    "service_reputation", "service_trust", "BACKEND_NAME",
]
