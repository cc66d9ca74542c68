"""Interaction histories, maintained centrally from the gNB viewpoint."""
from array import array
from dataclasses import dataclass
from typing import Iterable, Optional

NodeId = int


class HistoryError(ValueError):
    pass


@dataclass(frozen=True)
class InteractionRecord:
    """One D2D transaction between a receiver and a relay.

    `index` is 1-based and contiguous within one (receiver, relay) history.
    `satisfaction` and `importance` live in [0,1]; `throughput` and `delay`
    are optional normalized quality terms used only by the extended
    satisfaction mode.
    """

    index: int
    timestamp: float
    satisfaction: float
    gtf: int
    importance: float = 1.0
    throughput: Optional[float] = None
    delay: Optional[float] = None

    def __post_init__(self):
        if self.gtf not in (0, 1):
            raise HistoryError(f"gtf must be 0 or 1, got {self.gtf}")
        if not 0.0 <= self.satisfaction <= 1.0:
            raise HistoryError(f"satisfaction out of [0,1]: {self.satisfaction}")
        if not 0.0 < self.importance <= 1.0:
            raise HistoryError(f"importance out of (0,1]: {self.importance}")


class InteractionHistory:
    """Append-only record list for one ordered (receiver, relay) pair.

    Parallel arrays of satisfaction, importance and timestamp are kept
    alongside the records so the trust kernels can scan without attribute
    lookups.
    """

    def __init__(self, receiver: NodeId, relay: NodeId):
        self.receiver = receiver
        self.relay = relay
        self.records: list[InteractionRecord] = []
        self.sf = array("d")
        self.somega = array("d")
        self.ts = array("d")

    @property
    def sh(self) -> int:
        return len(self.records)

    def append(self, record: InteractionRecord) -> None:
        if record.index != self.sh + 1:
            raise HistoryError(
                f"expected index {self.sh + 1}, got {record.index}")
        if self.records and record.timestamp < self.records[-1].timestamp:
            raise HistoryError("timestamps must be nondecreasing")
        self.records.append(record)
        self.sf.append(record.satisfaction)
        self.somega.append(record.importance)
        self.ts.append(record.timestamp)

    def add_transaction(self, timestamp: float, gtf: int,
                        importance: float = 1.0) -> InteractionRecord:
        """Append a flag-mode transaction (satisfaction equals gtf)."""
        rec = InteractionRecord(index=self.sh + 1, timestamp=timestamp,
                                satisfaction=float(gtf), gtf=gtf,
                                importance=importance)
        self.append(rec)
        return rec


class HistoryStore:
    """All pair histories, keyed by ordered (receiver, relay).

    Single-writer: only the simulated gNB appends. Reputation aggregates
    over every history whose relay matches.
    """

    def __init__(self):
        self._histories: dict[tuple[NodeId, NodeId], InteractionHistory] = {}

    def get(self, receiver: NodeId, relay: NodeId) -> Optional[InteractionHistory]:
        return self._histories.get((receiver, relay))

    def get_or_create(self, receiver: NodeId, relay: NodeId) -> InteractionHistory:
        key = (receiver, relay)
        hist = self._histories.get(key)
        if hist is None:
            hist = self._histories[key] = InteractionHistory(receiver, relay)
        return hist

    def histories_for_relay(self, relay: NodeId) -> Iterable[InteractionHistory]:
        return (h for h in self._histories.values() if h.relay == relay)

    def __iter__(self):
        return iter(self._histories.values())

    def __len__(self):
        return len(self._histories)
