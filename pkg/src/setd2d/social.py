"""Social layer: pairwise relationships, relationship factors, centrality
and per-node intelligence.

Relationships are generated synthetically with a seeded RNG; the taxonomy
and the trust value attached to each relationship kind are fixed.
"""
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

NodeId = int


class SocialError(ValueError):
    pass


class RelationshipKind(Enum):
    OOR = "OOR"        # objects owned by the same person
    C_LOR = "C-LOR"    # co-location (domestic) objects
    C_WOR = "C-WOR"    # co-working objects
    SOR = "SOR"        # objects meeting occasionally
    POR = "POR"        # objects of the same model
    NONE = "None"      # no relationship

    @property
    def trust_value(self) -> float:
        return _RELATIONSHIP_TRUST[self]


_RELATIONSHIP_TRUST = {
    RelationshipKind.OOR: 0.9,
    RelationshipKind.C_LOR: 0.8,
    RelationshipKind.C_WOR: 0.8,
    RelationshipKind.SOR: 0.6,
    RelationshipKind.POR: 0.5,
    RelationshipKind.NONE: 0.1,
}

# Intelligence tiers: dummy, ordinary, smart. Smart objects are assumed more
# capable of cheating, which lowers the trust contribution.
INTELLIGENCE_TIERS = (0.2, 0.5, 0.8)

DEFAULT_MIX = {
    RelationshipKind.OOR: 0.05,
    RelationshipKind.C_LOR: 0.10,
    RelationshipKind.C_WOR: 0.10,
    RelationshipKind.SOR: 0.15,
    RelationshipKind.POR: 0.10,
    RelationshipKind.NONE: 0.50,
}


@dataclass
class SocialProfile:
    """Pairwise relationship factors, friend sets and node intelligence."""

    n_nodes: int
    kinds: dict[tuple[NodeId, NodeId], RelationshipKind] = field(default_factory=dict)
    intelligence: dict[NodeId, float] = field(default_factory=dict)
    # generation-time propensity to form relationships; kept for inspection
    sociability: dict[NodeId, float] = field(default_factory=dict)

    def kind(self, i: NodeId, j: NodeId) -> RelationshipKind:
        self._check(i)
        self._check(j)
        if i == j:
            return RelationshipKind.NONE
        return self.kinds.get((min(i, j), max(i, j)), RelationshipKind.NONE)

    def relationship_factor(self, i: NodeId, j: NodeId) -> float:
        return self.kind(i, j).trust_value

    def friends(self, i: NodeId) -> set[NodeId]:
        self._check(i)
        return {j for j in range(self.n_nodes)
                if j != i and self.kind(i, j) is not RelationshipKind.NONE}

    def _check(self, i: NodeId) -> None:
        if not 0 <= i < self.n_nodes:
            raise SocialError(f"unknown node id {i}")


def generate_social_graph(n_nodes: int, seed: int,
                          mix: Optional[dict[RelationshipKind, float]] = None
                          ) -> SocialProfile:
    """Seeded synthetic social graph over `n_nodes` nodes.

    Nodes are heterogeneous: each gets a sociability level in [0, 1] and a
    pair is related only with probability proportional to the smaller of the
    two sociabilities, so a marginal node stays marginal no matter how
    gregarious its peers are. Averaged over the population the related share
    still approximates 1 - mix[NONE], but individual nodes range from
    well-connected to nearly isolated, which is what makes relationship
    factors informative about a node at all. Among related pairs the kind is
    drawn from the non-NONE part of `mix`. A friendship edge exists iff the
    kind is not NONE. Intelligence is drawn per node from the discrete tiers.
    """
    if n_nodes < 2:
        raise SocialError(f"need at least 2 nodes, got {n_nodes}")
    mix = dict(DEFAULT_MIX if mix is None else mix)
    total = sum(mix.values())
    if abs(total - 1.0) > 1e-9:
        raise SocialError(f"mix probabilities must sum to 1, got {total!r}")
    rng = random.Random(seed)
    none_share = mix.get(RelationshipKind.NONE, 0.0)
    related = {k: w for k, w in mix.items()
               if k is not RelationshipKind.NONE and w > 0}
    kinds_order = sorted(related, key=lambda k: k.value)
    weights = [related[k] for k in kinds_order]
    profile = SocialProfile(n_nodes=n_nodes)
    for i in range(n_nodes):
        profile.intelligence[i] = rng.choice(INTELLIGENCE_TIERS)
    for i in range(n_nodes):
        profile.sociability[i] = rng.random()
    for i in range(n_nodes):
        for j in range(i + 1, n_nodes):
            low = min(profile.sociability[i], profile.sociability[j])
            # E[min of two independent uniforms] = 1/3, hence the factor 3
            p_related = min(1.0, 3.0 * (1.0 - none_share) * low)
            if kinds_order and rng.random() < p_related:
                profile.kinds[(i, j)] = rng.choices(kinds_order, weights)[0]
    return profile


def centrality(i: NodeId, j: NodeId, profile: SocialProfile) -> float:
    """Fraction of i's friends that are also friends of j.

    Asymmetric by construction; defined as 0 for an isolated i.
    """
    n_i = profile.friends(i)
    if not n_i:
        return 0.0
    return len(n_i & profile.friends(j)) / len(n_i)


def export_graph(profile: SocialProfile) -> str:
    """Plain-text form: one `i j kind` line per edge, then `node i I` lines."""
    lines = []
    for (i, j), kind in sorted(profile.kinds.items()):
        lines.append(f"{i} {j} {kind.value}")
    for i in range(profile.n_nodes):
        lines.append(f"node {i} {profile.intelligence[i]}")
    return "\n".join(lines) + "\n"


def import_graph(text: str) -> SocialProfile:
    kinds: dict[tuple[NodeId, NodeId], RelationshipKind] = {}
    intelligence: dict[NodeId, float] = {}
    by_value = {k.value: k for k in RelationshipKind}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "node":
            if len(parts) != 3:
                raise SocialError(f"line {lineno}: bad node attribute line")
            intelligence[int(parts[1])] = float(parts[2])
        else:
            if len(parts) != 3 or parts[2] not in by_value:
                raise SocialError(f"line {lineno}: bad edge line")
            i, j = int(parts[0]), int(parts[1])
            kinds[(min(i, j), max(i, j))] = by_value[parts[2]]
    if not intelligence:
        raise SocialError("no node attribute lines found")
    n_nodes = max(intelligence) + 1
    return SocialProfile(n_nodes=n_nodes, kinds=kinds,
                         intelligence=intelligence)
