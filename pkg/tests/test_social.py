"""Social layer: relationship taxonomy, generation, centrality, round trips."""
import random

import pytest

from setd2d.social import (
    DEFAULT_MIX, INTELLIGENCE_TIERS, RelationshipKind, SocialError,
    SocialProfile, centrality, export_graph, generate_social_graph,
    import_graph,
)


def test_relationship_trust_values():
    assert RelationshipKind.OOR.trust_value == 0.9
    assert RelationshipKind.C_LOR.trust_value == 0.8
    assert RelationshipKind.C_WOR.trust_value == 0.8
    assert RelationshipKind.SOR.trust_value == 0.6
    assert RelationshipKind.POR.trust_value == 0.5
    assert RelationshipKind.NONE.trust_value == 0.1


def test_default_mix_is_a_distribution():
    assert sum(DEFAULT_MIX.values()) == pytest.approx(1.0)


def test_self_relationship_is_none():
    profile = generate_social_graph(10, seed=0)
    assert profile.kind(3, 3) is RelationshipKind.NONE
    assert profile.relationship_factor(3, 3) == 0.1


def test_relationships_are_symmetric():
    profile = generate_social_graph(20, seed=1)
    for i in range(20):
        for j in range(20):
            assert profile.kind(i, j) is profile.kind(j, i)


def test_generation_is_deterministic():
    a = generate_social_graph(30, seed=42)
    b = generate_social_graph(30, seed=42)
    assert a.kinds == b.kinds
    assert a.intelligence == b.intelligence
    assert generate_social_graph(30, seed=43).kinds != a.kinds


def test_intelligence_from_tiers():
    profile = generate_social_graph(50, seed=3)
    assert set(profile.intelligence.values()) <= set(INTELLIGENCE_TIERS)
    assert len(profile.intelligence) == 50


def test_sociability_in_unit_interval_and_heterogeneous():
    profile = generate_social_graph(60, seed=5)
    values = list(profile.sociability.values())
    assert all(0.0 <= v <= 1.0 for v in values)
    # marginal and well connected nodes must both exist
    degrees = [len(profile.friends(i)) for i in range(60)]
    assert min(degrees) < 5
    assert max(degrees) > 20


def test_low_sociability_means_few_friends():
    profile = generate_social_graph(80, seed=9)
    nodes = sorted(range(80), key=lambda i: profile.sociability[i])
    bottom = sum(len(profile.friends(i)) for i in nodes[:10])
    top = sum(len(profile.friends(i)) for i in nodes[-10:])
    assert bottom < top / 4


def test_none_share_tracks_mix():
    profile = generate_social_graph(100, seed=7)
    total = 100 * 99 // 2
    n_edges = len(profile.kinds)
    none_share = 1.0 - n_edges / total
    assert 0.4 < none_share < 0.7


def test_mix_must_sum_to_one():
    bad = dict(DEFAULT_MIX)
    bad[RelationshipKind.OOR] = 0.5
    with pytest.raises(SocialError):
        generate_social_graph(10, seed=0, mix=bad)


def test_needs_two_nodes():
    with pytest.raises(SocialError):
        generate_social_graph(1, seed=0)


def test_unknown_node_rejected():
    profile = generate_social_graph(5, seed=0)
    with pytest.raises(SocialError):
        profile.kind(0, 9)
    with pytest.raises(SocialError):
        profile.friends(-1)


# ── centrality ────────────────────────────────────────────


def hand_centrality(i, j, profile):
    n_i = profile.friends(i)
    if not n_i:
        return 0.0
    return len([k for k in n_i if k in profile.friends(j)]) / len(n_i)


def test_centrality_matches_definition():
    profile = generate_social_graph(25, seed=13)
    for i in range(25):
        for j in range(25):
            assert centrality(i, j, profile) == hand_centrality(i, j, profile)


def test_centrality_is_asymmetric():
    kinds = {(0, 1): RelationshipKind.OOR,
             (0, 2): RelationshipKind.SOR,
             (1, 2): RelationshipKind.POR,
             (1, 3): RelationshipKind.POR}
    profile = SocialProfile(n_nodes=4, kinds=kinds,
                            intelligence={i: 0.5 for i in range(4)})
    # friends(0) = {1, 2}; friends(3) = {1}
    assert centrality(0, 3, profile) == 0.5
    assert centrality(3, 0, profile) == 1.0


def test_centrality_zero_for_isolated_node():
    kinds = {(1, 2): RelationshipKind.OOR}
    profile = SocialProfile(n_nodes=3, kinds=kinds,
                            intelligence={i: 0.2 for i in range(3)})
    assert centrality(0, 1, profile) == 0.0


def test_centrality_in_unit_interval():
    profile = generate_social_graph(40, seed=17)
    rng = random.Random(0)
    for _ in range(200):
        i, j = rng.randrange(40), rng.randrange(40)
        assert 0.0 <= centrality(i, j, profile) <= 1.0


# ── export / import ───────────────────────────────────────


def test_graph_round_trip():
    profile = generate_social_graph(15, seed=21)
    back = import_graph(export_graph(profile))
    assert back.n_nodes == profile.n_nodes
    assert back.kinds == profile.kinds
    assert back.intelligence == profile.intelligence


def test_import_rejects_garbage():
    with pytest.raises(SocialError):
        import_graph("0 1 FRIENDS\nnode 0 0.5\n")
    with pytest.raises(SocialError):
        import_graph("")


def test_import_ignores_comments_and_blanks():
    text = "# comment\n\n0 1 OOR\nnode 0 0.2\nnode 1 0.8\n"
    profile = import_graph(text)
    assert profile.kind(0, 1) is RelationshipKind.OOR
    assert profile.intelligence[1] == 0.8
