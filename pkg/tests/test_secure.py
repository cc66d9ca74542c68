"""Security layer: primitives, identity concealment, and the relay round."""
import random

import pytest

from setd2d.secure import (
    DHGroup, GNodeB, HomeNetworkKeys, IntegrityError, ProtocolOrderError,
    SigningKey, TOY_SUITE, Transcript, conceal, decrypt, encrypt, kdf, mac,
    mac_verify, run_relay_round, verify,
)


# ── primitives ────────────────────────────────────────────


def test_dh_textbook_example():
    group = DHGroup(p=23, g=5)
    assert pow(group.g, 4, group.p) == 4
    assert pow(group.g, 3, group.p) == 10
    assert group.shared_secret(4, 10) == 18
    assert group.shared_secret(3, 4) == 18


def test_dh_keypair_agreement():
    rng = random.Random(0)
    group = TOY_SUITE.group
    sa, pa = group.keypair(rng)
    sb, pb = group.keypair(rng)
    assert group.shared_secret(sa, pb) == group.shared_secret(sb, pa)


def test_kdf_separates_contexts():
    assert kdf(12345, b"a") != kdf(12345, b"b")
    assert kdf(12345, b"a") == kdf(12345, b"a")
    assert len(kdf(1)) == 32


def test_encrypt_decrypt_round_trip():
    key = kdf(777)
    for size in (0, 1, 31, 32, 33, 1000):
        msg = bytes(range(256)) * 4
        msg = msg[:size]
        assert decrypt(key, b"n", encrypt(key, b"n", msg)) == msg


def test_decrypt_rejects_tampering():
    key = kdf(777)
    ct = bytearray(encrypt(key, b"n", b"hello world"))
    ct[3] ^= 0x40
    with pytest.raises(IntegrityError):
        decrypt(key, b"n", bytes(ct))
    with pytest.raises(IntegrityError):
        decrypt(key, b"n", b"short")


def test_decrypt_rejects_wrong_nonce_or_key():
    key = kdf(777)
    ct = encrypt(key, b"n", b"payload")
    with pytest.raises(IntegrityError):
        decrypt(key, b"m", ct)
    with pytest.raises(IntegrityError):
        decrypt(kdf(778), b"n", ct)


def test_mac_verify():
    tag = mac(b"k", b"data")
    assert mac_verify(b"k", b"data", tag)
    assert not mac_verify(b"k", b"data2", tag)
    assert not mac_verify(b"j", b"data", tag)


def test_signatures():
    sk = SigningKey(b"seed")
    sig = sk.sign(b"message")
    assert verify(b"message", sig, sk.public_bytes())
    assert not verify(b"other", sig, sk.public_bytes())
    assert not verify(b"message", sig, SigningKey(b"other").public_bytes())
    assert not verify(b"message", b"garbage", sk.public_bytes())


def test_signing_key_reproducible_from_seed():
    assert SigningKey(b"x").public_bytes() == SigningKey(b"x").public_bytes()


def test_identity_concealment_round_trip():
    rng = random.Random(5)
    home = HomeNetworkKeys(TOY_SUITE, rng)
    blob = conceal(b"0000000042", home.public, TOY_SUITE, rng)
    assert home.deconceal(blob) == b"0000000042"


def test_concealment_is_randomized():
    rng = random.Random(5)
    home = HomeNetworkKeys(TOY_SUITE, rng)
    a = conceal(b"0000000042", home.public, TOY_SUITE, rng)
    b = conceal(b"0000000042", home.public, TOY_SUITE, rng)
    assert a != b


def test_deconcealment_fails_under_wrong_key():
    rng = random.Random(5)
    home = HomeNetworkKeys(TOY_SUITE, rng)
    other = HomeNetworkKeys(TOY_SUITE, rng)
    blob = conceal(b"0000000042", other.public, TOY_SUITE, rng)
    with pytest.raises(IntegrityError):
        home.deconceal(blob)


# ── relay round ───────────────────────────────────────────


def make_cell(n_ue=2, seed=11):
    gnb = GNodeB(TOY_SUITE, seed)
    transcript = Transcript()
    ues = []
    for node in range(n_ue):
        ue = gnb.make_ue(node, seed)
        gnb.register(ue, transcript)
        ues.append(ue)
    return gnb, ues, transcript


def test_honest_round_scores_good():
    gnb, (relay, receiver), transcript = make_cell()
    gtf, transcript = run_relay_round(gnb, relay, receiver, b"chunk-0",
                                      transcript=transcript)
    assert gtf == 1
    outcomes = {e["outcome"] for e in transcript.entries}
    assert outcomes == {"ok"}


def test_tampering_relay_scores_bad():
    gnb, (relay, receiver), _ = make_cell()
    gtf, _ = run_relay_round(gnb, relay, receiver, b"chunk-0",
                             attack_decision="tamper")
    assert gtf == 0


def test_silent_receiver_scores_bad():
    gnb, (relay, receiver), _ = make_cell()
    gtf, _ = run_relay_round(gnb, relay, receiver, b"chunk-0",
                             receiver_reports=False)
    assert gtf == 0


def test_in_flight_bit_flip_detected():
    gnb, (relay, receiver), _ = make_cell()
    for bit in (0, 7, 100):
        gtf, _ = run_relay_round(gnb, relay, receiver, b"chunk-0",
                                 flip_ciphertext_bit=bit, frame=bit)
        assert gtf == 0


def test_mitm_dh_substitution_detected_by_mac():
    gnb, (relay, receiver), _ = make_cell()
    gtf, transcript = run_relay_round(gnb, relay, receiver, b"chunk-0",
                                      mitm_dh_substitution=True)
    assert gtf == 0
    assert any(e["outcome"] == "mac-failure" for e in transcript.entries)


def test_unknown_attack_decision_rejected():
    gnb, (relay, receiver), _ = make_cell()
    with pytest.raises(ValueError):
        run_relay_round(gnb, relay, receiver, b"x", attack_decision="replay")


def test_unregistered_parties_rejected():
    gnb, (relay, receiver), _ = make_cell()
    stranger = gnb.make_ue(9, 11)
    with pytest.raises(ProtocolOrderError):
        run_relay_round(gnb, relay, stranger, b"x")
    with pytest.raises(ProtocolOrderError):
        run_relay_round(gnb, stranger, receiver, b"x")


def test_precomputed_origin_signature_accepted():
    gnb, (relay, receiver), _ = make_cell()
    sigma1 = gnb.signing.sign(b"chunk-0")
    gtf, _ = run_relay_round(gnb, relay, receiver, b"chunk-0",
                             precomputed_sigma1=sigma1)
    assert gtf == 1


def test_transcript_never_contains_permanent_identity():
    gnb, ues, transcript = make_cell(n_ue=3)
    relay, receiver = ues[0], ues[2]
    _, transcript = run_relay_round(gnb, relay, receiver, b"chunk-0",
                                    transcript=transcript)
    _, transcript = run_relay_round(gnb, relay, receiver, b"chunk-1",
                                    attack_decision="tamper",
                                    transcript=transcript, frame=1)
    text = transcript.to_jsonl()
    for ue in ues:
        assert ue.supi not in text
        assert f"{ue.node:010d}" not in text
    assert receiver.suci in text


def test_suci_fresh_per_session_and_resolvable():
    gnb, ues, _ = make_cell(n_ue=2)
    a, b = ues
    assert a.suci != b.suci
    assert gnb.registry[a.suci]["supi_secret"] == b"0000000000"
    assert gnb.registry[b.suci]["supi_secret"] == b"0000000001"


def test_dh_derive_requires_prior_keypair():
    gnb, (relay, receiver), _ = make_cell()
    with pytest.raises(ProtocolOrderError):
        receiver.dh_derive(99, relay.suci, 7)
