"""Pluggable cryptographic primitive suites.

Two suites share the same constructions and differ in the finite-field DH
group size: `toy` (small group, exhaustively attackable, used by tests) and
`standard` (2048-bit MODP group). Symmetric encryption is a hash-stream
cipher with encrypt-then-MAC; signatures are Ed25519; identity concealment
is hybrid encryption against the home network's static DH key.
"""
import hashlib
import hmac as hmac_mod
import random
from dataclasses import dataclass

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives.asymmetric.ed25519 import (
    Ed25519PrivateKey, Ed25519PublicKey)

MAC_LEN = 16


class IntegrityError(Exception):
    """Authenticated decryption or MAC verification failed."""


class ProtocolOrderError(Exception):
    """An operation ran before its protocol prerequisites."""


@dataclass(frozen=True)
class DHGroup:
    p: int
    g: int

    def keypair(self, rng: random.Random) -> tuple[int, int]:
        secret = rng.randrange(2, self.p - 1)
        return secret, pow(self.g, secret, self.p)

    def shared_secret(self, own_secret: int, peer_public: int) -> int:
        return pow(peer_public, own_secret, self.p)


# 2048-bit MODP group (RFC 3526 group 14).
_MODP_2048_P = int(
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD1"
    "29024E088A67CC74020BBEA63B139B22514A08798E3404DD"
    "EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245"
    "E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3D"
    "C2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F"
    "83655D23DCA3AD961C62F356208552BB9ED529077096966D"
    "670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9"
    "DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF", 16)

TOY_GROUP = DHGroup(p=2579, g=2)
STANDARD_GROUP = DHGroup(p=_MODP_2048_P, g=2)


def kdf(shared_secret: int, context: bytes = b"") -> bytes:
    size = (shared_secret.bit_length() + 7) // 8 or 1
    raw = shared_secret.to_bytes(size, "big")
    return hashlib.sha256(b"setd2d-kdf|" + context + b"|" + raw).digest()


def mac(key: bytes, data: bytes) -> bytes:
    return hmac_mod.new(key, data, hashlib.sha256).digest()[:MAC_LEN]


def mac_verify(key: bytes, data: bytes, tag: bytes) -> bool:
    return hmac_mod.compare_digest(mac(key, data), tag)


def _keystream(key: bytes, nonce: bytes, length: int) -> bytes:
    out = bytearray()
    counter = 0
    while len(out) < length:
        out += hashlib.sha256(key + nonce + counter.to_bytes(8, "big")).digest()
        counter += 1
    return bytes(out[:length])


def encrypt(key: bytes, nonce: bytes, plaintext: bytes) -> bytes:
    """Stream encryption with an appended authentication tag."""
    enc_key = hashlib.sha256(b"enc|" + key).digest()
    mac_key = hashlib.sha256(b"mac|" + key).digest()
    body = bytes(a ^ b for a, b in
                 zip(plaintext, _keystream(enc_key, nonce, len(plaintext))))
    return body + mac(mac_key, nonce + body)


def decrypt(key: bytes, nonce: bytes, ciphertext: bytes) -> bytes:
    if len(ciphertext) < MAC_LEN:
        raise IntegrityError("ciphertext shorter than the tag")
    body, tag = ciphertext[:-MAC_LEN], ciphertext[-MAC_LEN:]
    mac_key = hashlib.sha256(b"mac|" + key).digest()
    if not mac_verify(mac_key, nonce + body, tag):
        raise IntegrityError("authentication tag mismatch")
    enc_key = hashlib.sha256(b"enc|" + key).digest()
    return bytes(a ^ b for a, b in
                 zip(body, _keystream(enc_key, nonce, len(body))))


class SigningKey:
    """Origin signature key pair, derivable from a 32-byte seed so that
    simulated runs are reproducible."""

    def __init__(self, seed: bytes):
        self._sk = Ed25519PrivateKey.from_private_bytes(
            hashlib.sha256(b"sign|" + seed).digest())

    def public_bytes(self) -> bytes:
        return self._sk.public_key().public_bytes_raw()

    def sign(self, data: bytes) -> bytes:
        return self._sk.sign(data)


def verify(data: bytes, signature: bytes, signer_public: bytes) -> bool:
    try:
        Ed25519PublicKey.from_public_bytes(signer_public).verify(signature, data)
        return True
    except (InvalidSignature, ValueError):
        return False


@dataclass(frozen=True)
class Suite:
    name: str
    group: DHGroup


TOY_SUITE = Suite(name="toy", group=TOY_GROUP)
STANDARD_SUITE = Suite(name="standard", group=STANDARD_GROUP)

SUITES = {s.name: s for s in (TOY_SUITE, STANDARD_SUITE)}


class HomeNetworkKeys:
    """Static key pair used to conceal subscriber identities."""

    def __init__(self, suite: Suite, rng: random.Random):
        self.suite = suite
        self._secret, self.public = suite.group.keypair(rng)

    def deconceal(self, blob: tuple[int, bytes]) -> bytes:
        eph_public, ciphertext = blob
        key = kdf(self.suite.group.shared_secret(self._secret, eph_public),
                  b"suci")
        try:
            return decrypt(key, b"suci", ciphertext)
        except IntegrityError:
            raise IntegrityError("deconcealment failed: wrong key or tampering")


def conceal(secret_part: bytes, home_public: int, suite: Suite,
            rng: random.Random) -> tuple[int, bytes]:
    """Randomized concealment of the secret identifier part under the home
    network public key (ephemeral DH plus authenticated encryption)."""
    eph_secret, eph_public = suite.group.keypair(rng)
    key = kdf(suite.group.shared_secret(eph_secret, home_public), b"suci")
    return eph_public, encrypt(key, b"suci", secret_part)
