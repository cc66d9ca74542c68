"""gNB-mediated secure relay protocol.

One relay round: the gNB signs and multicasts the payload, the D2D pair
agrees on a symmetric key through gNB-mediated DH, the relay encrypts and
signs, the receiver verifies both signatures after decryption and reports
back; the gNB turns the outcome into a good transmission flag.

Every UE<->gNB control message carries an HMAC keyed with a per-UE key
established at registration. Identities on the air interface are SUCIs;
the SUPI never appears in a transcript.
"""
import hashlib
import json
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import suites
from .suites import (HomeNetworkKeys, IntegrityError, ProtocolOrderError,
                     SigningKey, Suite, conceal, decrypt, encrypt, kdf, mac,
                     mac_verify, verify)


class MessageKind(Enum):
    SERVICE_NOTIFY = "ServiceNotify"
    REGISTER = "Register"
    CQI_REPORT = "CqiReport"
    TRUST_PARAMS = "TrustParams"
    D2D_INIT = "D2DInit"
    PAIR_ANNOUNCE = "PairAnnounce"
    SIGNED_MULTICAST_DATA = "SignedMulticastData"
    ENCRYPTED_RELAY_DATA = "EncryptedRelayData"
    KEY_REQUEST = "KeyRequest"
    KEY_RESPONSE = "KeyResponse"
    REPORT = "Report"


@dataclass(frozen=True)
class Identity:
    """Permanent identifier plus its concealed over-the-air form.

    Only the routing prefix of the SUPI stays in clear inside the SUCI.
    """

    supi: str
    suci: str

    @staticmethod
    def routing_part(supi: str) -> str:
        return "-".join(supi.split("-")[:2])

    @staticmethod
    def secret_part(supi: str) -> bytes:
        return supi.split("-", 2)[2].encode()


def make_suci(supi: str, home_public: int, suite: Suite,
              rng: random.Random) -> str:
    eph, ct = conceal(Identity.secret_part(supi), home_public, suite, rng)
    return f"suci-{Identity.routing_part(supi)}-{eph:x}-{ct.hex()}"


def parse_suci(suci: str) -> tuple[str, int, bytes]:
    _, mcc, mnc, eph, ct = suci.split("-")
    return f"{mcc}-{mnc}", int(eph, 16), bytes.fromhex(ct)


@dataclass
class ProtocolMessage:
    kind: MessageKind
    sender: str
    receiver: str
    payload: dict
    mac_tag: str = ""
    signature: str = ""

    def body_bytes(self) -> bytes:
        return json.dumps([self.kind.value, self.sender, self.receiver,
                           self.payload], sort_keys=True).encode()

    def seal(self, mac_key: bytes) -> "ProtocolMessage":
        self.mac_tag = mac(mac_key, self.body_bytes()).hex()
        return self

    def mac_ok(self, mac_key: bytes) -> bool:
        return mac_verify(mac_key, self.body_bytes(),
                          bytes.fromhex(self.mac_tag or "00"))


class Transcript:
    """Audit log of every over-the-air message."""

    def __init__(self):
        self.entries: list[dict] = []

    def log(self, frame: int, step: str, msg: ProtocolMessage,
            outcome: str = "ok") -> None:
        self.entries.append({
            "frame": frame,
            "step": step,
            "kind": msg.kind.value,
            "sender": msg.sender,
            "receiver": msg.receiver,
            "size": len(msg.body_bytes()),
            "outcome": outcome,
        })

    def to_jsonl(self) -> str:
        return "".join(json.dumps(e, sort_keys=True) + "\n"
                       for e in self.entries)


class UserEquipment:
    def __init__(self, node: int, suite: Suite, home_public: int, seed: int):
        self.node = node
        self.suite = suite
        self.rng = random.Random(f"ue:{seed}:{node}")
        self.supi = f"001-01-{node:010d}"
        self.suci = make_suci(self.supi, home_public, suite, self.rng)
        self.signing = SigningKey(f"ue-sign:{seed}:{node}".encode())
        self.mac_key: Optional[bytes] = None
        # per-frame DH state, keyed by (frame, peer suci)
        self._dh: dict[tuple[int, str], tuple[int, int]] = {}

    def dh_keypair(self, frame: int, peer_suci: str) -> int:
        secret, public = self.suite.group.keypair(self.rng)
        self._dh[(frame, peer_suci)] = (secret, public)
        return public

    def dh_derive(self, frame: int, peer_suci: str, peer_public: int) -> bytes:
        try:
            secret, _ = self._dh[(frame, peer_suci)]
        except KeyError:
            raise ProtocolOrderError(
                "no local DH state for this frame and peer") from None
        return kdf(self.suite.group.shared_secret(secret, peer_public),
                   b"d2d-data")


class GNodeB:
    """Base station: registry, trusted third party for key exchange, data
    origin signer, and judge of relay rounds."""

    def __init__(self, suite: Suite, seed: int):
        self.suite = suite
        self.rng = random.Random(f"gnb:{seed}")
        self.home_keys = HomeNetworkKeys(suite, self.rng)
        self.signing = SigningKey(f"gnb-sign:{seed}".encode())
        self.ctrl_secret, self.ctrl_public = suite.group.keypair(self.rng)
        self.registry: dict[str, dict] = {}  # suci -> session

    def make_ue(self, node: int, seed: int) -> UserEquipment:
        return UserEquipment(node, self.suite, self.home_keys.public, seed)

    def register(self, ue: UserEquipment, transcript: Transcript,
                 frame: int = 0) -> None:
        """Stub registration: bind the SUCI to a session and establish the
        per-UE MAC key (stand-in for the full AKA key hierarchy)."""
        ue_dh_secret, ue_dh_public = ue.suite.group.keypair(ue.rng)
        msg = ProtocolMessage(MessageKind.REGISTER, ue.suci, "gnb",
                              {"dh": f"{ue_dh_public:x}"})
        transcript.log(frame, "register", msg)
        supi_secret = self.home_keys.deconceal(
            parse_suci(ue.suci)[1:3])
        mac_key = kdf(self.suite.group.shared_secret(
            self.ctrl_secret, ue_dh_public), b"ue-mac")
        self.registry[ue.suci] = {"supi_secret": supi_secret,
                                  "mac_key": mac_key, "node": ue.node}
        ue.mac_key = kdf(ue.suite.group.shared_secret(
            ue_dh_secret, self.ctrl_public), b"ue-mac")

    def mac_key_of(self, suci: str) -> bytes:
        try:
            return self.registry[suci]["mac_key"]
        except KeyError:
            raise ProtocolOrderError("identity not registered") from None

    def is_registered(self, suci: str) -> bool:
        return suci in self.registry


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def run_relay_round(gnb: GNodeB, relay: UserEquipment,
                    receiver: UserEquipment, payload: bytes,
                    attack_decision: str = "honest",
                    transcript: Optional[Transcript] = None,
                    frame: int = 0,
                    receiver_reports: bool = True,
                    flip_ciphertext_bit: Optional[int] = None,
                    mitm_dh_substitution: bool = False,
                    precomputed_sigma1: Optional[bytes] = None
                    ) -> tuple[int, Transcript]:
    """Execute one secure relay round and return the good transmission flag.

    `attack_decision` drives the relay's behavior; `flip_ciphertext_bit`
    corrupts the D2D ciphertext in flight (attacker outside the pair);
    `mitm_dh_substitution` replaces the receiver's DH public value inside
    the MAC-protected init message, which the gNB must detect.
    """
    if transcript is None:
        transcript = Transcript()
    if not gnb.is_registered(receiver.suci):
        msg = ProtocolMessage(MessageKind.D2D_INIT, receiver.suci, "gnb", {})
        transcript.log(frame, "d2d_init", msg, outcome="rejected-unregistered")
        raise ProtocolOrderError("receiver not registered")
    if not gnb.is_registered(relay.suci):
        raise ProtocolOrderError("relay not registered")

    nonce = f"{frame}:{receiver.node}:{relay.node}".encode()

    # Data transmission to the multicast-served set: signed by the gNB.
    # The per-frame multicast signature may be precomputed once and shared
    # across the frame's relay rounds.
    sigma1 = precomputed_sigma1 or gnb.signing.sign(payload)
    mc_msg = ProtocolMessage(MessageKind.SIGNED_MULTICAST_DATA, "gnb",
                             relay.suci, {"size": len(payload),
                                          "sigma1": sigma1.hex()})
    transcript.log(frame, "multicast", mc_msg)

    # D2D initialization: receiver sends its DH public value to the gNB.
    recv_pub = receiver.dh_keypair(frame, relay.suci)
    sent_pub = recv_pub
    init_msg = ProtocolMessage(MessageKind.D2D_INIT, receiver.suci, "gnb",
                               {"dh": f"{recv_pub:x}"}).seal(receiver.mac_key)
    if mitm_dh_substitution:
        attacker_pub = pow(gnb.suite.group.g, 0xA77AC4E2 % gnb.suite.group.p,
                           gnb.suite.group.p)
        init_msg.payload = {"dh": f"{attacker_pub:x}"}
    if not init_msg.mac_ok(gnb.mac_key_of(receiver.suci)):
        transcript.log(frame, "d2d_init", init_msg, outcome="mac-failure")
        return 0, transcript
    transcript.log(frame, "d2d_init", init_msg)

    # Pair announcement: each peer learns the other's identity; the relay
    # also gets the receiver's DH value, mediated by the gNB.
    ann_relay = ProtocolMessage(
        MessageKind.PAIR_ANNOUNCE, "gnb", relay.suci,
        {"peer": receiver.suci, "dh": init_msg.payload["dh"],
         "peer_sign": receiver.signing.public_bytes().hex()},
    ).seal(gnb.mac_key_of(relay.suci))
    transcript.log(frame, "pair_announce", ann_relay)
    ann_recv = ProtocolMessage(
        MessageKind.PAIR_ANNOUNCE, "gnb", receiver.suci,
        {"peer": relay.suci, "peer_sign": relay.signing.public_bytes().hex()},
    ).seal(gnb.mac_key_of(receiver.suci))
    transcript.log(frame, "pair_announce", ann_recv)

    # Relay side: own DH value to the gNB, key derivation, encrypt and sign.
    relay_pub = relay.dh_keypair(frame, receiver.suci)
    key_resp = ProtocolMessage(MessageKind.KEY_RESPONSE, relay.suci, "gnb",
                               {"dh": f"{relay_pub:x}"}).seal(relay.mac_key)
    if not key_resp.mac_ok(gnb.mac_key_of(relay.suci)):
        transcript.log(frame, "key_response", key_resp, outcome="mac-failure")
        return 0, transcript
    transcript.log(frame, "key_response", key_resp)

    data_key = relay.dh_derive(frame, receiver.suci,
                               int(ann_relay.payload["dh"], 16))
    if attack_decision == "tamper":
        forwarded = bytes([payload[0] ^ 0xFF]) + payload[1:] if payload else b"\xff"
    elif attack_decision == "honest":
        forwarded = payload
    else:
        raise ValueError(f"unknown attack decision {attack_decision!r}")
    ciphertext = encrypt(data_key, nonce, forwarded + sigma1)
    if flip_ciphertext_bit is not None:
        idx, bit = divmod(flip_ciphertext_bit % (len(ciphertext) * 8), 8)
        ciphertext = (ciphertext[:idx]
                      + bytes([ciphertext[idx] ^ (1 << bit)])
                      + ciphertext[idx + 1:])
    sigma_j = relay.signing.sign(ciphertext)
    d2d_msg = ProtocolMessage(MessageKind.ENCRYPTED_RELAY_DATA, relay.suci,
                              receiver.suci, {"size": len(ciphertext),
                                              "sigma_j": sigma_j.hex()})
    transcript.log(frame, "d2d_data", d2d_msg)

    # Data check: receiver fetches the relay's DH value from the gNB, then
    # verifies relay signature, decrypts, and verifies the gNB signature.
    key_req = ProtocolMessage(MessageKind.KEY_REQUEST, receiver.suci, "gnb",
                              {"pair": relay.suci}).seal(receiver.mac_key)
    transcript.log(frame, "key_request", key_req)
    key_fwd = ProtocolMessage(MessageKind.KEY_RESPONSE, "gnb", receiver.suci,
                              {"dh": key_resp.payload["dh"]},
                              ).seal(gnb.mac_key_of(receiver.suci))
    transcript.log(frame, "key_forward", key_fwd)

    breach = False
    digest = ""
    relay_sign_pub = bytes.fromhex(ann_recv.payload["peer_sign"])
    if not verify(ciphertext, sigma_j, relay_sign_pub):
        breach = True
    else:
        recv_key = receiver.dh_derive(frame, relay.suci,
                                      int(key_fwd.payload["dh"], 16))
        try:
            plain = decrypt(recv_key, nonce, ciphertext)
            data, inner_sig = plain[:-64], plain[-64:]
            if verify(data, inner_sig, gnb.signing.public_bytes()):
                digest = _digest(data)
            else:
                breach = True
        except IntegrityError:
            breach = True

    if not receiver_reports:
        # Waiting period expires with no report.
        return 0, transcript

    report = ProtocolMessage(
        MessageKind.REPORT, receiver.suci, "gnb",
        {"status": "breach" if breach else "ok", "digest": digest,
         "sigma_j": sigma_j.hex(), "ct_digest": _digest(ciphertext)},
    ).seal(receiver.mac_key)
    if not report.mac_ok(gnb.mac_key_of(receiver.suci)):
        transcript.log(frame, "report", report, outcome="mac-failure")
        return 0, transcript
    transcript.log(frame, "report", report)

    # gNB verdict: a positive report must match the original payload; a
    # breach report is confirmed against the gNB's own knowledge of the
    # data and the relay's signature over the reported ciphertext.
    if report.payload["status"] == "ok":
        gtf = 1 if report.payload["digest"] == _digest(payload) else 0
    else:
        gtf = 0
    return gtf, transcript
