from .suites import (DHGroup, HomeNetworkKeys, IntegrityError,
                     ProtocolOrderError, SigningKey, Suite, SUITES,
                     STANDARD_SUITE, TOY_SUITE, conceal, decrypt, encrypt,
                     kdf, mac, mac_verify, verify)
from .protocol import (GNodeB, Identity, MessageKind, ProtocolMessage,
                       Transcript, UserEquipment, make_suci, parse_suci,
                       run_relay_round)

__all__ = [
    "DHGroup", "HomeNetworkKeys", "IntegrityError", "ProtocolOrderError",
    "SigningKey", "Suite", "SUITES", "STANDARD_SUITE", "TOY_SUITE",
    "conceal", "decrypt", "encrypt", "kdf", "mac", "mac_verify", "verify",
    "GNodeB", "Identity", "MessageKind", "ProtocolMessage", "Transcript",
    "UserEquipment", "make_suci", "parse_suci", "run_relay_round",
]
