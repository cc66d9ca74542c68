"""setd2d: deterministic simulator of trust-aware, security-protected D2D
relay selection for multicast delivery in a single 5G cell."""

__version__ = "0.1.0"
