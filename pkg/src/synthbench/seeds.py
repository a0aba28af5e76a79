"""Deterministic derivation of independent random streams.

Every logical unit of randomness (a task split, a subsample draw, a corpus
sentence) owns its own stream derived from a 64-bit master seed plus a tuple
of string/int parts. Parts are serialized to bytes, folded with 64-bit
FNV-1a, and finalized with the SplitMix64 mixer, so the result is identical
across processes and platforms (no dependence on Python's salted ``hash``).
"""

import random

MASK64 = 0xFFFFFFFFFFFFFFFF
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def _fnv1a(h: int, data: bytes) -> int:
    for b in data:
        h ^= b
        h = (h * FNV_PRIME) & MASK64
    return h


def _splitmix(h: int) -> int:
    h = (h + SPLITMIX_GAMMA) & MASK64
    h ^= h >> 30
    h = (h * 0xBF58476D1CE4E5B9) & MASK64
    h ^= h >> 27
    h = (h * 0x94D049BB133111EB) & MASK64
    return h ^ (h >> 31)


def _encode(part) -> bytes:
    # Length-prefixed, type-tagged encoding so ("ab", "c") != ("a", "bc").
    if isinstance(part, bool):
        raise TypeError("bool seed parts are ambiguous; use int or str")
    if isinstance(part, int):
        return b"i" + part.to_bytes(16, "little", signed=True)
    if isinstance(part, str):
        raw = part.encode("utf-8")
        return b"s" + len(raw).to_bytes(4, "little") + raw
    raise TypeError(f"unsupported seed part type: {type(part).__name__}")


def derive_seed(master: int, *parts) -> int:
    """Mix a master seed and key parts into a stable 64-bit stream seed."""
    h = _fnv1a(FNV_OFFSET, _encode(master))
    for part in parts:
        h = _fnv1a(h, _encode(part))
    return _splitmix(h)


def derive_stream(master: int, *parts) -> random.Random:
    """A ``random.Random`` deterministically derived from (master, parts)."""
    return random.Random(derive_seed(master, *parts))
