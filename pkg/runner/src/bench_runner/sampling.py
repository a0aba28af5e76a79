"""Deterministic training-pool subsampling.

Implements the generator toolkit's published subsampling contract: a draw
of `size` examples uniformly without replacement, keyed by
(task, size, run, base_seed) through FNV-1a + SplitMix64 into a Mersenne
stream, with the full-size draw returning the pool unchanged. Keeping the
same derivation here means a cell's subset can be reconstructed from the
dataset files alone.
"""

import random
from typing import Sequence, TypeVar

T = TypeVar("T")

_MASK64 = 0xFFFFFFFFFFFFFFFF
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def _fnv1a(h: int, data: bytes) -> int:
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & _MASK64
    return h


def _splitmix(h: int) -> int:
    h = (h + 0x9E3779B97F4A7C15) & _MASK64
    h ^= h >> 30
    h = (h * 0xBF58476D1CE4E5B9) & _MASK64
    h ^= h >> 27
    h = (h * 0x94D049BB133111EB) & _MASK64
    return h ^ (h >> 31)


def _encode(part) -> bytes:
    if isinstance(part, int):
        return b"i" + part.to_bytes(16, "little", signed=True)
    raw = part.encode("utf-8")
    return b"s" + len(raw).to_bytes(4, "little") + raw


def subsample_seed(base_seed: int, task: str, size: int, run: int) -> int:
    h = _fnv1a(_FNV_OFFSET, _encode(base_seed))
    for part in ("subsample", task, size, run):
        h = _fnv1a(h, _encode(part))
    return _splitmix(h)


def subsample(pool: Sequence[T], task: str, size: int, run: int,
              base_seed: int) -> list[T]:
    if size > len(pool):
        raise ValueError(f"requested {size} examples from a pool of {len(pool)}")
    if size == len(pool):
        return list(pool)
    rng = random.Random(subsample_seed(base_seed, task, size, run))
    return rng.sample(list(pool), size)
