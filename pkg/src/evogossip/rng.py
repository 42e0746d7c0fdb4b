"""Deterministic random streams keyed by (seed, stream id)."""

from __future__ import annotations

import random

MASK64 = (1 << 64) - 1


def mix64(*parts: int) -> int:
    """Stable 64-bit hash of an integer tuple (splitmix64 finalizer chain).

    Used wherever a derived seed must be reproducible across runs and
    platforms; Python's built-in hash() is salted per process and not
    suitable.
    """
    h = 0x9E3779B97F4A7C15
    for p in parts:
        h = (h + (p & MASK64)) & MASK64
        h = ((h ^ (h >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        h = ((h ^ (h >> 27)) * 0x94D049BB133111EB) & MASK64
        h ^= h >> 31
    return h


def spawn_rng(seed: int, stream_id: str | int) -> random.Random:
    """Independent deterministic stream for (seed, stream_id).

    String seeding hashes through SHA-512 inside random.Random, so equal
    (seed, stream_id) pairs give identical draw sequences on any platform
    and distinct stream ids behave independently.
    """
    return random.Random(f"{seed}/{stream_id}")
