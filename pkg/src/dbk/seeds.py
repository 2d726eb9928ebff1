"""Stable seed derivation so every stochastic stage replays exactly."""

from __future__ import annotations

import hashlib


def derive_seed(*parts) -> int:
    """31-bit seed derived from the given parts via SHA-256.

    Parts should be ints or strings (their repr is platform-stable). The
    same parts always yield the same seed, on any platform or run.
    """
    text = ":".join(repr(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "big") & 0x7FFFFFFF
