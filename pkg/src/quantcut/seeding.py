"""Deterministic seed derivation shared by the pipeline and the algorithms."""

from __future__ import annotations

import hashlib


def derive_seed(master_seed: int, component: str) -> int:
    """Stable 64-bit sub-seed for a named component.

    Uses SHA-256 rather than ``hash()`` because the latter is salted per
    process and would break run-to-run reproducibility.
    """
    digest = hashlib.sha256(f"{master_seed}:{component}".encode()).digest()
    return int.from_bytes(digest[:8], "big")
