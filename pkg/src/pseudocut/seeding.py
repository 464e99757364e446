"""Deterministic seed derivation.

Per-run seeds are derived by hashing a master seed together with contextual
labels (algorithm name, sweep point, draw index, ...) so that adding an
algorithm to an experiment never perturbs the randomness of other runs, and
every draw index maps to the same target set for all algorithms.
"""

import hashlib


def mix64(*parts) -> int:
    """Mix arbitrary labels into a 64-bit seed, stable across platforms."""
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        h.update(str(part).encode("utf-8"))
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big")
