"""Locked derived values.

Each entry is recomputed from the library; ``write_locked`` stores them and
``check_locked`` compares a stored file with a fresh computation.
"""

from __future__ import annotations

import json
from pathlib import Path

from .parking import rise_gf, val_gf
from .qseries import DistributionKey, brute_force_D, q_binomial, q_factorial, q_stirling

LOCKED_FILE = "locked_polynomials.json"

_GF_KEYS = [
    (3, 1, 0, (1, 1, 1)),
    (3, 0, 0, (1, 1, 1)),
    (3, 1, 0, (2, 1)),
    (2, 0, 1, (1, 1)),
    (3, 1, 1, (2, 1)),
    (2, 1, 2, (1, 1)),
]

_D_KEYS = [
    DistributionKey(0, (1, 1, 1), 2),
    DistributionKey(0, (1, 1, 1, 1), 2),
    DistributionKey(2, (2, 1), 3),
    DistributionKey(2, (2, 1), 3, "all"),
    DistributionKey(1, (1, 2), 2, shape=(2, 2)),
]


def _entries() -> dict[str, str]:
    out: dict[str, str] = {}
    for n, k, r, beta in _GF_KEYS:
        b = ",".join(map(str, beta))
        out[f"rise_gf(n={n},k={k},r={r},beta=({b}))"] = rise_gf(n, k, r, beta).serialize()
        out[f"val_gf(n={n},k={k},r={r},beta=({b}))"] = val_gf(n, k, r, beta).serialize()
    for key in _D_KEYS:
        for stat in ("inv", "maj", "dinv", "minimaj"):
            k2 = DistributionKey(key.r, key.beta, key.k, key.variant, stat, key.shape)
            out[f"D[{k2}]"] = brute_force_D(k2).serialize()
    out["q_binomial(4,2)"] = q_binomial(4, 2).serialize()
    out["q_factorial(3)"] = q_factorial(3).serialize()
    for n, k in ((3, 2), (4, 2), (5, 3)):
        out[f"q_stirling({n},{k})"] = q_stirling(n, k).serialize()
        out[f"[{k}]_q!*q_stirling({n},{k})"] = (q_factorial(k) * q_stirling(n, k)).serialize()
    return out


def locked_values() -> dict[str, str]:
    return _entries()


def write_locked(directory) -> Path:
    path = Path(directory) / LOCKED_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(locked_values(), indent=1) + "\n")
    return path


def check_locked(directory) -> list[str]:
    """Keys whose stored value differs from (or is missing in) a fresh computation."""
    stored = json.loads((Path(directory) / LOCKED_FILE).read_text())
    fresh = locked_values()
    return sorted(k for k in set(stored) | set(fresh) if stored.get(k) != fresh.get(k))
