"""Size guards for the expensive searches.

Defaults are chosen for desk-scale work.  The environment variable
``CAYLEYNET_GUARD`` overrides them: either a bare integer (which replaces
the closure guard) or a comma-separated list of ``name=value`` pairs, e.g.
``CAYLEYNET_GUARD="closure=200000,aut_vertices=64"``.
"""

from __future__ import annotations

import os

DEFAULTS = {
    "closure": 10_000_000,     # max group elements enumerated by closure()
    "aut_vertices": 200,       # max vertex count for automorphism search
    "aut_elements": 1_000_000, # max stored automorphisms
    "aut_nodes": 20_000_000,   # backtracking node budget
    "atoms_vertices": 24,      # max vertex count for atom enumeration
    "atoms_kappa": 5,          # max connectivity for atom enumeration
}

_ENV_VAR = "CAYLEYNET_GUARD"


def _parse_env(raw: str) -> dict[str, int]:
    raw = raw.strip()
    if not raw:
        return {}
    if "=" not in raw:
        return {"closure": int(raw)}
    out = {}
    for part in raw.split(","):
        name, _, value = part.partition("=")
        name = name.strip()
        if name not in DEFAULTS:
            raise ValueError(f"unknown guard name {name!r} in {_ENV_VAR}")
        out[name] = int(value)
    return out


def guard_value(name: str, override: int | None = None) -> int:
    """Resolve a guard: explicit override > environment > default."""
    if override is not None:
        return override
    raw = os.environ.get(_ENV_VAR)
    if raw:
        env = _parse_env(raw)
        if name in env:
            return env[name]
    return DEFAULTS[name]
