"""Size caps for the brute-force and exhaustive routines.

Every oracle in this package is exact but exponential, so each one is
guarded by a cap that keeps it at desk scale.  Caps can be raised through
the ``PERMCM_CAPS`` environment variable, a comma-separated list such as
``PERMCM_CAPS="vd=8,hochster=16"``.  Raising a cap never changes results,
only runtimes, but anything above the defaults is unsupported territory.
"""

from __future__ import annotations

import os

DEFAULT_CAPS: dict[str, int] = {
    # verification sweeps (maximum n for S_n enumeration)
    "vd": 7,
    "cm": 7,
    "goren": 7,
    "nearly": 7,
    "ainv": 6,
    "bicm": 6,
    "hilb": 6,
    "covs": 6,
    "shed": 7,
    "gap": 8,
    "survey": 8,
    # algebraic oracles
    "hochster": 14,          # ambient vertices for the full Betti table
    "shelling": 8,           # facet count for the brute-force shelling test
    "linear_quotients": 20,  # generator count for the linear-quotients search
    "vertex_splittable": 20, # generator count for the splitting search
}

_ENV_VAR = "PERMCM_CAPS"


class CapExceededError(ValueError):
    """An input exceeded the configured size cap for an operation."""


def get_cap(name: str) -> int:
    """Return the cap for ``name``, honouring PERMCM_CAPS overrides."""
    if name not in DEFAULT_CAPS:
        raise KeyError(f"unknown cap {name!r}")
    raw = os.environ.get(_ENV_VAR, "")
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        if key.strip() == name:
            try:
                return int(value)
            except ValueError as exc:
                raise ValueError(f"bad {_ENV_VAR} entry {item!r}") from exc
    return DEFAULT_CAPS[name]


def check_cap(name: str, value: int, what: str = "input") -> None:
    cap = get_cap(name)
    if value > cap:
        raise CapExceededError(
            f"{what} size {value} exceeds the {name!r} cap {cap} "
            f"(override with {_ENV_VAR}={name}=...)"
        )
