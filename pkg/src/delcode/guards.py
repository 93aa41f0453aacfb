"""Desk-scale enumeration caps, overridable through the environment."""

import os

from .errors import ScaleGuardExceeded

ENV_VAR = "DELCODE_SCALE_GUARD"

CLASS_ENUM_CAP = 10**7  # weight-n words of length q
PERM_ENUM_CAP = 40320  # full scan of S_n, default n <= 8


def scale_cap(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    return int(raw) if raw else default


def check_enumerable(size: int, default_cap: int, what: str) -> None:
    cap = scale_cap(default_cap)
    if size > cap:
        raise ScaleGuardExceeded(
            f"{what} would visit {size} items, above the cap of {cap} "
            f"(set {ENV_VAR} to raise it)"
        )
