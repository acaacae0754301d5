"""Debug-mode switch.

Expensive precondition checks and the search-loop invariant monitor only run
when debug mode is on.  It can be enabled with the CERTMATCH_DEBUG
environment variable or programmatically via set_debug().
"""

from __future__ import annotations

import os

_enabled = os.environ.get("CERTMATCH_DEBUG", "") not in ("", "0", "false", "no")


def enabled() -> bool:
    return _enabled


def set_debug(on: bool) -> None:
    global _enabled
    _enabled = bool(on)
