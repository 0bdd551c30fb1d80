import os

from roughlattice.errors import ConfigurationError

ENUMERATION_CAP = 20  # default |U| limit for 2^|U| sweeps such as enumerate_rs
UNIVERSE_CAP = 24  # no sweep may ever exceed this, whatever the override
FRAME_CHECK_CAP = 16
REALIZABILITY_SEARCH_CAP = 20  # counted on |upper \ lower|

CAP_ENV_VAR = "ROUGHLATTICE_CAP"

COMPONENT_COLORS = [
    "#2E86AB",
    "#A23B72",
    "#F18F01",
    "#C73E1D",
    "#6A994E",
    "#BC4B51",
    "#5B8C85",
    "#8B5A3C",
]

UNCOLORED_NODE = "#FFFFFF"

DOT_GRAPH_ATTRS = {"rankdir": "BT"}
DOT_NODE_ATTRS = {"shape": "box", "fontname": "Helvetica", "style": "filled"}


def enumeration_cap(override=None) -> int:
    """Resolve the effective enumeration cap: override, then env var, then default."""
    if override is not None:
        raw, source = override, "override"
    elif os.environ.get(CAP_ENV_VAR, "").strip():
        raw, source = os.environ[CAP_ENV_VAR].strip(), CAP_ENV_VAR
    else:
        return ENUMERATION_CAP

    try:
        cap = int(raw)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{source}: enumeration cap must be an integer, got {raw!r}")
    if cap < 1:
        raise ConfigurationError(f"{source}: enumeration cap must be >= 1, got {cap}")
    if cap > UNIVERSE_CAP:
        raise ConfigurationError(f"{source}: enumeration cap {cap} exceeds the hard limit {UNIVERSE_CAP}")
    return cap
