"""Python bindings for the udgroute unit-disk-graph routing library."""

from ._core import (
    AdditiveScheme,
    HierarchicalScheme,
    LowDiamScheme,
    UdgError,
    UnitDiskGraph,
    components,
    generate,
    load_sites,
    route_stored,
    save_sites,
    verify,
)

__all__ = [
    "AdditiveScheme",
    "HierarchicalScheme",
    "LowDiamScheme",
    "UdgError",
    "UnitDiskGraph",
    "components",
    "generate",
    "load_sites",
    "route_stored",
    "save_sites",
    "verify",
]
