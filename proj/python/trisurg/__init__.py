"""Surgery on triangulated punctured surfaces."""

from ._trisurg import (
    Triangulation,
    TrisurgError,
    certify,
    detect,
    enumerate_catalog,
    fixture_names,
    is_contractible,
    reduce,
    replay,
)

__all__ = [
    "Triangulation",
    "TrisurgError",
    "certify",
    "detect",
    "enumerate_catalog",
    "fixture_names",
    "is_contractible",
    "reduce",
    "replay",
]
