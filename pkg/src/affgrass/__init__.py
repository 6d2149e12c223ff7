"""Exact arithmetic toolkit for Iwahori orbit closures in the affine Grassmannian."""

from .rootsys import (
    ConsistencyError,
    NotApplicableError,
    Root,
    RootSystem,
    UnsupportedRankError,
    WeylElement,
    root_system,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "NotApplicableError",
    "Root",
    "RootSystem",
    "UnsupportedRankError",
    "WeylElement",
    "root_system",
    "__version__",
]
