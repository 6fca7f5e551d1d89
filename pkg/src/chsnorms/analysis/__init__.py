"""Majorization, cospectral pairs and exhaustive extremal verification."""

from .cospectral import distinguish, make_pair
from .enumeration import enumerate_connected, enumerate_trees
from .extremal import (
    BoundCheck,
    ExtremalReport,
    check_theorem3,
    verify_theorem2,
    verify_theorem2_multi,
)
from .majorization import MajorizationWitness, majorizes

__all__ = [
    "BoundCheck",
    "ExtremalReport",
    "MajorizationWitness",
    "check_theorem3",
    "distinguish",
    "enumerate_connected",
    "enumerate_trees",
    "make_pair",
    "majorizes",
    "verify_theorem2",
    "verify_theorem2_multi",
]
