"""Exact and fixed-precision p-adic dynamics of the (3,2)-rational map family."""

from .classifier import CaseTag, classify, critical_data
from .map32 import MapParams, multiplier, orbit
from .padic import ExactPadic
from .radius import Radius

__all__ = ["CaseTag", "ExactPadic", "MapParams", "Radius", "classify", "critical_data",
           "multiplier", "orbit"]
__version__ = "0.1.0"
