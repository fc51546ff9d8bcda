"""Exact verification of CSSC(2n) = TSSC(2n)^2 through symmetric plane
partitions, lozenge tilings, orbit-graph matchings and lattice paths."""

from .exactnum import binom
from .matrices import (
    RationalMatrix,
    build_st,
    build_U,
    build_w,
    cssc_det,
    determinant,
    tssc_det,
    tssc_sq_st,
    tssc_sq_w,
)

__version__ = "0.1.0"

__all__ = [
    "RationalMatrix",
    "binom",
    "build_U",
    "build_st",
    "build_w",
    "cssc_det",
    "determinant",
    "tssc_det",
    "tssc_sq_st",
    "tssc_sq_w",
]
