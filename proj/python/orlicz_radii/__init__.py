"""Orlicz sums of convex bodies and their successive radii."""

from ._core import (
    Body,
    DomainError,
    Error,
    OrliczSum,
    ParseError,
    Phi,
    circumradius,
    cube,
    default_phis,
    diameter,
    inner_radius,
    inradius,
    minkowski_sum,
    orlicz_norm,
    orlicz_support,
    outer_radius,
    radii,
    random_polytope,
    reflect,
    segment,
    simplex,
    verify,
    width,
)

__all__ = [
    "Body",
    "DomainError",
    "Error",
    "OrliczSum",
    "ParseError",
    "Phi",
    "circumradius",
    "cube",
    "default_phis",
    "diameter",
    "inner_radius",
    "inradius",
    "minkowski_sum",
    "orlicz_norm",
    "orlicz_support",
    "outer_radius",
    "radii",
    "random_polytope",
    "reflect",
    "segment",
    "simplex",
    "verify",
    "width",
]
