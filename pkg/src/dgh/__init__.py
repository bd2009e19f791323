"""Homotopy invariants of finite directed graphs via truncated cubical nerves."""

from .digraph import (
    Digraph,
    DigraphMap,
    DigraphPair,
    INFINITY,
    box_hom,
    box_product,
    disjoint_union,
    distance,
    pair_box_hom,
    pair_box_product,
    pi0,
    point,
    power_digraph,
    pushout_along_induced_inclusion,
)
from .intervals import (
    Interval,
    TowerSpec,
    cantor_interval,
    cantor_projection,
    enumerate_shrinkings,
    sphere_digraph,
    standard_interval,
    truncation,
)

__all__ = [
    "Digraph",
    "DigraphMap",
    "DigraphPair",
    "INFINITY",
    "Interval",
    "TowerSpec",
    "box_hom",
    "box_product",
    "cantor_interval",
    "cantor_projection",
    "disjoint_union",
    "distance",
    "enumerate_shrinkings",
    "pair_box_hom",
    "pair_box_product",
    "pi0",
    "point",
    "power_digraph",
    "pushout_along_induced_inclusion",
    "sphere_digraph",
    "standard_interval",
    "truncation",
]
