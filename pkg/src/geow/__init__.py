"""Invariant bookkeeping for cut-and-paste constructions of 4-manifolds,
abelian covers of line arrangements, and a small finitely presented group
kernel, bound together by a recipe language."""

from .invariants import (BMY, ClassificationRefused, InvariantError, Kind, ManifoldClass, Minimal, Pi1, Spin,
                         StandardForm, Surface, blow_up, blow_up_node, bmy_check, cite, classify_homeo,
                         connected_sum, knot_surgery, luttinger, resolve, standard_form, symplectic_sum,
                         torus_surgery)
from .blocks import REGISTRY, BlockError, block

__version__ = "0.1.0"
