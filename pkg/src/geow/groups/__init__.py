"""Finitely presented group kernel: words, Smith normal form, coset tables."""
from .words import Word, WordError, commutator, free_reduce, parse_relation, parse_word
from .smith import SmithResult, integer_rank, invariant_factors, smith_normal_form
from .presentation import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    commutator_pattern_check,
    curve_relation,
    curve_subgroup_generators,
    load_presentation,
    luttinger_relations_yn,
    luttinger_relations_yn1,
    parse_presentation,
    parse_word_list,
    surface_group,
)
from .cosets import (
    CosetError,
    CosetTable,
    coset_enumeration,
    identify_group,
    is_normal,
    quotient_group,
    quotient_identify,
)
from .catalog import CATALOG, catalog_presentation

__all__ = [name for name in dir() if not name.startswith("_")]
