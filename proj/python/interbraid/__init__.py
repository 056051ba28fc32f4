"""Braid computations for interchange coherence on four strands."""

from ._core import (
    BraidWord,
    braiding_obstruction,
    cable,
    canonical_key,
    classify,
    closure_summary,
    concat,
    conjugacy_certificate,
    coset_property_sample,
    cycles,
    delete_strands,
    derive_L,
    derive_Lp,
    derive_R,
    derive_Rp,
    embed,
    equals,
    exponent_sum,
    family,
    free_reduce,
    hexagon_check,
    hexagon_check_mirror,
    hexagon_words,
    inner_outer_profile,
    inverse,
    is_candidate,
    is_interchanging,
    is_trivial,
    normal_form,
    obstruction_screens,
    parse_word,
    perm,
    power,
    rotate180,
    run_search,
)

__all__ = [
    "BraidWord",
    "braiding_obstruction",
    "cable",
    "canonical_key",
    "classify",
    "closure_summary",
    "concat",
    "conjugacy_certificate",
    "coset_property_sample",
    "cycles",
    "delete_strands",
    "derive_L",
    "derive_Lp",
    "derive_R",
    "derive_Rp",
    "embed",
    "equals",
    "exponent_sum",
    "family",
    "free_reduce",
    "hexagon_check",
    "hexagon_check_mirror",
    "hexagon_words",
    "inner_outer_profile",
    "inverse",
    "is_candidate",
    "is_interchanging",
    "is_trivial",
    "normal_form",
    "obstruction_screens",
    "parse_word",
    "perm",
    "power",
    "rotate180",
    "run_search",
]
