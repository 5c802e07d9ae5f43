"""Spherical permutations: four equivalent classifiers and the symmetric
group combinatorics behind them.

Composition is ``u * w``: apply w first, then u.
"""

from .bruhat import (
    BruhatInterval,
    bruhat_covers_up,
    bruhat_leq,
    build_interval,
    first_dominance_failure,
    interval_edge_lines,
    is_boolean_lattice,
    prefix_leq,
)
from .classify import (
    BACKENDS,
    CrossCheckReport,
    DensityRow,
    Disagreement,
    PatternCatalog,
    catalog,
    cross_check,
    density_table,
    explain,
    is_spherical,
    parabolic_quotient,
    verify_catalog_characterizations,
)
from .divisibility import (
    DivisibilityWitness,
    divisible_after,
    divisible_at,
    is_divisible,
    witness_text,
)
from .permutations import (
    GeneratorSet,
    PatternOccurrence,
    Permutation,
    avoids_all,
    contains_pattern,
    dominates,
    first_pattern_occurrence,
    longest_parabolic,
    pattern_occurrences,
    relative_order,
    symmetric_group,
)
from .reduced_words import (
    SphericalBudget,
    dynkin_components,
    enumerate_reduced_words,
    is_boolean_by_words,
    is_spherical_by_definition,
    repetition_free_word,
    spherical_witness_word,
    word_is_repetition_free,
    word_to_permutation,
    word_to_text,
)

__all__ = [
    "BACKENDS",
    "BruhatInterval",
    "CrossCheckReport",
    "DensityRow",
    "Disagreement",
    "DivisibilityWitness",
    "GeneratorSet",
    "PatternCatalog",
    "PatternOccurrence",
    "Permutation",
    "SphericalBudget",
    "avoids_all",
    "bruhat_covers_up",
    "bruhat_leq",
    "build_interval",
    "catalog",
    "contains_pattern",
    "cross_check",
    "density_table",
    "divisible_after",
    "divisible_at",
    "dominates",
    "dynkin_components",
    "enumerate_reduced_words",
    "explain",
    "first_dominance_failure",
    "first_pattern_occurrence",
    "interval_edge_lines",
    "is_boolean_by_words",
    "is_boolean_lattice",
    "is_divisible",
    "is_spherical",
    "is_spherical_by_definition",
    "longest_parabolic",
    "parabolic_quotient",
    "pattern_occurrences",
    "prefix_leq",
    "relative_order",
    "repetition_free_word",
    "spherical_witness_word",
    "symmetric_group",
    "verify_catalog_characterizations",
    "witness_text",
    "word_is_repetition_free",
    "word_to_permutation",
    "word_to_text",
]
