"""Canonical cusp triangulations, symmetries and commensurability of 2-bridge links.

From a 2-bridge word this package builds the canonical cusp triangulation of
the link complement as a finite quotient-torus complex, computes its valence
structure and automorphism group, decides symmetry groups and hidden-symmetry
verdicts, and classifies commensurability, reproducing the classification
theorems for 2-bridge link complements by exact combinatorial computation.
"""

from .automorphisms import (
    AutElement,
    SymmetryGroup,
    enumerate_automorphisms,
    full_translation_quotient,
    induced_symmetry_subgroup,
    is_candidate_automorphism,
    predicted_symmetry_group,
)
from .commens import (
    CommensurabilityVerdict,
    HiddenSymmetryVerdict,
    analysis_report,
    census,
    commensurable,
    cover_report,
    detectable_hidden_elements,
    enumerate_words,
    hidden_symmetry_verdict,
)
from .cusp import (
    CuspComplex,
    ExcludedWordError,
    InvariantError,
    ValenceTable,
    build_complex,
    edge_vertex_correspondence,
    expected_valences,
    is_excluded,
)
from .orbifold import (
    ArithmeticWordError,
    LadderInvariant,
    OrbifoldCusp,
    ladder_invariant,
    minimal_orbifold_cusp,
    structural_ladder,
)
from .render import render_svg
from .words import (
    NonHyperbolicError,
    Slope,
    SlopeSequence,
    TwoBridgeWord,
    WordError,
    canonical_form,
    component_count,
    continued_fraction,
    is_arithmetic,
    is_hyperbolic,
    is_palindromic,
    normalize,
    parse_word,
    slope_sequence,
)

__all__ = [
    "AutElement",
    "ArithmeticWordError",
    "CommensurabilityVerdict",
    "CuspComplex",
    "ExcludedWordError",
    "HiddenSymmetryVerdict",
    "InvariantError",
    "LadderInvariant",
    "NonHyperbolicError",
    "OrbifoldCusp",
    "Slope",
    "SlopeSequence",
    "SymmetryGroup",
    "TwoBridgeWord",
    "ValenceTable",
    "WordError",
    "analysis_report",
    "build_complex",
    "canonical_form",
    "census",
    "commensurable",
    "component_count",
    "continued_fraction",
    "cover_report",
    "detectable_hidden_elements",
    "edge_vertex_correspondence",
    "enumerate_automorphisms",
    "enumerate_words",
    "expected_valences",
    "full_translation_quotient",
    "hidden_symmetry_verdict",
    "induced_symmetry_subgroup",
    "is_arithmetic",
    "is_candidate_automorphism",
    "is_excluded",
    "is_hyperbolic",
    "is_palindromic",
    "ladder_invariant",
    "minimal_orbifold_cusp",
    "normalize",
    "parse_word",
    "predicted_symmetry_group",
    "render_svg",
    "slope_sequence",
    "structural_ladder",
]
