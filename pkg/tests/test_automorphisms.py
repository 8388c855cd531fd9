from hypothesis import given, settings, strategies as st

from twobridge.automorphisms import (
    enumerate_automorphisms,
    full_translation_quotient,
    induced_symmetry_subgroup,
    is_candidate_automorphism,
    predicted_symmetry_group,
)
from twobridge.cusp import CLASP, MERIDIONAL, build_complex
from twobridge.words import TwoBridgeWord, is_arithmetic, is_palindromic, parse_word

hyperbolic_vectors = st.lists(st.integers(1, 4), min_size=2, max_size=5).map(tuple)


def _dart_set(elements):
    return sorted(a.dart_map for a in elements)


def test_group_non_palindromic_link():
    # eps = 2: rho2 = rho1 composed with the deck translation x -> x+2,
    # so the single-torus group is {id, rho1}
    cx = build_complex(parse_word("R2L3R2L"))
    auts = enumerate_automorphisms(cx)
    assert sorted(a.tag for a in auts) == ["identity", "rho1"]
    assert all(a.orientation == 1 for a in auts)


def test_group_non_palindromic_knot():
    cx = build_complex(parse_word("R2L3"))
    auts = enumerate_automorphisms(cx)
    assert sorted(a.tag for a in auts) == ["identity", "rho1", "rho2", "tau(2,0)"]


def test_group_palindromic_odd_knot_order_8():
    cx = build_complex(parse_word("R3L2RL2R3"))
    auts = enumerate_automorphisms(cx)
    assert len(auts) == 8
    assert {a.tag for a in auts} >= {"identity", "rho1", "rho2", "rho3"}
    assert all(a.orientation == 1 for a in auts)
    assert max(a.order for a in auts) == 4  # tau(1,0) has order 4: D4


def test_group_palindromic_even_knot_includes_glide():
    cx = build_complex(parse_word("R3L3"))
    auts = enumerate_automorphisms(cx)
    assert len(auts) == 8
    assert "g" in {a.tag for a in auts}
    assert sum(1 for a in auts if a.orientation == -1) == 4


def test_figure_eight_contains_order_six_class():
    pg = full_translation_quotient(parse_word("RL"))
    orders = {a.order for a in pg.automorphisms()}
    assert 6 in orders


def test_candidate_flags_spec_examples():
    assert is_candidate_automorphism(build_complex(parse_word("R2L3R2L")), "rho1")
    assert is_candidate_automorphism(build_complex(parse_word("R3L2RL2R3")), "rho3")
    assert is_candidate_automorphism(build_complex(parse_word("R3L3")), "g")
    assert not is_candidate_automorphism(build_complex(parse_word("R2L3R2L")), "g")


@settings(max_examples=30, deadline=None)
@given(hyperbolic_vectors)
def test_candidate_theorem(alpha):
    w = TwoBridgeWord(alpha)
    cx = build_complex(w)
    assert is_candidate_automorphism(cx, "rho1")
    assert is_candidate_automorphism(cx, "rho2")
    pal = is_palindromic(w)
    assert is_candidate_automorphism(cx, "rho3") == (pal and w.n % 2 == 1)
    assert is_candidate_automorphism(cx, "g") == (pal and w.n % 2 == 0)
    if canonicalish(w) not in {(1, 1), (1, 1, 1), (2, 2)}:
        assert not is_candidate_automorphism(cx, "r_y")
        assert not is_candidate_automorphism(cx, "rho4")


def canonicalish(w):
    from twobridge.words import canonical_form

    return canonical_form(w).syllables


def test_r_y_passes_only_for_small_arithmetic():
    assert is_candidate_automorphism(build_complex(parse_word("RL")), "r_y")
    assert is_candidate_automorphism(build_complex(parse_word("RLR")), "r_y")
    assert not is_candidate_automorphism(build_complex(parse_word("RL2R")), "r_y")


@settings(max_examples=25, deadline=None)
@given(hyperbolic_vectors)
def test_no_hidden_symmetries_on_quotient(alpha):
    w = TwoBridgeWord(alpha)
    if is_arithmetic(w):
        return
    cx = build_complex(w)
    auts = enumerate_automorphisms(cx, classify=False)
    induced = induced_symmetry_subgroup(cx, classify=False)
    assert _dart_set(auts) == _dart_set(induced)
    expected_order = (4 // cx.epsilon) * (2 if is_palindromic(w) else 1)
    assert len(auts) == expected_order
    has_reversing = any(a.orientation == -1 for a in auts)
    assert has_reversing == (is_palindromic(w) and w.n % 2 == 0)
    assert has_reversing == predicted_symmetry_group(w).has_orientation_reversing


@settings(max_examples=20, deadline=None)
@given(hyperbolic_vectors)
def test_automorphisms_preserve_clasps_and_meridians(alpha):
    w = TwoBridgeWord(alpha)
    if canonicalish(w) in {(1, 1), (2, 2), (1, 1, 1)}:
        return  # the lemma excludes exactly these
    cx = build_complex(w)
    clasp_darts = {
        d for d in range(cx.dart_count) if cx.triangles[d // 3].kind == CLASP
    }
    merid_edges = {e.index for e in cx.edges if e.kind == MERIDIONAL}
    for a in enumerate_automorphisms(cx, classify=False):
        for d in range(cx.dart_count):
            if d in clasp_darts:
                assert a.dart_map[d] in clasp_darts
            if cx.dart_edge[d] in merid_edges:
                assert cx.dart_edge[a.dart_map[d]] in merid_edges


def test_induced_group_tags():
    cx = build_complex(parse_word("R2L3R2L"))
    induced = induced_symmetry_subgroup(cx)
    tags = {a.tag: a.generator_tags for a in induced}
    assert set(tags) == {"identity", "rho1"}
    assert "sigma2" in tags["identity"]  # the cusp swap acts trivially here


def test_predicted_symmetry_groups():
    assert predicted_symmetry_group(parse_word("R2L3R2L")).isomorphism_type == "Z2+Z2"
    sym = predicted_symmetry_group(parse_word("R3L2RL2R3"))
    assert sym.isomorphism_type == "D4" and not sym.has_orientation_reversing
    sym = predicted_symmetry_group(parse_word("R2L4R2"))
    assert sym.isomorphism_type == "Z2+Z2+Z2"
    sym = predicted_symmetry_group(parse_word("R3L3"))
    assert sym.isomorphism_type == "D4" and sym.has_orientation_reversing
    assert sym.orientation_preserving_type == "Z2+Z2"


def test_rho3_and_g_never_cooccur():
    for alpha in [(1, 2, 1), (2, 2), (3, 1, 3), (1, 2, 2, 1)]:
        cx = build_complex(TwoBridgeWord(alpha))
        assert not (
            is_candidate_automorphism(cx, "rho3")
            and is_candidate_automorphism(cx, "g")
        )
