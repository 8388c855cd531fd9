"""Symmetry groups and the automorphisms of the cusp tiling.

The symmetry group of a 2-bridge link complement depends only on whether the
word is palindromic, and on parities: Z2+Z2 generically, D4 or Z2+Z2+Z2 for
palindromes. Its elements act on the cusp tiling as specific Euclidean maps
(half-turns rho1, rho2, rho3 and the glide reflection g), and for
non-arithmetic words those account for every valence-preserving automorphism.
"""

from twobridge import (
    build_complex,
    enumerate_automorphisms,
    induced_symmetry_subgroup,
    is_candidate_automorphism,
    parse_word,
    predicted_symmetry_group,
)

for text in ("R2L3R2L", "R2L3", "R3L2RL2R3", "R2L4R2", "R3L3"):
    w = parse_word(text)
    sym = predicted_symmetry_group(w)
    print(f"{text:>10}: Sym = {sym.isomorphism_type} (order {sym.order}), "
          f"Sym+ = {sym.orientation_preserving_type}, "
          f"orientation-reversing: {sym.has_orientation_reversing}")

    cx = build_complex(w)
    flags = {name: is_candidate_automorphism(cx, name)
             for name in ("rho1", "rho2", "rho3", "g", "r_y", "rho4")}
    print(f"            candidates that act: "
          f"{[name for name, ok in flags.items() if ok]}")

    auts = enumerate_automorphisms(cx)
    induced = induced_symmetry_subgroup(cx)
    same = sorted(a.dart_map for a in auts) == sorted(a.dart_map for a in induced)
    print(f"            tiling automorphisms: order {len(auts)}, "
          f"tags {sorted(a.tag for a in auts)}")
    print(f"            equal to the symmetry-induced subgroup: {same}")

# rho3 (palindromic, n odd) and g (palindromic, n even) can never both act:
# the letters alternate from R, so the last letter pins the parity of n.
w = parse_word("R3L2RL2R3")
cx = build_complex(w)
assert is_candidate_automorphism(cx, "rho3") and not is_candidate_automorphism(cx, "g")
print("rho3 and g are mutually exclusive, as the letter alternation forces")
