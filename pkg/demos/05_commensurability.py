"""Commensurability: orbifold cusps, ladder invariants, and the census.

Two non-arithmetic 2-bridge link complements are commensurable iff they cover
the same minimal orbifold; comparing the orbifold cusp cellulations through
their ladder invariants shows that only isometric complements qualify. Among
the arithmetic four, trace fields leave a single commensurable pair: the
figure-eight knot and the 6^2_2 link.
"""

from twobridge import (
    census,
    commensurable,
    ladder_invariant,
    minimal_orbifold_cusp,
    parse_word,
    structural_ladder,
)

# The minimal-orbifold cusp is a sphere with four order-2 cone points.
for text in ("R2L3R2L2R", "R3L2RL2R3", "R2L4R2"):
    w = parse_word(text)
    cusp = minimal_orbifold_cusp(w)
    print(f"{text:>10}: {cusp.base_type}, {cusp.cusp_kind} type, "
          f"V={cusp.vertex_count} E={cusp.edge_count} F={cusp.face_count}")
    for p in cusp.cone_points:
        spot = (f"vertex {list(p.vertex_labels)} (quotient valence "
                f"{p.quotient_valence})" if p.location == "vertex"
                else f"{p.edge_kind} edge midpoint")
        print(f"            cone point: {spot}")

    ladder = ladder_invariant(w)
    assert structural_ladder(w).equivalent(ladder)
    print(f"            ladder ({ladder.kind}): {ladder.letters}")

# Ladders are compared up to reversal and letter swap, which is exactly the
# isometry relation on words:
print("R2L3 vs R3L2 commensurable:",
      commensurable(parse_word("R2L3"), parse_word("R3L2")).to_json_dict())
print("RL vs R2L2 commensurable:",
      commensurable(parse_word("RL"), parse_word("R2L2")).to_json_dict())
print("RL vs RLR commensurable:",
      commensurable(parse_word("RL"), parse_word("RLR")).to_json_dict())

# The census over all words with c <= 8 finds exactly one non-singleton
# commensurability class. (Push max_crossings to 10+ for the full desk check.)
report = census(8, with_complex=False)
print(f"census c <= 8: {report.word_count} words, "
      f"{len(report.records)} canonical classes, "
      f"{len(report.classes)} commensurability classes")
print(f"non-singleton classes: {[list(c) for c in report.nonsingleton_classes]}")
