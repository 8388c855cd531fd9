"""Hidden symmetries: none for non-arithmetic words, exotic for the four others.

A hidden symmetry is a commensurator element that is not a symmetry; it is
"detectable" when it preserves the canonical cusp tiling. Enumerating the
automorphisms of the tiling modulo all of its translations shows that
non-arithmetic words have none at all, while the figure-eight knot, the
Whitehead link and the 6^2_2 link carry rotation classes of order 6, 4, 3
(they live on tilings with extra structure: equilateral, square-with-
diagonals, and coned-triangular patterns).
"""

from twobridge import (
    cover_report,
    detectable_hidden_elements,
    full_translation_quotient,
    hidden_symmetry_verdict,
    parse_word,
)

for text in ("RL", "RLR", "R2L2", "RL2R", "R2L3R2L", "RL4"):
    w = parse_word(text)
    verdict = hidden_symmetry_verdict(w)
    print(f"{text:>8}: arithmetic={verdict.arithmetic}, "
          f"hidden={verdict.has_hidden}")
    print(f"          {verdict.notes}")

    elements = detectable_hidden_elements(w)
    if elements:
        orders = sorted({a.order for a in elements})
        reversing = sum(1 for a in elements if a.orientation == -1)
        print(f"          {len(elements)} detectable classes, orders {orders}, "
              f"{reversing} orientation-reversing")
    else:
        print("          no detectable hidden classes")

# The whole tiling point group, for scale: the figure-eight sits inside the
# full dihedral symmetry of the equilateral tiling.
pg = full_translation_quotient(parse_word("RL"))
print(f"figure-eight point group order: {len(pg.automorphisms())} "
      f"on a quotient with {pg.system.size} darts")

# And the covering consequence:
print(cover_report(parse_word("R2L3R2L"))["verdict"])
print(cover_report(parse_word("RL"))["verdict"])
