"""Word calculus: parsing, normal forms, fractions, and component counts.

A 2-bridge link is encoded by a word in R and L, e.g. R2L3R2L (same thing as
RRLLLRRL). This script walks through the word-level invariants everything
else is built on.
"""

from twobridge import (
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

# Parsing accepts exponent form or the expanded letter string.
word = parse_word("R2L3R2L")
assert parse_word("RRLLLRRL") == word
print(f"word {word}: syllables {word.syllables}, n={word.n}, c={word.c}")

# Mirror images (swap R and L) give the same unoriented complement;
# words are normalised to start with R.
mirrored, was_mirrored = normalize(parse_word("LRL"))
print(f"LRL normalises to {mirrored} (mirrored={was_mirrored})")

# Inversion (reading the exponents backwards) also preserves the complement,
# so the canonical form takes the lexicographic minimum of both readings.
print(f"canonical form of {word} is {canonical_form(word)}")

# Hyperbolic iff at least two syllables: R5 is a torus link.
print(f"R5 hyperbolic? {is_hyperbolic(parse_word('R5'))}")
print(f"{word} hyperbolic? {is_hyperbolic(word)}")

# The continued fraction [a1+1, a2, ..., an+1] identifies the link as b(p,q);
# the famous four arithmetic links come out as 5/2, 8/3, 10/3, 12/5.
for text in ("RL", "RLR", "R2L2", "RL2R", "R2L3R2L"):
    w = parse_word(text)
    digits, pq = continued_fraction(w)
    print(f"{text:>8}: digits {digits}, fraction {pq}, "
          f"components {component_count(w)}, arithmetic {is_arithmetic(w)}, "
          f"palindromic {is_palindromic(w)}")

# Sweeping the 4-punctured sphere across the crossings multiplies edge slopes
# by the matrices R = [[1,1],[0,1]] and L = [[1,0],[1,1]]: a walk through
# adjacent Farey triangles, two tetrahedra per step.
seq = slope_sequence(parse_word("RL"))
print("slope triples along RL:")
for i, triple in enumerate(seq.triples, start=1):
    print(f"  S_{i}: {', '.join(str(s) for s in triple)}")
print(f"tetrahedra in the 3-dimensional triangulation: {seq.tetrahedron_count}")
