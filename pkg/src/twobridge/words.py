"""2-bridge words and their word-level invariants.

A 2-bridge link K(w) is encoded by a word w = R^a1 L^a2 R^a3 ... in the two
letters R and L, with positive exponents and strictly alternating letters.
Everything downstream (cusp triangulations, symmetry groups, commensurability)
is driven by the exponent vector (a1, ..., an), so this module is the single
source of truth for parsing, normal forms, continued fractions, component
counts and the slope bookkeeping of the 4-punctured-sphere sweep.

Conventions pinned here:

* words are normalized to start with R (mirror images are the same unoriented
  link complement);
* the continued fraction [a1+1, a2, ..., a_{n-1}, an+1] is evaluated top-down,
  a1' + 1/(a2 + 1/(... + 1/an')), which reproduces the classical fractions
  5/2, 8/3, 10/3, 12/5 of the four arithmetic links;
* the link is a knot iff the numerator p is odd.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class WordError(ValueError):
    """Malformed word text; ``position`` is the 1-based offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class NonHyperbolicError(ValueError):
    """Operation needs a hyperbolic word (at least two syllables)."""


# The only arithmetic hyperbolic 2-bridge links, as canonical exponent
# vectors: figure-eight RL, Whitehead RLR, 6^2_2 = R^2L^2, 6^3_2 = RL^2R.
ARITHMETIC_CANONICAL = {
    (1, 1): "figure-eight knot",
    (1, 1, 1): "Whitehead link",
    (2, 2): "6^2_2 link",
    (1, 2, 1): "6^3_2 link",
}


@dataclass(frozen=True)
class TwoBridgeWord:
    """A 2-bridge word: alternating syllables with a distinguished first letter."""

    syllables: tuple[int, ...]
    first_letter: str = "R"

    def __post_init__(self):
        if not self.syllables:
            raise ValueError("a word needs at least one syllable")
        if any(a < 1 for a in self.syllables):
            raise ValueError("syllable exponents must be positive")
        if self.first_letter not in ("R", "L"):
            raise ValueError("first letter must be R or L")

    @property
    def n(self) -> int:
        """Number of syllables."""
        return len(self.syllables)

    @property
    def c(self) -> int:
        """Number of letters (crossings in the braid portion)."""
        return sum(self.syllables)

    @property
    def letters(self) -> str:
        """Expanded letter string, e.g. 'RRLLLRRL' for R2L3R2L."""
        other = "L" if self.first_letter == "R" else "R"
        return "".join(
            (self.first_letter if i % 2 == 0 else other) * a
            for i, a in enumerate(self.syllables)
        )

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """c_0 = 0, c_j = a1 + ... + aj."""
        sums = [0]
        for a in self.syllables:
            sums.append(sums[-1] + a)
        return tuple(sums)

    def letter(self, t: int) -> str:
        """The t-th letter, 1-based."""
        if not 1 <= t <= self.c:
            raise IndexError(f"letter index {t} out of range 1..{self.c}")
        return self.letters[t - 1]

    def __str__(self) -> str:
        other = "L" if self.first_letter == "R" else "R"
        out = []
        for i, a in enumerate(self.syllables):
            letter = self.first_letter if i % 2 == 0 else other
            out.append(letter if a == 1 else f"{letter}{a}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"TwoBridgeWord({self})"


_TOKEN = re.compile(r"([RLrl])(\d*)")


def parse_word(text: str) -> TwoBridgeWord:
    """Parse word text in exponent or expanded form (grammar (LETTER EXP?)+).

    Adjacent equal letters merge into one syllable, so 'RRLLLRRL' and
    'R2L3R2L' parse identically.
    """
    if not text:
        raise WordError("empty word", 1)
    runs: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordError(f"illegal character {text[pos]!r}", pos + 1)
        letter = m.group(1).upper()
        if m.group(2):
            exponent = int(m.group(2))
            if exponent == 0:
                raise WordError("zero exponent", m.start(2) + 1)
        else:
            exponent = 1
        if runs and runs[-1][0] == letter:
            runs[-1] = (letter, runs[-1][1] + exponent)
        else:
            runs.append((letter, exponent))
        pos = m.end()
    return TwoBridgeWord(tuple(e for _, e in runs), runs[0][0])


def normalize(word: TwoBridgeWord) -> tuple[TwoBridgeWord, bool]:
    """Swap letters so the word starts with R; report whether it was mirrored."""
    if word.first_letter == "R":
        return word, False
    return TwoBridgeWord(word.syllables, "R"), True


def is_hyperbolic(word: TwoBridgeWord) -> bool:
    """K(w) is hyperbolic iff w has at least two syllables."""
    return word.n >= 2


def require_hyperbolic(word: TwoBridgeWord) -> TwoBridgeWord:
    word, _ = normalize(word)
    if not is_hyperbolic(word):
        raise NonHyperbolicError(
            f"{word} has a single syllable; K({word}) is not hyperbolic"
        )
    return word


def canonical_form(word: TwoBridgeWord) -> TwoBridgeWord:
    """Lexicographic minimum of the exponent vector and its reversal, R first.

    Two 2-bridge words present isometric complements iff their canonical
    forms coincide (inversion and mirror are the only equivalences).
    """
    word, _ = normalize(word)
    alpha = word.syllables
    return TwoBridgeWord(min(alpha, alpha[::-1]), "R")


def is_palindromic(word: TwoBridgeWord) -> bool:
    """True iff the exponent vector equals its reversal."""
    return word.syllables == word.syllables[::-1]


def is_arithmetic(word: TwoBridgeWord) -> bool:
    """True iff K(w) is one of the four arithmetic hyperbolic 2-bridge links."""
    word = require_hyperbolic(word)
    return canonical_form(word).syllables in ARITHMETIC_CANONICAL


def continued_fraction(word: TwoBridgeWord) -> tuple[list[int], Fraction]:
    """Digits [a1+1, a2, ..., an+1] and the fraction p/q they evaluate to."""
    word = require_hyperbolic(word)
    digits = list(word.syllables)
    digits[0] += 1
    digits[-1] += 1
    value = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        value = d + 1 / value
    return digits, value


def component_count(word: TwoBridgeWord) -> int:
    """Number of link components: 1 iff the fraction numerator p is odd."""
    _, pq = continued_fraction(word)
    return 1 if pq.numerator % 2 == 1 else 2


# --- slope bookkeeping -------------------------------------------------------
#
# Sweeping the 4-punctured sphere across one crossing multiplies edge slopes
# (viewed as column vectors (q, p) for slope p/q) by R or L below.

R_MATRIX = ((1, 1), (0, 1))
L_MATRIX = ((1, 0), (1, 1))


@dataclass(frozen=True)
class Slope:
    """Slope p/q on the 4-punctured sphere; 1/0 is the vertical slope."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def _apply(matrix, slope: Slope) -> Slope:
    (a, b), (c, d) = matrix
    q, p = slope.q, slope.p
    q2, p2 = a * q + b * p, c * q + d * p
    g = gcd(q2, p2)
    return Slope(p2 // g, q2 // g)


@dataclass(frozen=True)
class SlopeSequence:
    """Edge-slope triples of the spheres S_1..S_{c+1} and the tetrahedron count."""

    triples: tuple[tuple[Slope, Slope, Slope], ...]
    tetrahedron_count: int


def _matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def slope_sequence(word: TwoBridgeWord) -> SlopeSequence:
    """Slope triples of the spheres S_1..S_{c+1}, starting from {0/1, 1/1, 1/0}.

    Each sphere's triple is the cumulative letter matrix applied to the
    standard triple (new letters multiply on the right), so consecutive
    triples share exactly two slopes: the walk steps through adjacent Farey
    triangles. The layered triangulation inserts two tetrahedra between
    consecutive spheres, 2(c-1) in all.
    """
    word, _ = normalize(word)
    start = (Slope(0, 1), Slope(1, 1), Slope(1, 0))
    cumulative = ((1, 0), (0, 1))
    triples = [start]
    for letter in word.letters:
        cumulative = _matmul(cumulative, R_MATRIX if letter == "R" else L_MATRIX)
        triples.append(tuple(_apply(cumulative, s) for s in start))
    return SlopeSequence(tuple(triples), 2 * (word.c - 1))
