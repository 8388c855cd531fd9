"""Hidden-symmetry verdicts, commensurability decisions, and the census.

Non-arithmetic hyperbolic 2-bridge link complements have no hidden symmetries,
so they are commensurable iff they cover the same minimal orbifold, whose cusp
cellulation (equivalently, its ladder invariant) recovers the word up to
inversion and mirror: commensurable iff isometric. The four arithmetic links
are compared through their invariant trace fields instead, a 4-entry constant
table; a mixed pair is never commensurable because the commensurator is
discrete exactly in the non-arithmetic case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import (
    CANDIDATES,
    AutElement,
    affine_dart_map,
    enumerate_automorphisms,
    full_translation_quotient,
    induced_symmetry_subgroup,
    predicted_symmetry_group,
)
from .cusp import build_complex
from .orbifold import ladder_invariant
from .words import (
    TwoBridgeWord,
    canonical_form,
    component_count,
    continued_fraction,
    is_arithmetic,
    is_palindromic,
    normalize,
    require_hyperbolic,
)

# Invariant trace fields Q(sqrt(d)) of the arithmetic links; not computed.
TRACE_FIELDS = {
    (1, 1): -3,      # figure-eight knot
    (2, 2): -3,      # 6^2_2 link
    (1, 1, 1): -1,   # Whitehead link
    (1, 2, 1): -7,   # 6^3_2 link
}

# Detectable hidden symmetries of the arithmetic links: orientation-preserving
# rotation order, and whether an orientation-reversing one exists (order 2).
ARITHMETIC_DETECTABLE = {
    (1, 1): (6, True),
    (1, 1, 1): (4, True),
    (2, 2): (3, True),
    (1, 2, 1): (None, False),
}

MIN_CUSPED_VOLUME = "2.029"  # volume of the smallest orientable cusped manifold


@dataclass(frozen=True)
class HiddenSymmetryVerdict:
    arithmetic: bool
    has_hidden: bool
    detectable_op_order: int | None
    detectable_or: bool | None
    notes: str

    def to_json_dict(self) -> dict:
        return {
            "arithmetic": self.arithmetic,
            "has_hidden_symmetries": self.has_hidden,
            "detectable_orientation_preserving_order": self.detectable_op_order,
            "detectable_orientation_reversing": self.detectable_or,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class CommensurabilityVerdict:
    commensurable: bool
    reason: str

    def to_json_dict(self) -> dict:
        return {"commensurable": self.commensurable, "reason": self.reason}


def hidden_symmetry_verdict(word: TwoBridgeWord) -> HiddenSymmetryVerdict:
    """Hidden symmetries of S^3 minus K(word), by the classification."""
    word = require_hyperbolic(word)
    if not is_arithmetic(word):
        return HiddenSymmetryVerdict(
            False, False, None, None,
            "non-arithmetic 2-bridge link complement: no hidden symmetries "
            "(orientation-preserving or -reversing)",
        )
    key = canonical_form(word).syllables
    op_order, has_or = ARITHMETIC_DETECTABLE[key]
    if op_order is None:
        notes = ("arithmetic (commensurator dense), but no hidden symmetry "
                 "is detectable on the canonical cusp tiling")
    else:
        notes = (f"arithmetic: detectable hidden symmetries of order {op_order} "
                 "(orientation-preserving) and 2 (orientation-reversing)")
    return HiddenSymmetryVerdict(True, True, op_order, has_or, notes)


def detectable_hidden_elements(word: TwoBridgeWord) -> list[AutElement]:
    """Tiling automorphism classes that no symmetry of the complement induces.

    Computed on the quotient of the cusp tiling by its full translation
    subgroup, the only finite quotient the order 6/4/3 rotations of the
    arithmetic links descend to. Empty exactly for non-arithmetic words and
    the 6^3_2 link.
    """
    word = require_hyperbolic(word)
    pg = full_translation_quotient(word)
    base = pg.base

    names = ["rho1"]
    if is_palindromic(word):
        names.append("rho3" if word.n % 2 == 1 else "g")
    gens = []
    for name in names:
        mat, t = CANDIDATES[name]
        got = affine_dart_map(base, mat, t)
        if got is None:
            raise RuntimeError(f"{name} must be simplicial on {word}")
        gens.append(pg.project(got[0]))

    identity = tuple(range(pg.system.size))
    group = {identity}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for perm in frontier:
            for gen in gens:
                comp = tuple(gen[d] for d in perm)
                if comp not in group:
                    group.add(comp)
                    new_frontier.append(comp)
        frontier = new_frontier

    return [a for a in pg.automorphisms() if a.dart_map not in group]


def commensurable(word1: TwoBridgeWord, word2: TwoBridgeWord) -> CommensurabilityVerdict:
    """Decide commensurability of the two link complements."""
    word1 = require_hyperbolic(word1)
    word2 = require_hyperbolic(word2)
    c1, c2 = canonical_form(word1), canonical_form(word2)
    if c1.syllables == c2.syllables:
        return CommensurabilityVerdict(True, "isometric")
    a1, a2 = is_arithmetic(word1), is_arithmetic(word2)
    if a1 and a2:
        if TRACE_FIELDS[c1.syllables] == TRACE_FIELDS[c2.syllables]:
            return CommensurabilityVerdict(True, "arithmetic-same-trace-field")
        return CommensurabilityVerdict(False, "arithmetic-distinct-trace-field")
    if a1 != a2:
        return CommensurabilityVerdict(False, "mixed-arithmetic-nonarithmetic")
    return CommensurabilityVerdict(False, "non-arithmetic-distinct-canonical-form")


def cover_report(word: TwoBridgeWord) -> dict:
    """Irregular-covering verdict implied by the hidden-symmetry classification."""
    word = require_hyperbolic(word)
    verdict = hidden_symmetry_verdict(word)
    if not verdict.arithmetic:
        text = (f"S^3 \\ K({word}) admits no hidden symmetries, so it does not "
                "irregularly cover any hyperbolic 3-orbifold (orientable or "
                "non-orientable).")
    else:
        text = (f"S^3 \\ K({word}) is arithmetic; an irregular manifold cover "
                "would have degree >= 3 over a manifold of volume >= "
                f"{MIN_CUSPED_VOLUME}, exceeding its volume, so it does not "
                "irregularly cover any orientable hyperbolic 3-manifold.")
    return {
        "schema": "twobridge.cover-report/1",
        "word": str(word),
        "arithmetic": verdict.arithmetic,
        "verdict": text,
    }


# --- per-word analysis ----------------------------------------------------------


def analysis_report(text_or_word, with_complex: bool = True) -> dict:
    """Everything the CLI and the census report about one word."""
    from .words import parse_word

    if isinstance(text_or_word, TwoBridgeWord):
        given = text_or_word
        echo = str(text_or_word)
    else:
        given = parse_word(text_or_word)
        echo = text_or_word
    word, mirrored = normalize(given)
    word = require_hyperbolic(word)
    canon = canonical_form(word)
    digits, pq = continued_fraction(word)
    eps = component_count(word)
    sym = predicted_symmetry_group(word)
    verdict = hidden_symmetry_verdict(word)

    report = {
        "schema": "twobridge.analysis/1",
        "word": {
            "input": echo,
            "normalized": str(word),
            "mirrored": mirrored,
            "canonical": str(canon),
        },
        "syllables": list(word.syllables),
        "n": word.n,
        "crossings": word.c,
        "fraction": {"p": pq.numerator, "q": pq.denominator,
                     "continued_fraction": digits},
        "components": eps,
        "hyperbolic": True,
        "arithmetic": is_arithmetic(word),
        "palindromic": is_palindromic(word),
        "symmetry_group": {
            "isomorphism_type": sym.isomorphism_type,
            "orientation_preserving": sym.orientation_preserving_type,
            "has_orientation_reversing": sym.has_orientation_reversing,
            "order": sym.order,
        },
        "hidden_symmetries": verdict.to_json_dict(),
    }

    if not is_arithmetic(word):
        ladder = ladder_invariant(word)
        report["ladder"] = {
            "kind": ladder.kind,
            "letters": ladder.letters,
            "endpoints": list(ladder.endpoints),
            "canonical": ladder.canonical(),
        }
    else:
        report["ladder"] = None

    if with_complex:
        cx = build_complex(word)
        auts = enumerate_automorphisms(cx)
        induced = induced_symmetry_subgroup(cx)
        v, e, f = cx.counts()
        report["complex"] = {
            "vertices": v, "edges": e, "triangles": f,
            "euler_characteristic": cx.euler_characteristic(),
            "periods": list(cx.periods),
            "clasp_triangles": sum(1 for t in cx.triangles if t.kind == "clasp"),
            "meridional_edges": sum(1 for t in cx.edges if t.kind == "meridional"),
        }
        report["automorphisms"] = {
            "order": len(auts),
            "orientation_preserving": sum(1 for a in auts if a.orientation == 1),
            "elements": [
                {"tag": a.tag, "orientation": a.orientation, "order": a.order}
                for a in auts
            ],
            "matches_induced_symmetries": (
                sorted(a.dart_map for a in auts)
                == sorted(a.dart_map for a in induced)
            ),
            "note": (
                "sigma_2 exchanges the two cusps and acts trivially on each "
                "plane, so for two-component links the single-torus group "
                "realises half of Sym+(M)"
                if eps == 2 else
                "the single-torus group realises Sym+(M)"
            ),
        }
    return report


# --- the census -----------------------------------------------------------------


def enumerate_words(max_crossings: int):
    """All normalized hyperbolic words with c <= max_crossings, by c then alpha."""
    if max_crossings < 2:
        raise ValueError("max_crossings must be at least 2")
    for c in range(2, max_crossings + 1):
        for n in range(2, c + 1):
            for alpha in _compositions(c, n):
                yield TwoBridgeWord(alpha, "R")


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class CensusReport:
    max_crossings: int
    word_count: int
    records: tuple[dict, ...]            # one per canonical class
    classes: tuple[tuple[str, ...], ...]  # commensurability classes of words

    @property
    def nonsingleton_classes(self) -> tuple[tuple[str, ...], ...]:
        return tuple(cls for cls in self.classes if len(cls) > 1)

    def summary(self) -> dict:
        return {
            "schema": "twobridge.census-summary/1",
            "max_crossings": self.max_crossings,
            "words": self.word_count,
            "canonical_classes": len(self.records),
            "commensurability_classes": len(self.classes),
            "nonsingleton_classes": [list(c) for c in self.nonsingleton_classes],
        }


def census(max_crossings: int, with_complex: bool = True) -> CensusReport:
    """Classify all hyperbolic 2-bridge words with c <= max_crossings."""
    by_canonical: dict[tuple[int, ...], TwoBridgeWord] = {}
    word_count = 0
    for word in enumerate_words(max_crossings):
        word_count += 1
        key = canonical_form(word).syllables
        by_canonical.setdefault(key, canonical_form(word))

    reps = [by_canonical[key] for key in sorted(by_canonical, key=lambda k: (sum(k), k))]

    records = []
    for class_id, rep in enumerate(reps):
        record = analysis_report(rep, with_complex=with_complex)
        record["schema"] = "twobridge.census-record/1"
        record["class_id"] = class_id
        records.append(record)

    # commensurability classes by pairwise verdicts on canonical reps
    parent = list(range(len(reps)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if commensurable(reps[i], reps[j]).commensurable:
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[ra] = rb
    grouped: dict[int, list[str]] = {}
    for i, rep in enumerate(reps):
        grouped.setdefault(find(i), []).append(str(rep))
    classes = tuple(tuple(sorted(v)) for v in sorted(grouped.values()))
    return CensusReport(max_crossings, word_count, tuple(records), classes)
