"""The minimal-orbifold cusp cellulation and its ladder invariant.

For a non-arithmetic word the minimal orientable orbifold in the
commensurability class is the quotient of the complement by its
orientation-preserving symmetries, and its single cusp is the quotient of the
cusp torus by their induced action: the half-turn about (1,1), plus the
half-turn about (1/2,1) when the word is an odd-length palindrome. The result
is a sphere with four order-2 cone points; its cellulation determines the word
up to inversion and mirror, which is what the ladder invariant extracts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import AutElement, induced_symmetry_subgroup
from .cusp import (
    CLASP,
    MERIDIONAL,
    RISING,
    CuspComplex,
    InvariantError,
    build_complex,
)
from .words import TwoBridgeWord, is_arithmetic, is_palindromic, require_hyperbolic

VERTEX = "vertex"
EDGE_INTERIOR = "edge-interior"
TRIANGLE_INTERIOR = "triangle-interior"


class ArithmeticWordError(ValueError):
    """The symmetry quotient is not the minimal orbifold for arithmetic words."""


def _require_nonarithmetic(word: TwoBridgeWord) -> TwoBridgeWord:
    word = require_hyperbolic(word)
    if is_arithmetic(word):
        raise ArithmeticWordError(
            f"{word} is arithmetic: its commensurator is not discrete"
        )
    return word


@dataclass(frozen=True)
class ConePoint:
    location: str          # vertex | edge-interior | triangle-interior
    order: int
    edge_kind: str | None  # for edge-interior points
    vertex_labels: tuple[int, ...] | None
    quotient_valence: int | None


@dataclass(frozen=True)
class OrbifoldCusp:
    word: TwoBridgeWord
    base_type: str
    cone_points: tuple[ConePoint, ...]
    cusp_kind: str                 # "full" (not palindromic or n even) | "folded"
    vertex_count: int
    edge_count: int
    face_count: int
    underlying_euler: int
    orbifold_euler: int
    face_letters: tuple[str, ...]  # dual-path letters, clasp to clasp/fold

    def satisfies_corollary_dichotomy(self) -> bool:
        """Singularity locations split the two cusp types structurally."""
        ordinary_folds = [
            p for p in self.cone_points
            if p.location == EDGE_INTERIOR and p.edge_kind != MERIDIONAL
        ]
        valence2 = [
            p for p in self.cone_points
            if p.location == VERTEX and p.quotient_valence == 2
        ]
        if self.cusp_kind == "full":
            vertex_ok = all(
                p.quotient_valence != 2
                for p in self.cone_points
                if p.location == VERTEX
            )
            return not ordinary_folds and vertex_ok
        return len(ordinary_folds) + len(valence2) == 1


@dataclass(frozen=True)
class LadderInvariant:
    """The labelled segment of triangle letters along the top of the quotient."""

    kind: str       # "full" | "folded"
    letters: str
    endpoints: tuple[str, str]

    def canonical(self) -> str:
        swap = self.letters.translate(str.maketrans("RL", "LR"))
        if self.kind == "full":
            return min(self.letters, self.letters[::-1], swap, swap[::-1])
        return min(self.letters, swap)

    def equivalent(self, other: "LadderInvariant") -> bool:
        return self.kind == other.kind and self.canonical() == other.canonical()


def ladder_invariant(word: TwoBridgeWord) -> LadderInvariant:
    """Word-level ladder: the full letter string, folded in half for odd palindromes."""
    word = _require_nonarithmetic(word)
    letters = word.letters
    if is_palindromic(word) and word.n % 2 == 1:
        half = (word.c + 1) // 2
        return LadderInvariant("folded", letters[:half], ("clasp", "fold"))
    return LadderInvariant("full", letters, ("clasp", "clasp"))


# --- the symmetry quotient -----------------------------------------------------


def _orientation_preserving_symmetries(base: CuspComplex) -> list[AutElement]:
    return [a for a in induced_symmetry_subgroup(base) if a.orientation == 1]


def minimal_orbifold_cusp(word: TwoBridgeWord) -> OrbifoldCusp:
    """Quotient the cusp torus by the induced orientation-preserving symmetries."""
    word = _require_nonarithmetic(word)
    base = build_complex(word, x_period=2)
    group = _orientation_preserving_symmetries(base)
    order = len(group)

    edge_darts: dict[int, list[int]] = {}
    for d in range(base.dart_count):
        edge_darts.setdefault(base.dart_edge[d], []).append(d)

    n_v, n_e, n_f = len(base.vertices), len(base.edges), len(base.triangles)

    def vmap_of(elem: AutElement):
        vmap = [-1] * n_v
        for d in range(base.dart_count):
            vmap[base.dart_vertex[d]] = base.dart_vertex[elem.dart_map[d]]
        return vmap

    def emap_of(elem: AutElement):
        emap = [-1] * n_e
        for d in range(base.dart_count):
            emap[base.dart_edge[d]] = base.dart_edge[elem.dart_map[d]]
        return emap

    def fmap_of(elem: AutElement):
        fmap = [-1] * n_f
        for d in range(base.dart_count):
            fmap[d // 3] = elem.dart_map[d] // 3
        return fmap

    nontrivial = [a for a in group if any(a.dart_map[d] != d for d in range(base.dart_count))]

    # orbits
    def orbits(count, maps):
        parent = list(range(count))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for mp in maps:
            for src, tgt in enumerate(mp):
                ra, rb = find(src), find(tgt)
                if ra != rb:
                    parent[ra] = rb
        out: dict[int, list[int]] = {}
        for i in range(count):
            out.setdefault(find(i), []).append(i)
        return sorted(out.values())

    vmaps = [vmap_of(a) for a in nontrivial]
    emaps = [emap_of(a) for a in nontrivial]
    fmaps = [fmap_of(a) for a in nontrivial]
    v_orbits = orbits(n_v, vmaps)
    e_orbits = orbits(n_e, emaps)
    f_orbits = orbits(n_f, fmaps)

    for fmap, elem in zip(fmaps, nontrivial):
        for f in range(n_f):
            if fmap[f] == f:
                raise InvariantError(f"{elem.tag} fixes a triangle of {word}")

    # cone points: stabilised vertices and folded edges
    cones = []
    for orbit in v_orbits:
        stab = order // len(orbit)
        if stab == 1:
            continue
        if stab != 2:
            raise InvariantError("vertex stabiliser of order != 2")
        labels = tuple(sorted({base.vertices[v].label for v in orbit}))
        val = base.vertices[orbit[0]].valence
        if val % 2 != 0:
            raise InvariantError("odd-valence vertex fixed by a half-turn")
        cones.append(ConePoint(VERTEX, 2, None, labels, val // 2))

    folded_edge_orbits = set()
    for orbit in e_orbits:
        folded = False
        for e in orbit:
            d1, d2 = edge_darts[e]
            for elem in nontrivial:
                if elem.dart_map[d1] == d2:
                    folded = True
        if folded:
            folded_edge_orbits.add(tuple(orbit))
            kind = base.edges[orbit[0]].kind
            cones.append(ConePoint(EDGE_INTERIOR, 2, kind, None, None))

    cones.sort(key=lambda p: (p.location, p.edge_kind or "", p.vertex_labels or ()))
    if len(cones) != 4 or any(p.order != 2 for p in cones):
        raise InvariantError(f"{word}: quotient is not S^2(2,2,2,2): {cones}")

    v_quot = len(v_orbits) + len(folded_edge_orbits)
    e_quot = len(e_orbits)
    f_quot = len(f_orbits)
    euler = v_quot - e_quot + f_quot
    if euler != 2:
        raise InvariantError(f"{word}: underlying surface has chi = {euler}")
    orb_euler = euler - sum(1 - 1 for _ in ())  # 2 - 4*(1 - 1/2) = 0
    orb_euler = 2 - len(cones) // 2
    if orb_euler != 0:
        raise InvariantError("orbifold Euler characteristic nonzero")

    kind = "folded" if (is_palindromic(word) and word.n % 2 == 1) else "full"
    letters = _dual_path_letters(base, f_orbits, e_orbits, word, kind)

    return OrbifoldCusp(
        word=word,
        base_type="S2(2,2,2,2)",
        cone_points=tuple(cones),
        cusp_kind=kind,
        vertex_count=v_quot,
        edge_count=e_quot,
        face_count=f_quot,
        underlying_euler=euler,
        orbifold_euler=orb_euler,
        face_letters=letters,
    )


def _dual_path_letters(base, f_orbits, e_orbits, word, kind):
    """Letters along the dual path of face orbits, from a clasp outwards.

    Faces of the quotient, joined along images of rising edges, form a single
    cycle; cutting at the clasp orbit(s) yields the ladder letters.
    """
    f_orbit_of = {}
    for i, orbit in enumerate(f_orbits):
        for f in orbit:
            f_orbit_of[f] = i
    e_orbit_of = {}
    for i, orbit in enumerate(e_orbits):
        for e in orbit:
            e_orbit_of[e] = i

    adjacency: dict[int, set[tuple[int, int]]] = {i: set() for i in range(len(f_orbits))}
    for edge in base.edges:
        if edge.kind != RISING:
            continue
        t1, t2 = base._edge_triangles[edge.index]
        o1, o2 = f_orbit_of[t1], f_orbit_of[t2]
        eo = e_orbit_of[edge.index]
        adjacency[o1].add((eo, o2))
        adjacency[o2].add((eo, o1))

    def letter_of(orbit_index):
        letters = {word.letters[base.triangles[f].letter - 1] for f in f_orbits[orbit_index]}
        if len(letters) != 1:
            raise InvariantError("face orbit mixes letters")
        return letters.pop()

    clasp_orbits = sorted(
        {f_orbit_of[t.index] for t in base.triangles if t.kind == CLASP}
    )
    if kind == "full":
        if len(clasp_orbits) != 2:
            raise InvariantError("expected two clasp orbits")
        start, goal = clasp_orbits
        path = [start]
        prev_edge = None
        while path[-1] != goal:
            options = [
                (eo, nxt)
                for eo, nxt in sorted(adjacency[path[-1]])
                if eo != prev_edge
            ]
            if not options:
                raise InvariantError("dual path is stuck")
            prev_edge, nxt = options[0]
            path.append(nxt)
        return tuple(letter_of(i) for i in path)

    if len(clasp_orbits) != 1:
        raise InvariantError("expected one clasp orbit")
    steps = (word.c + 1) // 2 - 1
    path = [clasp_orbits[0]]
    prev_edge = None
    for _ in range(steps):
        options = [
            (eo, nxt)
            for eo, nxt in sorted(adjacency[path[-1]])
            if eo != prev_edge
        ]
        if not options:
            raise InvariantError("dual path is stuck")
        prev_edge, nxt = options[0]
        path.append(nxt)
    return tuple(letter_of(i) for i in path)


def structural_ladder(word: TwoBridgeWord) -> LadderInvariant:
    """Ladder read from the quotient complex itself (dual-route check)."""
    cusp = minimal_orbifold_cusp(word)
    endpoints = ("clasp", "clasp") if cusp.cusp_kind == "full" else ("clasp", "fold")
    return LadderInvariant(cusp.cusp_kind, "".join(cusp.face_letters), endpoints)
