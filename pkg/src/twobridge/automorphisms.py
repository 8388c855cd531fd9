"""Automorphisms of the quotient cusp complex and the symmetry classification.

An automorphism here is a simplicial automorphism of the labelled quotient
torus that preserves edge valence (vertex valence is intrinsic). Elements are
stored as permutations of darts. Orientation-preserving maps commute with the
face rotation sigma_f and the edge involution sigma_e; orientation-reversing
maps conjugate sigma_f to its inverse (the usual mirror-map convention), and
signs multiply under composition.

Two finite quotients matter:

* the deck quotient (the CuspComplex itself) carries the symmetries of the
  link complement; its automorphism group is compared against the images of
  the symmetries sigma_1, sigma_2, sigma_3;
* the quotient by the *full* translation subgroup of the valence-labelled
  tiling additionally carries the detectable hidden symmetries of the
  arithmetic links (rotations of order 6, 4, 3 about a vertex do not
  normalise the deck lattice, so they can only be seen on this smaller
  quotient).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cusp import CuspComplex, InvariantError, build_complex
from .words import TwoBridgeWord, is_palindromic, require_hyperbolic

Matrix = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
Vec = tuple[Fraction, Fraction]

_I: Matrix = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
_NEG_I: Matrix = ((Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1)))


def _fr(x) -> Fraction:
    return Fraction(x)


def _vec(x, y) -> Vec:
    return (_fr(x), _fr(y))


#: Euclidean candidates from the classification of simplicial automorphisms:
#: three half-turns, the glide reflection g, and the two maps that never
#: preserve edge valence outside the three smallest arithmetic words.
CANDIDATES: dict[str, tuple[Matrix, Vec]] = {
    "identity": (_I, _vec(0, 0)),
    "rho1": (_NEG_I, _vec(2, 2)),   # half-turn about (1, 1)
    "rho2": (_NEG_I, _vec(4, 2)),   # half-turn about (2, 1)
    "rho3": (_NEG_I, _vec(1, 2)),   # half-turn about (1/2, 1)
    "rho4": (_NEG_I, _vec(1, 1)),   # half-turn about (1/2, 1/2)
    "r_y": (((_fr(1), _fr(0)), (_fr(0), _fr(-1))), _vec(0, 2)),   # mirror y=1
    "g": (((_fr(-1), _fr(0)), (_fr(0), _fr(1))), _vec(1, 1)),     # glide x=1/2
}


@dataclass(frozen=True)
class AutElement:
    """One automorphism: a dart permutation with orientation and affine data."""

    dart_map: tuple[int, ...]
    orientation: int                      # +1 or -1
    affine: tuple[Matrix, Vec] | None     # lift to the plane, if affine
    tag: str                              # identity/rho1/.../translation/composite
    order: int
    generator_tags: tuple[str, ...] = ()

    def __str__(self) -> str:
        sign = "+" if self.orientation == 1 else "-"
        return f"<{self.tag} ({sign}, order {self.order})>"


@dataclass(frozen=True)
class SymmetryGroup:
    isomorphism_type: str                 # "Z2+Z2" | "D4" | "Z2+Z2+Z2"
    orientation_preserving_type: str
    has_orientation_reversing: bool
    order: int


def predicted_symmetry_group(word: TwoBridgeWord) -> SymmetryGroup:
    """Symmetry group of S^3 minus K(word) from the word alone."""
    word = require_hyperbolic(word)
    if not is_palindromic(word):
        return SymmetryGroup("Z2+Z2", "Z2+Z2", False, 4)
    if word.n % 2 == 0:
        return SymmetryGroup("D4", "Z2+Z2", True, 8)
    mid = word.syllables[(word.n - 1) // 2]
    if mid % 2 == 1:
        return SymmetryGroup("D4", "D4", False, 8)
    return SymmetryGroup("Z2+Z2+Z2", "Z2+Z2+Z2", False, 8)


# --- dart systems -------------------------------------------------------------


@dataclass
class DartSystem:
    """The data automorphism search needs: sigmas plus valence labels."""

    sigma_f: list[int]
    sigma_e: list[int]
    dart_vertex: list[int]
    vertex_valence: list[int]
    dart_edge: list[int]
    edge_valence: list[int]

    @property
    def size(self) -> int:
        return len(self.sigma_f)

    def signature(self, d: int) -> tuple[int, int, int]:
        head = self.dart_vertex[self.sigma_e[d]]
        return (
            self.vertex_valence[self.dart_vertex[d]],
            self.vertex_valence[head],
            self.edge_valence[self.dart_edge[d]],
        )


def dart_system(cx: CuspComplex) -> DartSystem:
    return DartSystem(
        cx.sigma_f,
        cx.sigma_e,
        cx.dart_vertex,
        [v.valence for v in cx.vertices],
        cx.dart_edge,
        [e.valence for e in cx.edges],
    )


def _propagate(sysm: DartSystem, base: int, seed_image: int, reverse: bool):
    """Grow the automorphism sending ``base`` to ``seed_image``; None on conflict."""
    n = sysm.size
    sf, se = sysm.sigma_f, sysm.sigma_e
    if reverse:
        sf_inv = [0] * n
        for d in range(n):
            sf_inv[sf[d]] = d
    image = [-1] * n
    image[base] = seed_image
    stack = [base]
    ev, de = sysm.edge_valence, sysm.dart_edge
    while stack:
        d = stack.pop()
        e = image[d]
        if ev[de[d]] != ev[de[e]]:
            return None
        nxt = ((sf[d], sf_inv[e] if reverse else sf[e]), (se[d], se[e]))
        for nd, ne in nxt:
            if image[nd] == -1:
                image[nd] = ne
                stack.append(nd)
            elif image[nd] != ne:
                return None
    if -1 in image or len(set(image)) != n:
        return None
    return tuple(image)


def _vertex_map(sysm: DartSystem, dart_map, orientation):
    """Induced map on vertices (well-defined for both orientations)."""
    nv = len(sysm.vertex_valence)
    vmap = [-1] * nv
    for d in range(sysm.size):
        if orientation == 1:
            src = sysm.dart_vertex[d]
        else:
            src = sysm.dart_vertex[sysm.sigma_e[d]]
        tgt = sysm.dart_vertex[dart_map[d]]
        if vmap[src] == -1:
            vmap[src] = tgt
        elif vmap[src] != tgt:
            raise InvariantError("inconsistent vertex image")
    return vmap


def _perm_order(perm) -> int:
    n = len(perm)
    seen = [False] * n
    order = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        d = start
        while not seen[d]:
            seen[d] = True
            length += 1
            d = perm[d]
        order = lcm(order, length)
    return order


def enumerate_dart_maps(sysm: DartSystem):
    """All edge-valence-preserving automorphisms as (dart_map, orientation)."""
    # propagate from a dart in the rarest signature class: few seeds to try
    census: dict[tuple[int, int, int], int] = {}
    for d in range(sysm.size):
        sig = sysm.signature(d)
        census[sig] = census.get(sig, 0) + 1
    base = min(range(sysm.size), key=lambda d: (census[sysm.signature(d)], d))
    sig0 = sysm.signature(base)
    sig0_rev = (sig0[1], sig0[0], sig0[2])
    found = []
    seen = set()
    for reverse in (False, True):
        want = sig0_rev if reverse else sig0
        for e0 in range(sysm.size):
            if sysm.signature(e0) != want:
                continue
            image = _propagate(sysm, base, e0, reverse)
            if image is not None and image not in seen:
                seen.add(image)
                found.append((image, -1 if reverse else 1))
    found.sort(key=lambda pair: pair[0])
    return found


# --- affine tests on the cusp complex -----------------------------------------


def _apply_affine(mat: Matrix, t: Vec, p) -> Vec:
    return (
        mat[0][0] * p[0] + mat[0][1] * p[1] + t[0],
        mat[1][0] * p[0] + mat[1][1] * p[1] + t[1],
    )


def affine_dart_map(cx: CuspComplex, mat: Matrix, t: Vec):
    """Dart permutation induced by x -> mat.x + t on the quotient, or None.

    The map is given in unscaled coordinates and conjugated to the complex's
    integer frame; it must send lattice points to lattice points and
    triangles to triangles, and preserve edge valence, so a successful return
    is a genuine element of the edge-valence automorphism group.
    """
    s = cx.scale
    px = cx.x_modulus
    det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if det not in (1, -1):
        raise ValueError("candidate map must be unimodular")
    orientation = 1 if det == 1 else -1
    # conjugate by (x, y) -> (s x, y)
    smat = ((mat[0][0], mat[0][1] * s), (Fraction(mat[1][0], 1) / s, mat[1][1]))
    st = (t[0] * s, t[1])
    if all(
        value == int(value)
        for value in (smat[0][0], smat[0][1], smat[1][0], smat[1][1], st[0], st[1])
    ):
        smat = ((int(smat[0][0]), int(smat[0][1])), (int(smat[1][0]), int(smat[1][1])))
        st = (int(st[0]), int(st[1]))
    dart_map = [-1] * cx.dart_count
    for tri in cx.triangles:
        images = []
        for p in tri.corners:
            q = _apply_affine(smat, st, p)
            if q[0] != int(q[0]) or q[1] != int(q[1]):
                return None
            images.append((int(q[0]), int(q[1])))
        lookup = cx.triangle_at(images)
        if lookup is None:
            return None
        t_idx, _key = lookup
        target = cx.triangles[t_idx]
        # align by the unique lattice vector between the two representatives
        lam = (
            min(target.corners)[0] - min(images)[0],
            min(target.corners)[1] - min(images)[1],
        )
        if lam[0] % px != 0 or lam[1] % 2 != 0:
            return None
        corner_of = {}
        for i, q in enumerate(images):
            q_shift = (q[0] + lam[0], q[1] + lam[1])
            matches = [j for j, p in enumerate(target.corners) if p == q_shift]
            if len(matches) != 1:
                return None
            corner_of[i] = matches[0]
        for side in range(3):
            d = 3 * tri.index + side
            if orientation == 1:
                # side i (corner i -> i+1) maps to the side at image corner i
                dart_map[d] = 3 * t_idx + corner_of[side]
            else:
                # reversed: the image side runs corner(i+1) -> corner(i); the
                # dart convention stores it with origin at the image of i+1
                dart_map[d] = 3 * t_idx + corner_of[(side + 1) % 3]
    if len(set(dart_map)) != cx.dart_count:
        return None
    sysm = dart_system(cx)
    for d in range(cx.dart_count):
        if sysm.edge_valence[sysm.dart_edge[d]] != sysm.edge_valence[sysm.dart_edge[dart_map[d]]]:
            return None
    # must commute with the structure maps
    sf, se = cx.sigma_f, cx.sigma_e
    for d in range(cx.dart_count):
        if se[dart_map[d]] != dart_map[se[d]]:
            return None
        if orientation == 1:
            if sf[dart_map[d]] != dart_map[sf[d]]:
                return None
        else:
            if dart_map[sf[d]] != _sf_inv(sf)[dart_map[d]]:
                return None
    return tuple(dart_map), orientation


def _sf_inv(sf):
    inv = [0] * len(sf)
    for d, e in enumerate(sf):
        inv[sf[d]] = d
    return inv


def is_candidate_automorphism(cx: CuspComplex, name: str) -> bool:
    """Does the named Euclidean map act on this quotient preserving edge valence?"""
    mat, t = CANDIDATES[name]
    return affine_dart_map(cx, mat, t) is not None


# --- classification of enumerated elements -------------------------------------


def _fit_affine(cx: CuspComplex, dart_map, orientation):
    """Recover the affine lift (in unscaled coordinates) of a dart permutation."""
    s = cx.scale

    def unscale(p):
        return (Fraction(p[0], s), Fraction(p[1]))

    tri = cx.triangles[0]
    d0 = dart_map[0]
    target = cx.triangles[d0 // 3]
    j0 = d0 % 3
    if orientation == 1:
        pairs = [
            (unscale(tri.corners[i]), unscale(target.corners[(j0 + i) % 3]))
            for i in range(3)
        ]
    else:
        # dart (0, i) has image with origin at the image of corner i+1
        pairs = [
            (unscale(tri.corners[(1 + i) % 3]), unscale(target.corners[(j0 - i) % 3]))
            for i in range(3)
        ]
    (p0, q0), (p1, q1), (p2, q2) = pairs
    u, v = (p1[0] - p0[0], p1[1] - p0[1]), (p2[0] - p0[0], p2[1] - p0[1])
    su, sv = (q1[0] - q0[0], q1[1] - q0[1]), (q2[0] - q0[0], q2[1] - q0[1])
    det = u[0] * v[1] - u[1] * v[0]
    mat = (
        (
            (su[0] * v[1] - sv[0] * u[1]) / det,
            (sv[0] * u[0] - su[0] * v[0]) / det,
        ),
        (
            (su[1] * v[1] - sv[1] * u[1]) / det,
            (sv[1] * u[0] - su[1] * v[0]) / det,
        ),
    )
    t = (q0[0] - (mat[0][0] * p0[0] + mat[0][1] * p0[1]),
         q0[1] - (mat[1][0] * p0[0] + mat[1][1] * p0[1]))
    got = affine_dart_map(cx, mat, t)
    if got is None or got[0] != tuple(dart_map):
        return None
    return mat, t


def _tag_affine(cx: CuspComplex, mat: Matrix, t: Vec) -> str:
    px = cx.periods[0]
    for name, (m2, t2) in CANDIDATES.items():
        if mat == m2 and (t[0] - t2[0]) % px == 0 and (t[1] - t2[1]) % 2 == 0:
            return name
    if mat == _I:
        return f"tau({t[0] % px},{t[1] % 2})"
    if mat == _NEG_I:
        return f"rot2@({t[0] / 2 % px},{t[1] / 2 % 2})"
    return "composite"


def enumerate_automorphisms(cx: CuspComplex, classify: bool = True) -> list[AutElement]:
    """The full edge-valence automorphism group of the quotient complex."""
    sysm = dart_system(cx)
    out = []
    for dart_map, orientation in enumerate_dart_maps(sysm):
        fit = _fit_affine(cx, dart_map, orientation) if classify else None
        tag = _tag_affine(cx, *fit) if fit else "composite"
        out.append(
            AutElement(dart_map, orientation, fit, tag, _perm_order(dart_map))
        )
    return out


# --- the symmetry-induced subgroup ---------------------------------------------


def _close_under_composition(generators: dict[tuple, tuple[int, tuple[str, ...]]]):
    """Group closure of dart permutations; values carry (orientation, tags)."""
    elements = dict(generators)
    frontier = list(generators.items())
    while frontier:
        new_frontier = []
        for perm_a, (sign_a, tags_a) in list(elements.items()):
            for perm_b, (sign_b, tags_b) in frontier:
                comp = tuple(perm_a[d] for d in perm_b)
                if comp not in elements:
                    entry = (sign_a * sign_b, tuple(sorted(set(tags_a + tags_b))))
                    elements[comp] = entry
                    new_frontier.append((comp, entry))
        frontier = new_frontier
    return elements


def induced_symmetry_subgroup(cx: CuspComplex, classify: bool = True) -> list[AutElement]:
    """Images of the link symmetries sigma_1, sigma_2, sigma_3 on this torus.

    sigma_1 acts as rho1 always; sigma_2 as rho2 for a knot and as the
    identity on each cusp plane for a two-component link; a palindromic word
    contributes sigma_3 as rho3 (n odd) or the glide g (n even).
    """
    word = cx.word
    gens: dict[tuple, tuple[int, tuple[str, ...]]] = {}
    identity = tuple(range(cx.dart_count))
    gens[identity] = (1, ())

    def add(name: str, sigma: str):
        mat, t = CANDIDATES[name]
        got = affine_dart_map(cx, mat, t)
        if got is None:
            raise InvariantError(f"{sigma} (as {name}) is not simplicial on {word}")
        perm, orientation = got
        if perm in gens:
            gens[perm] = (orientation, tuple(sorted(set(gens[perm][1] + (sigma,)))))
        else:
            gens[perm] = (orientation, (sigma,))

    add("rho1", "sigma1")
    if cx.epsilon == 1:
        add("rho2", "sigma2")
    else:
        gens[identity] = (1, ("sigma2",))
    if is_palindromic(word):
        add("rho3" if word.n % 2 == 1 else "g", "sigma3")

    elements = _close_under_composition(gens)
    out = []
    for perm, (orientation, tags) in sorted(elements.items()):
        fit = _fit_affine(cx, perm, orientation) if classify else None
        tag = _tag_affine(cx, *fit) if fit else "composite"
        out.append(AutElement(perm, orientation, fit, tag, _perm_order(perm), tags))
    return out


# --- quotient by the full translation subgroup ----------------------------------


@dataclass
class PointGroupComplex:
    """Quotient of the cusp tiling by all of its valence-preserving translations.

    The translation subgroup is normal in the full automorphism group of the
    tiling, so the automorphisms of this finite quotient are exactly the
    automorphism classes of the labelled plane tiling; this is where the
    order 6 / 4 / 3 detectable hidden symmetries of the arithmetic links live.
    """

    word: TwoBridgeWord
    system: DartSystem
    translation_order: int
    base: CuspComplex
    dart_orbit: list[int]          # base dart -> quotient dart index

    def automorphisms(self) -> list[AutElement]:
        out = []
        for dart_map, orientation in enumerate_dart_maps(self.system):
            out.append(
                AutElement(dart_map, orientation, None, "composite",
                           _perm_order(dart_map))
            )
        return out

    def project(self, base_perm) -> tuple[int, ...]:
        """Image in the quotient of an automorphism of the base complex."""
        n = self.system.size
        out = [-1] * n
        for d, e in enumerate(base_perm):
            od, oe = self.dart_orbit[d], self.dart_orbit[e]
            if out[od] == -1:
                out[od] = oe
            elif out[od] != oe:
                raise InvariantError("automorphism does not descend to quotient")
        return tuple(out)


def full_translation_quotient(word: TwoBridgeWord) -> PointGroupComplex:
    """Build the point-group quotient (see class docstring)."""
    word = require_hyperbolic(word)
    base = build_complex(word, x_period=2)
    sysm = dart_system(base)

    # candidate translation vectors: differences of vertex representatives
    v0 = base.vertices[0].coords
    perms = []
    for v in base.vertices:
        dx, dy = v.coords[0] - v0[0], v.coords[1] - v0[1]
        if (dx, dy) == (0, 0):
            continue
        got = affine_dart_map(base, _I, (Fraction(dx, base.scale), Fraction(dy)))
        if got is not None:
            perms.append(got[0])

    # orbit darts under the translation group
    parent = list(range(base.dart_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in perms:
        for d, e in enumerate(perm):
            ra, rb = find(d), find(e)
            if ra != rb:
                parent[ra] = rb

    reps = sorted({find(d) for d in range(base.dart_count)})
    rep_index = {r: i for i, r in enumerate(reps)}
    dart_orbit = [rep_index[find(d)] for d in range(base.dart_count)]
    orbit_size = base.dart_count // len(reps)

    # vertex and edge orbits under the same translations
    def union_ids(count, images):
        parent2 = list(range(count))

        def find2(a):
            while parent2[a] != a:
                parent2[a] = parent2[parent2[a]]
                a = parent2[a]
            return a

        for src, tgt in images:
            ra, rb = find2(src), find2(tgt)
            if ra != rb:
                parent2[ra] = rb
        reps2 = sorted({find2(i) for i in range(count)})
        index2 = {r: i for i, r in enumerate(reps2)}
        return [index2[find2(i)] for i in range(count)]

    vert_ids = union_ids(
        len(base.vertices),
        [
            (base.dart_vertex[d], base.dart_vertex[perm[d]])
            for perm in perms
            for d in range(base.dart_count)
        ],
    )
    edge_ids = union_ids(
        len(base.edges),
        [
            (base.dart_edge[d], base.dart_edge[perm[d]])
            for perm in perms
            for d in range(base.dart_count)
        ],
    )

    q_sigma_f = [-1] * len(reps)
    q_sigma_e = [-1] * len(reps)
    q_dart_vertex = [-1] * len(reps)
    q_dart_edge = [-1] * len(reps)
    q_vval: dict[int, int] = {}
    q_eval: dict[int, int] = {}
    for d in range(base.dart_count):
        od = dart_orbit[d]
        for arr, val in (
            (q_sigma_f, dart_orbit[base.sigma_f[d]]),
            (q_sigma_e, dart_orbit[base.sigma_e[d]]),
            (q_dart_vertex, vert_ids[base.dart_vertex[d]]),
            (q_dart_edge, edge_ids[base.dart_edge[d]]),
        ):
            if arr[od] == -1:
                arr[od] = val
            elif arr[od] != val:
                raise InvariantError("translation quotient is inconsistent")
        vv = base.vertices[base.dart_vertex[d]].valence
        ee = base.edges[base.dart_edge[d]].valence
        if q_vval.setdefault(q_dart_vertex[od], vv) != vv:
            raise InvariantError("vertex valence not constant on orbit")
        if q_eval.setdefault(q_dart_edge[od], ee) != ee:
            raise InvariantError("edge valence not constant on orbit")

    nv = max(q_dart_vertex) + 1
    ne = max(q_dart_edge) + 1
    system = DartSystem(
        q_sigma_f,
        q_sigma_e,
        q_dart_vertex,
        [q_vval[i] for i in range(nv)],
        q_dart_edge,
        [q_eval[i] for i in range(ne)],
    )
    return PointGroupComplex(word, system, orbit_size, base, dart_orbit)
