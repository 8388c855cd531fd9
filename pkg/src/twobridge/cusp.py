"""Canonical cusp triangulation of a 2-bridge link complement, as a torus complex.

One cusp cross-section inherits a triangulation from the layered triangulation
of the complement. Its lift to the plane is generated from a triangulated
rectangle D' = [0,1] x [0,1]: D' is a zigzag strip of c triangles read off the
word (R-letters add top-line vertices, L-letters bottom-line vertices), D' is
reflected across y = 1, the double is rotated by pi about (0,1) and translated
by (2Z) x (2Z) to tile the plane. Finally the images of two special edges are
removed; each removal fuses a pair of triangles into a "clasp" triangle whose
long edge (a *meridional* edge) runs once around the meridian, and the labels
-1 and c_n become interior points of those long edges.

The deck group is (x,y) -> (x + 4/eps, y) and (x,y) -> (x, y+2), where eps is
the number of link components; this module builds the finite quotient.

Coordinates are presentation data only (every contract downstream is
combinatorial) and are kept exact: x is scaled by ``scale = lcm(#R, #L)`` so
that all vertices live on the integer lattice, which keeps the heavy
canonicalisation in machine integers. ``point_fraction`` converts back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .words import (
    TwoBridgeWord,
    canonical_form,
    component_count,
    require_hyperbolic,
)

Point = tuple[int, int]  # x scaled by the complex's ``scale``; y unscaled

MERIDIONAL = "meridional"
HORIZONTAL = "horizontal"
RISING = "rising"

CLASP = "clasp"
ORDINARY = "ordinary"


class InvariantError(RuntimeError):
    """A structural invariant of the construction failed (a bug, not bad input)."""


class ExcludedWordError(ValueError):
    """The closed valence formulas exclude R^2L^2, RL^m and RL^mR (up to symmetry)."""


@dataclass(frozen=True)
class Vertex:
    index: int
    label: int
    coords: Point
    valence: int


@dataclass(frozen=True)
class Edge:
    index: int
    vertex_indices: tuple[int, int]
    kind: str
    valence: int
    corresponding_labels: tuple[int, ...]
    segment: tuple[Point, Point]


@dataclass(frozen=True)
class Triangle:
    index: int
    corners: tuple[Point, Point, Point]
    labels: tuple[int, int, int]
    vertex_indices: tuple[int, int, int]
    edge_indices: tuple[int, int, int]
    kind: str
    letter: int


@dataclass(frozen=True)
class ValenceTable:
    """Vertex valences by label; ``r`` is the odd-valence label at the right clasp."""

    valences: dict[int, int]
    r: int

    def __getitem__(self, label: int) -> int:
        return self.valences[label]


# --- the triangulated rectangle D' -------------------------------------------


def _zigzag_rectangle(word: TwoBridgeWord, scale: int):
    """Triangles of D' as ((point, label) triples, letter index), x scaled."""
    letters = word.letters
    top_step = scale // letters.count("R")
    bot_step = scale // letters.count("L")

    bottom = ((0, 0), 0)
    top = ((0, 1), -1)
    tops = 1
    bots = 1
    triangles = []
    for t, letter in enumerate(letters, start=1):
        if letter == "R":
            new = ((tops * top_step, 1), t)
            tops += 1
            triangles.append(((bottom, top, new), t))
            top = new
        else:
            new = ((bots * bot_step, 0), t)
            bots += 1
            triangles.append(((bottom, top, new), t))
            bottom = new
    return triangles


def _half_cell(word: TwoBridgeWord, scale: int):
    """D union D' with both clasp merges done: 2c-2 proto-triangles.

    Each proto is (corners, letter, kind, meridional_segment_or_None).
    The right clasp straddles the cell boundary; canonicalisation mod the
    lattice puts it back.
    """

    def mirror(corner):
        (x, y), label = corner
        return ((x, 2 - y), label)

    dprime = _zigzag_rectangle(word, scale)
    c = word.c
    protos = []

    # Left clasp: triangle 1 fused with its mirror across the removed edge
    # (-1, 1); label -1 stays as the midpoint of the meridional edge x = 0.
    (_, _, apex1), _ = dprime[0]
    left = (
        (((0, 0), 0), ((0, 2), 0), apex1),
        1,
        CLASP,
        ((0, 0), (0, 2)),
    )
    protos.append(left)

    for corners, t in dprime[1 : c - 1]:
        protos.append((corners, t, ORDINARY, None))
        protos.append((tuple(mirror(cnr) for cnr in corners), t, ORDINARY, None))

    # Right clasp: triangle c fused with a translated mirror copy across the
    # removed edge (r, c_n); label c_n becomes the meridional midpoint.
    (b_corner, u_corner, new_corner), _ = dprime[c - 1]
    if word.letters[-1] == "L":
        # new vertex c_n at (1, 0); meridional edge x = 1 from y=-1 to y=1.
        right = (
            (((scale, 1), u_corner[1]), ((scale, -1), u_corner[1]), b_corner),
            c,
            CLASP,
            ((scale, -1), (scale, 1)),
        )
        if new_corner[0] != (scale, 0):
            raise InvariantError("right clasp: c_n is not at (1, 0)")
    else:
        # new vertex c_n at (1, 1); meridional edge x = 1 from y=0 to y=2.
        right = (
            (((scale, 0), b_corner[1]), ((scale, 2), b_corner[1]), u_corner),
            c,
            CLASP,
            ((scale, 0), (scale, 2)),
        )
        if new_corner[0] != (scale, 1):
            raise InvariantError("right clasp: c_n is not at (1, 1)")
    protos.append(right)
    return protos


# --- lattice canonicalisation --------------------------------------------------


def _canon_point(point: Point, px: int) -> Point:
    return (point[0] % px, point[1] % 2)


def _canon_segment(p: Point, q: Point, px: int):
    a, b = (p, q) if p <= q else (q, p)
    dx, dy = (a[0] % px) - a[0], (a[1] % 2) - a[1]
    return ((a[0] + dx, a[1] + dy), (b[0] + dx, b[1] + dy))


def _canon_triangle(points, px: int):
    ax, ay = min(points)
    dx, dy = (ax % px) - ax, (ay % 2) - ay
    return tuple(sorted((x + dx, y + dy) for x, y in points))


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


# --- the complex ---------------------------------------------------------------


@dataclass
class CuspComplex:
    """Finite quotient-torus triangulation of one cusp.

    Darts are directed triangle sides: dart 3*t + i runs from corner i to
    corner i+1 of triangle t (corners stored counterclockwise). ``sigma_f``
    rotates within the triangle, ``sigma_e`` crosses to the partner dart of
    the same edge; loops and multi-edges are allowed, so darts rather than
    vertex pairs carry the structure.
    """

    word: TwoBridgeWord
    epsilon: int
    periods: tuple[int, int]
    scale: int
    vertices: list[Vertex]
    edges: list[Edge]
    triangles: list[Triangle]
    sigma_f: list[int]
    sigma_e: list[int]
    dart_vertex: list[int]
    dart_edge: list[int]

    _vertex_by_coords: dict = field(default_factory=dict, repr=False)
    _triangle_by_key: dict = field(default_factory=dict, repr=False)
    _edge_triangles: dict = field(default_factory=dict, repr=False)

    @property
    def dart_count(self) -> int:
        return len(self.sigma_f)

    @property
    def x_modulus(self) -> int:
        """The scaled x-period of the lattice."""
        return self.periods[0] * self.scale

    def point_fraction(self, point: Point) -> tuple[Fraction, Fraction]:
        return (Fraction(point[0], self.scale), Fraction(point[1]))

    def vertex_at(self, point: Point) -> Vertex | None:
        return self._vertex_by_coords.get(_canon_point(point, self.x_modulus))

    def triangle_at(self, points) -> tuple[int, tuple[Point, ...]] | None:
        """Triangle index and canonical corner tuple for a scaled corner triple."""
        key = _canon_triangle(points, self.x_modulus)
        idx = self._triangle_by_key.get(key)
        return None if idx is None else (idx, key)

    # -- counts and tables --

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.triangles)

    def euler_characteristic(self) -> int:
        v, e, f = self.counts()
        return v - e + f

    def computed_valences(self) -> ValenceTable:
        """Valence of each label, counted on the complex.

        Raises ``InvariantError`` if two vertices with the same label disagree
        (that would be a construction bug, not a property of the word).
        """
        by_label: dict[int, int] = {}
        for v in self.vertices:
            if by_label.setdefault(v.label, v.valence) != v.valence:
                raise InvariantError(
                    f"label {v.label} has vertices of valence "
                    f"{by_label[v.label]} and {v.valence}"
                )
        return ValenceTable(dict(sorted(by_label.items())), _r_label(self.word))

    def strips_and_clasps(self):
        """Horizontal strips (maximal runs of ordinary triangles) and clasps.

        Strips are connected components of ordinary triangles glued along
        rising edges; each contains exactly c - 2 triangles and together with
        the clasps they partition the faces.
        """
        rising_adj: dict[int, list[int]] = {t.index: [] for t in self.triangles}
        for edge in self.edges:
            if edge.kind != RISING:
                continue
            t1, t2 = self._edge_triangles[edge.index]
            rising_adj[t1].append(t2)
            rising_adj[t2].append(t1)

        clasps = [t.index for t in self.triangles if t.kind == CLASP]
        seen = set(clasps)
        strips = []
        for t in self.triangles:
            if t.index in seen:
                continue
            component = []
            stack = [t.index]
            seen.add(t.index)
            while stack:
                cur = stack.pop()
                component.append(cur)
                for other in rising_adj[cur]:
                    if other not in seen and self.triangles[other].kind == ORDINARY:
                        seen.add(other)
                        stack.append(other)
            strips.append(sorted(component))
        strips.sort()
        return strips, clasps

    # -- validation --

    def validate(self) -> None:
        """Check every structural invariant; raise InvariantError on failure."""
        v, e, f = self.counts()
        c, eps = self.word.c, self.epsilon
        px = self.periods[0]
        # per x-period px: V = (c-1) px, E = 3(c-1) px, F = 2(c-1) px,
        # which at the deck period px = 4/eps is 4(c-1)/eps etc.
        expect = ((c - 1) * px, 3 * (c - 1) * px, 2 * (c - 1) * px)
        if (v, e, f) != expect:
            raise InvariantError(f"counts {(v, e, f)} != {expect}")
        if v - e + f != 0:
            raise InvariantError("Euler characteristic is not 0")
        if 3 * f != 2 * e:
            raise InvariantError("3F != 2E")

        # every edge borders exactly two triangle sides
        per_edge: dict[int, int] = {}
        for d in range(self.dart_count):
            per_edge[self.dart_edge[d]] = per_edge.get(self.dart_edge[d], 0) + 1
        if any(count != 2 for count in per_edge.values()):
            raise InvariantError("an edge does not border exactly two triangles")

        # vertex links are single cycles: rot = sigma_f o sigma_e closes up
        seen = [False] * self.dart_count
        for d0 in range(self.dart_count):
            if seen[d0]:
                continue
            origin = self.dart_vertex[d0]
            length = 0
            d = d0
            while not seen[d]:
                seen[d] = True
                length += 1
                d = self.sigma_f[self.sigma_e[d]]
                if self.dart_vertex[d] != origin:
                    raise InvariantError("vertex rotation leaves its vertex")
            if length != self.vertices[origin].valence:
                raise InvariantError("vertex link is not a single cycle")

        # meridional and clasp bookkeeping: one meridional edge per line x = k
        # (4/eps per deck torus), two clasp triangles sharing each of them
        merid = [edge for edge in self.edges if edge.kind == MERIDIONAL]
        clasps = [t for t in self.triangles if t.kind == CLASP]
        if len(merid) != px:
            raise InvariantError(f"{len(merid)} meridional edges, want {px}")
        if len(clasps) != 2 * px:
            raise InvariantError(f"{len(clasps)} clasp triangles, want {2 * px}")
        for edge in merid:
            t1, t2 = self._edge_triangles[edge.index]
            if not (self.triangles[t1].kind == self.triangles[t2].kind == CLASP):
                raise InvariantError("meridional edge not flanked by clasps")
            (p, q) = edge.segment
            if p[0] != q[0] or abs(q[1] - p[1]) != 2 or p[0] % self.scale != 0:
                raise InvariantError("meridional edge is not vertical of extent 2")

        # handshake over label orbits
        mult: dict[int, int] = {}
        for vert in self.vertices:
            mult[vert.label] = mult.get(vert.label, 0) + 1
        table = self.computed_valences()
        if sum(mult[lab] * table[lab] for lab in mult) != 2 * e:
            raise InvariantError("handshake sum != 2E")
        on_line = {0, self.word.prefix_sums[self.word.n - 1]}
        for lab, count in mult.items():
            want = self.periods[0] // 2 if lab in on_line else self.periods[0]
            if count != want:
                raise InvariantError(f"label {lab} has multiplicity {count} != {want}")

        strips, clasp_idx = self.strips_and_clasps()
        if len(clasp_idx) + sum(len(s) for s in strips) != f:
            raise InvariantError("strips and clasps do not partition the faces")
        if c > 2 and any(len(s) != c - 2 for s in strips):
            raise InvariantError("a horizontal strip does not have c-2 triangles")

    # -- serialisation --

    def to_json_dict(self) -> dict:
        def pt(p: Point):
            fx, fy = self.point_fraction(p)
            return [str(fx), str(fy)]

        return {
            "schema": "twobridge.cusp-complex/1",
            "word": str(self.word),
            "epsilon": self.epsilon,
            "periods": list(self.periods),
            "counts": {"vertices": len(self.vertices), "edges": len(self.edges),
                       "triangles": len(self.triangles)},
            "vertices": [
                {"id": v.index, "label": v.label, "coords": pt(v.coords),
                 "valence": v.valence}
                for v in self.vertices
            ],
            "edges": [
                {"id": edge.index, "vertices": list(edge.vertex_indices),
                 "class": edge.kind, "valence": edge.valence,
                 "corresponding_labels": list(edge.corresponding_labels),
                 "segment": [pt(edge.segment[0]), pt(edge.segment[1])]}
                for edge in self.edges
            ],
            "triangles": [
                {"id": t.index, "edges": list(t.edge_indices),
                 "vertices": list(t.vertex_indices), "kind": t.kind,
                 "letter": t.letter, "corners": [pt(p) for p in t.corners]}
                for t in self.triangles
            ],
        }


def build_complex(word: TwoBridgeWord, x_period: int | None = None) -> CuspComplex:
    """Build the quotient-torus cusp triangulation of K(word).

    ``x_period`` defaults to the deck period 4/eps; passing 2 for a knot gives
    the smaller torus used for symmetry quotients (the tiling itself is always
    2-periodic in x).
    """
    word = require_hyperbolic(word)
    eps = component_count(word)
    px = 4 // eps if x_period is None else x_period
    if px not in (2, 4):
        raise ValueError("x_period must be 2 or 4")
    letters = word.letters
    scale = lcm(letters.count("R"), letters.count("L"))
    modulus = px * scale

    protos = _half_cell(word, scale)

    instances = []  # (corners ccw, letter, kind, merid segment or None)
    for k in range(px // 2):
        shift = 2 * k * scale
        for transform in (False, True):
            for corners, letter, kind, merid in protos:
                if transform:
                    cs = tuple(((-x + shift, 2 - y), lab) for (x, y), lab in corners)
                else:
                    cs = tuple(((x + shift, y), lab) for (x, y), lab in corners)
                if merid is not None:
                    if transform:
                        m0 = (-merid[0][0] + shift, 2 - merid[0][1])
                        m1 = (-merid[1][0] + shift, 2 - merid[1][1])
                    else:
                        m0 = (merid[0][0] + shift, merid[0][1])
                        m1 = (merid[1][0] + shift, merid[1][1])
                    mseg = (m0, m1)
                else:
                    mseg = None
                pts = [p for p, _ in cs]
                if _cross(pts[0], pts[1], pts[2]) < 0:
                    cs = (cs[0], cs[2], cs[1])
                if _cross(cs[0][0], cs[1][0], cs[2][0]) <= 0:
                    raise InvariantError("degenerate triangle")
                instances.append((cs, letter, kind, mseg))

    # canonical triangle classes mod the lattice
    tri_by_key: dict[tuple, int] = {}
    for idx, (cs, *_rest) in enumerate(instances):
        key = _canon_triangle([p for p, _ in cs], modulus)
        if key in tri_by_key:
            raise InvariantError("duplicate triangle class")
        tri_by_key[key] = idx
    if len(instances) != 2 * (word.c - 1) * px:
        raise InvariantError("unexpected triangle count")

    # vertices
    vertex_key_label: dict[Point, int] = {}
    for cs, *_rest in instances:
        for p, label in cs:
            key = _canon_point(p, modulus)
            if vertex_key_label.setdefault(key, label) != label:
                raise InvariantError(f"conflicting labels at vertex {key}")
    vertex_keys = sorted(vertex_key_label)
    vertex_index = {key: i for i, key in enumerate(vertex_keys)}

    # edges: canonical segment -> [(triangle, side)]
    edge_incidence: dict[tuple, list[tuple[int, int]]] = {}
    for t, (cs, *_rest) in enumerate(instances):
        for side in range(3):
            p = cs[side][0]
            q = cs[(side + 1) % 3][0]
            edge_incidence.setdefault(_canon_segment(p, q, modulus), []).append((t, side))
    for key, inc in edge_incidence.items():
        if len(inc) != 2:
            raise InvariantError(f"edge {key} borders {len(inc)} sides")
    edge_keys = sorted(edge_incidence)
    edge_index = {key: i for i, key in enumerate(edge_keys)}

    merid_keys = {
        _canon_segment(m[0], m[1], modulus)
        for _, _, _, m in instances
        if m is not None
    }

    # darts
    n_tri = len(instances)
    sigma_f = [0] * (3 * n_tri)
    sigma_e = [0] * (3 * n_tri)
    dart_vertex = [0] * (3 * n_tri)
    dart_edge = [0] * (3 * n_tri)
    for t, (cs, *_rest) in enumerate(instances):
        for side in range(3):
            d = 3 * t + side
            sigma_f[d] = 3 * t + (side + 1) % 3
            dart_vertex[d] = vertex_index[_canon_point(cs[side][0], modulus)]
            p = cs[side][0]
            q = cs[(side + 1) % 3][0]
            dart_edge[d] = edge_index[_canon_segment(p, q, modulus)]
    for key, ((t1, s1), (t2, s2)) in edge_incidence.items():
        sigma_e[3 * t1 + s1] = 3 * t2 + s2
        sigma_e[3 * t2 + s2] = 3 * t1 + s1

    # valences
    valence = [0] * len(vertex_keys)
    for d in range(3 * n_tri):
        valence[dart_vertex[d]] += 1
    vertices = [
        Vertex(i, vertex_key_label[key], key, valence[i])
        for i, key in enumerate(vertex_keys)
    ]

    # edge classification and edge valences (the edge/vertex correspondence)
    edges = []
    edge_triangles = {}
    for key in edge_keys:
        idx = edge_index[key]
        (t1, s1), (t2, s2) = edge_incidence[key]
        edge_triangles[idx] = (t1, t2)
        lo, hi = key
        if key in merid_keys:
            kind = MERIDIONAL
        elif lo[1] == hi[1]:
            kind = HORIZONTAL
        else:
            kind = RISING
            if abs(hi[1] - lo[1]) != 1:
                raise InvariantError("rising edge does not span one line gap")

        across = []
        for t, s in ((t1, s1), (t2, s2)):
            cs = instances[t][0]
            across.append(cs[(s + 2) % 3])

        if kind in (MERIDIONAL, HORIZONTAL):
            labs = tuple(label for _, label in across)
            vals = {
                vertices[vertex_index[_canon_point(p, modulus)]].valence
                for p, _ in across
            }
            if len(vals) != 1:
                raise InvariantError(
                    f"correspondence conflict on {kind} edge {key}: {labs}"
                )
            ev = vals.pop()
            corresponding = tuple(sorted(set(labs)))
        else:
            chosen = None
            sides = set()
            for t, s in ((t1, s1), (t2, s2)):
                cs = instances[t][0]
                p = cs[s][0]
                q = cs[(s + 1) % 3][0]
                lower, upper = (p, q) if p[1] < q[1] else (q, p)
                third = cs[(s + 2) % 3]
                left = _cross(lower, upper, third[0]) > 0
                sides.add(left)
                k_parity = lower[1] % 2
                if (k_parity == 0 and left) or (k_parity == 1 and not left):
                    chosen = third
            if sides != {True, False} or chosen is None:
                raise InvariantError("rising edge without a left/right pair")
            corresponding = (chosen[1],)
            ev = vertices[vertex_index[_canon_point(chosen[0], modulus)]].valence
        edges.append(Edge(idx, (vertex_index[_canon_point(lo, modulus)],
                                vertex_index[_canon_point(hi, modulus)]),
                          kind, ev, corresponding, key))

    triangles = []
    for t, (cs, letter, kind, _merid) in enumerate(instances):
        triangles.append(
            Triangle(
                t,
                tuple(p for p, _ in cs),
                tuple(label for _, label in cs),
                tuple(vertex_index[_canon_point(p, modulus)] for p, _ in cs),
                tuple(dart_edge[3 * t + side] for side in range(3)),
                kind,
                letter,
            )
        )

    cx = CuspComplex(
        word=word,
        epsilon=eps,
        periods=(px, 2),
        scale=scale,
        vertices=vertices,
        edges=edges,
        triangles=triangles,
        sigma_f=sigma_f,
        sigma_e=sigma_e,
        dart_vertex=dart_vertex,
        dart_edge=dart_edge,
    )
    cx._vertex_by_coords = {v.coords: v for v in vertices}
    cx._triangle_by_key = {
        _canon_triangle(t.corners, modulus): t.index for t in triangles
    }
    cx._edge_triangles = edge_triangles
    return cx


def edge_vertex_correspondence(cx: CuspComplex) -> dict[int, tuple[int, ...]]:
    """Edge id -> corresponding vertex label(s).

    Horizontal and meridional edges record the labels across both adjacent
    triangles (their valences agree, which is checked at build time); a
    rising edge records the single across-vertex picked by the parity of its
    lower endpoint's line.
    """
    return {edge.index: edge.corresponding_labels for edge in cx.edges}


# --- closed valence formulas ---------------------------------------------------


def _r_label(word: TwoBridgeWord) -> int:
    alpha = word.syllables
    sums = word.prefix_sums
    return sums[word.n - 2] if alpha[-1] == 1 else sums[word.n] - 1


def is_excluded(word: TwoBridgeWord) -> bool:
    """Membership in {R^2L^2, RL^m, RL^mR}, closed under mirror and inversion."""
    alpha = canonical_form(word).syllables
    if alpha == (2, 2):
        return True
    if len(alpha) == 2 and alpha[0] == 1:
        return True
    if len(alpha) == 3 and alpha[0] == 1 and alpha[2] == 1:
        return True
    return False


def expected_valences(word: TwoBridgeWord) -> ValenceTable:
    """The closed-form valence table by label.

    val(c_i) = 4a_{i+1}+4 at the ends i in {0, n-1}; 2a_{i+1}+3 at i=1 or
    i=n-2 when the adjacent end syllable is a single letter; 2a_{i+1}+4 for
    the remaining syllable corners; val(1) and val(r) are 3 next to a long
    end syllable, 2a+3 next to a single-letter one; all other labels have
    valence 4.
    """
    word = require_hyperbolic(word)
    if is_excluded(word):
        raise ExcludedWordError(f"{word} is in the excluded family")
    alpha = word.syllables
    n = word.n
    sums = word.prefix_sums
    table: dict[int, int] = {}
    for label in range(sums[n]):
        table[label] = 4

    # alpha[i] is the paper's alpha_{i+1}
    for i in range(n):
        if i in (0, n - 1):
            val = 4 * alpha[i] + 4
        elif (i == 1 and alpha[0] == 1) or (i == n - 2 and alpha[-1] == 1):
            val = 2 * alpha[i] + 3
        else:
            val = 2 * alpha[i] + 4
        table[sums[i]] = val

    table[1] = 3 if alpha[0] > 1 else 2 * alpha[1] + 3
    r = _r_label(word)
    table[r] = 3 if alpha[-1] > 1 else 2 * alpha[-2] + 3
    return ValenceTable(dict(sorted(table.items())), r)
