r"""
Admissible discs in a truncated taut tetrahedron.

The boundary of the truncated tetrahedron is cut into four hexagons (face
``f`` truncated, written ``H f``) and four small triangles (the link of
vertex ``v``, written ``T v``).  Its 1-cells are the six truncated edges
``e ab`` and the twelve triangle sides ``t vf`` (triangle ``v`` against
hexagon ``f``).

A disc pattern is the boundary curve of a disc, recorded as the cyclic
sequence of 1-cells it crosses (each at its midpoint, each at most once,
so the curve is embedded exactly when no two of its straight arcs inside a
cell cross).  Cusps are the crossings of zero-angle edges plus the arcs
inside triangles; the combinatorial area is ``cusps - 2`` in units of pi.

Geometry is exact: the tetrahedron has vertices at ``3 * (1,1,1),
3 * (1,-1,-1), 3 * (-1,1,-1), 3 * (-1,-1,1)`` and is truncated at one
third of each edge, so every hexagon is regular.  Each cell gets planar
rational coordinates (an affine image of the face, so intersections and
orientation are preserved) oriented by the outward normal.

The dual-cycle count ``G . D`` is computed from the arcs ``alpha_i``: for
each zero-angle edge ``e_i`` the path runs from the centre of the in-face
hexagon, straight to the midpoint of ``e_i``, then on to the centre of the
out-face hexagon.  An arc of the disc contributes its signed crossings with
the two alpha segments of its hexagon, a crossing at an endpoint of a
segment counting one half, and the sum is halved.  An arc lying along an
alpha segment contributes nothing: shifting it off to either side meets
neither segment.
"""
from dataclasses import dataclass
from fractions import Fraction

from .tri_core import EDGES, edge_complement

_COORDS = ((3, 3, 3), (3, -3, -3), (-3, 3, -3), (-3, -3, 3))
HALF = Fraction(1, 2)


class DiscError(ValueError):
    pass


class Prop12Violation(AssertionError):
    """An admissible disc breaks ``Area >= pi |G.D|`` or ``|G.D| <= c/2``."""

    def __init__(self, pattern, message):
        self.pattern = pattern
        super().__init__("{}: {}".format(message, pattern.describe()))


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _cross3(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _dot(p, q):
    return sum(a * b for a, b in zip(p, q))


def _cross2(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _mid(p, q):
    return tuple((Fraction(a) + b) / 2 for a, b in zip(p, q))


def _sign(x):
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Cell:
    """A 2-cell with its 1-cells in counterclockwise order."""
    name: tuple
    sides: tuple
    midpoints: dict
    directions: dict
    centre: tuple

    @property
    def is_hexagon(self):
        return self.name[0] == "H"

    def position(self, one_cell):
        return self.sides.index(one_cell)


def one_cell_name(c):
    if c[0] == "e":
        return "e{}{}".format(c[1], c[2])
    return "t{}{}".format(c[1], c[2])


class TruncatedModel:
    """
    Cell structure and planar coordinates of one truncated taut tetrahedron.

    ``out_flags[f]`` is true when face ``f`` is cooriented outwards; exactly
    two faces must be out.
    """

    def __init__(self, out_flags):
        out_flags = tuple(bool(x) for x in out_flags)
        if len(out_flags) != 4 or sum(out_flags) != 2:
            raise DiscError("need a two-in/two-out tetrahedron, got {}".format(out_flags))
        self.out_flags = out_flags
        self.angles = {}
        for a, b in EDGES:
            c, d = edge_complement(a, b)
            self.angles[(a, b)] = 1 if out_flags[c] == out_flags[d] else 0
        self.pi_edges = tuple(e for e in EDGES if self.angles[e])
        self.zero_edges = tuple(e for e in EDGES if not self.angles[e])

        trunc = {}
        for x in range(4):
            for y in range(4):
                if x != y:
                    trunc[(x, y)] = tuple(Fraction(2 * a + b, 3)
                                          for a, b in zip(_COORDS[x], _COORDS[y]))
        centroid = (0, 0, 0)
        self.one_cells = tuple([("e",) + e for e in EDGES] +
                               [("t", v, f) for v in range(4) for f in range(4) if v != f])
        self.cells = {}
        self.cells_of = {c: [] for c in self.one_cells}

        for f in range(4):
            x, y, z = [v for v in range(4) if v != f]
            normal = _sub(centroid, _COORDS[f])
            poly, sides = self._hexagon(trunc, x, y, z, f)
            if _dot(self._poly_normal(poly), normal) < 0:
                poly, sides = self._hexagon(trunc, x, z, y, f)
            self._add_cell(("H", f), poly, sides, normal)
        for v in range(4):
            ws = [w for w in range(4) if w != v]
            normal = _sub(_COORDS[v], centroid)
            order = ws
            poly = [trunc[(v, w)] for w in order]
            if _dot(self._poly_normal(poly), normal) < 0:
                order = order[::-1]
                poly = poly[::-1]
            sides = []
            for k in range(3):
                w1, w2 = order[k], order[(k + 1) % 3]
                f = ({0, 1, 2, 3} - {v, w1, w2}).pop()
                sides.append(("t", v, f))
            self._add_cell(("T", v), poly, sides, normal)

        self.centres = {f: self.cells[("H", f)].centre for f in range(4)}
        # alpha segments per hexagon, oriented from in-face to out-face
        self.alpha = {f: [] for f in range(4)}
        for e in self.zero_edges:
            c, d = edge_complement(*e)
            for f in (c, d):
                cell = self.cells[("H", f)]
                mid = cell.midpoints[("e",) + e]
                seg = (cell.centre, mid) if not out_flags[f] else (mid, cell.centre)
                self.alpha[f].append((e, seg))

    @staticmethod
    def _hexagon(trunc, x, y, z, f):
        poly = [trunc[(x, y)], trunc[(y, x)], trunc[(y, z)], trunc[(z, y)],
                trunc[(z, x)], trunc[(x, z)]]
        sides = [("e",) + tuple(sorted((x, y))), ("t", y, f), ("e",) + tuple(sorted((y, z))),
                 ("t", z, f), ("e",) + tuple(sorted((z, x))), ("t", x, f)]
        return poly, sides

    @staticmethod
    def _poly_normal(poly):
        return _cross3(_sub(poly[1], poly[0]), _sub(poly[2], poly[1]))

    def _add_cell(self, name, poly, sides, normal):
        u = _sub(poly[1], poly[0])
        w = _cross3(normal, u)
        flat = [(_dot(p, u), _dot(p, w)) for p in poly]
        n = len(flat)
        mids, dirs = {}, {}
        for k, side in enumerate(sides):
            p, q = flat[k], flat[(k + 1) % n]
            mids[side] = _mid(p, q)
            dirs[side] = _sub(q, p)
        centre = tuple(sum(Fraction(p[i]) for p in flat) / n for i in range(2))
        cell = Cell(name, tuple(sides), mids, dirs, centre)
        self.cells[name] = cell
        for s in sides:
            self.cells_of[s].append(name)

    # -- queries ----------------------------------------------------------

    def other_cell(self, one_cell, cell):
        a, b = self.cells_of[one_cell]
        return b if a == cell else a

    def common_cell(self, c1, c2):
        common = set(self.cells_of[c1]) & set(self.cells_of[c2])
        if len(common) != 1:
            return None
        return common.pop()

    def is_cusp_crossing(self, one_cell):
        return one_cell[0] == "e" and not self.angles[one_cell[1:]]

    def arc_allowed(self, cell_name, c1, c2):
        cell = self.cells[cell_name]
        if c1 == c2:
            return False
        if not cell.is_hexagon:
            return True
        d = abs(cell.position(c1) - cell.position(c2))
        return min(d, 6 - d) >= 2


def build_model(out_flags):
    return TruncatedModel(out_flags)


def build_model_from_angles(angles):
    """
    Model from corner angles (``angles[k]`` for ``EDGES[k]``, 1 = pi).  The
    angles fix the coorientation only up to reversal; the faces adjacent to
    the pi edge through vertex 0 are taken as in-faces, and reversing would
    only change the sign of every ``G . D``.
    """
    angles = tuple(int(a) for a in angles)
    pis = [EDGES[k] for k in range(6) if angles[k]]
    if len(angles) != 6 or len(pis) != 2 or set(pis[0]) & set(pis[1]):
        raise DiscError("need exactly two opposite pi edges, got {}".format(angles))
    first = next(e for e in pis if 0 in e)
    # faces opposite the vertices of the pi edge at 0 share a flag, as do the others
    in_faces = edge_complement(*first)
    return TruncatedModel(tuple(f not in in_faces for f in range(4)))


def model_for(tri, coor, tet):
    return TruncatedModel(coor.flags(tri)[tet])


@dataclass(frozen=True)
class DiscPattern:
    """
    Cyclic sequence of crossed 1-cells, rotated to start at the smallest;
    ``arcs[k]`` is ``(cell, from, to)`` joining crossings ``k`` and ``k+1``.
    """
    crossings: tuple
    arcs: tuple

    def __len__(self):
        return len(self.crossings)

    def describe(self):
        return " ".join("{}[{}>{}]".format("".join(map(str, cell)), one_cell_name(a),
                                            one_cell_name(b))
                        for cell, a, b in self.arcs)


def _chords_cross(cell, a1, b1, a2, b2):
    pa, pb = sorted((cell.position(a1), cell.position(b1)))
    inside = [pa < cell.position(x) < pb for x in (a2, b2)]
    return inside[0] != inside[1]


def _pattern_from(model, crossings, first_cell):
    arcs = []
    cell = first_cell
    n = len(crossings)
    for k in range(n):
        a, b = crossings[k], crossings[(k + 1) % n]
        arcs.append((cell, a, b))
        cell = model.other_cell(b, cell)
    return DiscPattern(tuple(crossings), tuple(arcs))


def is_admissible(model, pattern):
    """Check conditions (ii)-(iv), embeddedness, and that arcs chain correctly."""
    n = len(pattern.crossings)
    if n < 2 or len(set(pattern.crossings)) != n:
        return False
    by_cell = {}
    for k, (cell, a, b) in enumerate(pattern.arcs):
        if (a, b) != (pattern.crossings[k], pattern.crossings[(k + 1) % n]):
            return False
        if cell not in model.cells_of[a] or cell not in model.cells_of[b]:
            return False
        if not model.arc_allowed(cell, a, b):
            return False
        nxt = pattern.arcs[(k + 1) % n][0]
        if nxt != model.other_cell(b, cell):
            return False
        by_cell.setdefault(cell, []).append((a, b))
    for cell, chords in by_cell.items():
        c = model.cells[cell]
        for i in range(len(chords)):
            for j in range(i + 1, len(chords)):
                if _chords_cross(c, *chords[i], *chords[j]):
                    return False
    return True


def cusp_count(model, pattern):
    """Zero-angle edge crossings plus arcs inside boundary triangles."""
    zero = sum(1 for c in pattern.crossings if model.is_cusp_crossing(c))
    tri_arcs = sum(1 for cell, _, _ in pattern.arcs if cell[0] == "T")
    return zero + tri_arcs


def area(model, pattern):
    """Combinatorial area in units of pi."""
    return cusp_count(model, pattern) - 2


def enumerate_admissible_discs(model, max_cusps, crossing_set=None):
    """
    Every admissible pattern with at most ``max_cusps`` cusps, both
    orientations, sorted by crossing sequence.  ``crossing_set`` optionally
    restricts the 1-cells the curve may cross.
    """
    if max_cusps < 0:
        raise ValueError("max_cusps must be non-negative")
    order = {c: i for i, c in enumerate(model.one_cells)}
    allowed = set(model.one_cells) if crossing_set is None else set(crossing_set)
    results = []

    def dfs(start, start_cell, cell, path, used, chords, cusps):
        last = path[-1]
        for nxt in model.cells[cell].sides:
            if not model.arc_allowed(cell, last, nxt):
                continue
            add = (1 if cell[0] == "T" else 0) + (1 if model.is_cusp_crossing(nxt) and
                                                  nxt != start else 0)
            if cusps + add > max_cusps:
                continue
            c = model.cells[cell]
            if any(_chords_cross(c, last, nxt, a, b) for a, b in chords.get(cell, ())):
                continue
            if nxt == start:
                if model.other_cell(start, cell) == start_cell and len(path) >= 2:
                    results.append(_pattern_from(model, path, start_cell))
                continue
            if nxt in used or nxt not in allowed or order[nxt] < order[start]:
                continue
            chords.setdefault(cell, []).append((last, nxt))
            used.add(nxt)
            path.append(nxt)
            dfs(start, start_cell, model.other_cell(nxt, cell), path, used, chords,
                cusps + add)
            path.pop()
            used.discard(nxt)
            chords[cell].pop()

    for start in model.one_cells:
        if start not in allowed:
            continue
        first = 1 if model.is_cusp_crossing(start) else 0
        if first > max_cusps:
            continue
        for start_cell in model.cells_of[start]:
            dfs(start, start_cell, start_cell, [start], {start}, {}, first)
    results.sort(key=lambda p: [order[c] for c in p.crossings])
    return results


def reversed_pattern(model, pattern):
    seq = list(reversed(pattern.crossings))
    order = {c: i for i, c in enumerate(model.one_cells)}
    k = min(range(len(seq)), key=lambda i: order[seq[i]])
    seq = seq[k:] + seq[:k]
    # the arc from seq[0] to seq[1] is the reversed arc of the original
    for cell, a, b in pattern.arcs:
        if (a, b) == (seq[1], seq[0]):
            return _pattern_from(model, seq, cell)
    raise DiscError("pattern arcs inconsistent")  # pragma: no cover


# ---------------------------------------------------------------------------
# intersection numbers


def _segment_hit(p0, p1, q0, q1):
    """
    ``(t, u, sign)`` for the crossing of segments ``p0p1`` and ``q0q1`` with
    ``t, u`` in ``[0, 1]``, ``None`` when they miss, ``"overlap"`` when they are
    collinear and share more than a point.
    """
    d = _sub(p1, p0)
    e = _sub(q1, q0)
    den = _cross2(d, e)
    w = _sub(q0, p0)
    if den == 0:
        if _cross2(d, w) != 0:
            return None
        # collinear: project onto d
        dd = _dot(d, d)
        a = Fraction(_dot(w, d), dd)
        b = Fraction(_dot(_sub(q1, p0), d), dd)
        lo, hi = min(a, b), max(a, b)
        if hi < 0 or lo > 1:
            return None
        if hi == 0 or lo == 1:
            return None if hi == lo else "overlap"
        return "overlap"
    t = Fraction(_cross2(w, e), den)
    u = Fraction(_cross2(w, d), den)
    if not (0 <= t <= 1 and 0 <= u <= 1):
        return None
    return t, u, _sign(den)


def arc_alpha_contribution(model, cell_name, a, b, edge):
    """
    Signed contribution of the arc ``a -> b`` in a hexagon against the alpha
    segment of zero edge ``edge`` there, before the final halving.
    """
    cell = model.cells[cell_name]
    f = cell_name[1]
    seg = dict(model.alpha[f])[edge]
    p0, p1 = cell.midpoints[a], cell.midpoints[b]
    hit = _segment_hit(p0, p1, seg[0], seg[1])
    if hit is None or hit == "overlap":
        return Fraction(0)
    t, u, sign = hit
    weight = HALF if u in (0, 1) else Fraction(1)
    return sign * weight


def arc_contribution(model, cell_name, a, b):
    """Contribution of one hexagon arc to ``G . D`` (sum over its alpha segments, halved)."""
    if cell_name[0] != "H":
        return Fraction(0)
    total = sum((arc_alpha_contribution(model, cell_name, a, b, e)
                 for e, _ in model.alpha[cell_name[1]]), Fraction(0))
    return total / 2


def g_dot(model, pattern):
    """``G . D`` as an exact fraction (a multiple of 1/4)."""
    return sum((arc_contribution(model, cell, a, b) for cell, a, b in pattern.arcs),
               Fraction(0))


def arc_cusp_endpoints(model, cell_name, a, b):
    """Endpoints of an arc that carry a cusp: zero-angle edges or triangle sides."""
    return sum(1 for c in (a, b) if c[0] == "t" or model.is_cusp_crossing(c))


def hexagon_arc_table(model):
    """
    The nine admissible arc types in each hexagon with their contribution,
    oriented from the lower to the higher counterclockwise side position.
    """
    rows = []
    for f in range(4):
        cell = model.cells[("H", f)]
        for i in range(6):
            for j in range(i + 2, 6):
                if j - i > 3 and 6 - (j - i) < 2:
                    continue
                a, b = cell.sides[i], cell.sides[j]
                if not model.arc_allowed(cell.name, a, b):
                    continue
                per_alpha = {e: arc_alpha_contribution(model, cell.name, a, b, e) / 2
                             for e, _ in model.alpha[f]}
                rows.append({
                    "hexagon": f,
                    "from": one_cell_name(a),
                    "to": one_cell_name(b),
                    "through_centre": min(j - i, 6 - (j - i)) == 3,
                    "per_alpha": per_alpha,
                    "contribution": arc_contribution(model, cell.name, a, b),
                    "cusp_endpoints": arc_cusp_endpoints(model, cell.name, a, b),
                })
    return rows


# -- independent route: perturbed curve against a path through a triangle --


def _slid_points(model, pattern, eps, side):
    """
    Crossing points of the curve slid along their 1-cells by ``eps`` to the
    left (``side=+1``) or right (``side=-1``) of the direction of travel,
    expressed in each adjacent cell's coordinates.
    """
    pts = {}
    for k, (cell_name, a, b) in enumerate(pattern.arcs):
        cell = model.cells[cell_name]
        d = _sub(cell.midpoints[b], cell.midpoints[a])
        for which, c in (("start", a), ("end", b)):
            tau = cell.directions[c]
            if _cross2(d, tau) < 0:
                tau = (-tau[0], -tau[1])
            m = cell.midpoints[c]
            pts[(k, which)] = tuple(m[i] + side * eps * tau[i] for i in range(2))
    return pts


def _path_segments(model, edge):
    """
    A path from the in-face centre to the out-face centre for zero edge
    ``edge`` that avoids the edge, running through the triangle at its first
    vertex.  Returns ``[(cell name, p, q), ...]``.
    """
    c, d = edge_complement(*edge)
    f_in, f_out = (c, d) if not model.out_flags[c] else (d, c)
    x = edge[0]
    h_in, h_out, tri = model.cells[("H", f_in)], model.cells[("H", f_out)], model.cells[("T", x)]
    s_in, s_out = ("t", x, f_in), ("t", x, f_out)
    return [
        (h_in.name, h_in.centre, h_in.midpoints[s_in]),
        (tri.name, tri.midpoints[s_in], tri.midpoints[s_out]),
        (h_out.name, h_out.midpoints[s_out], h_out.centre),
    ]


def g_dot_oracle(model, pattern, eps=Fraction(1, 1000)):
    """
    ``G . D`` from winding numbers: for each zero edge, count signed
    crossings of the slightly shifted curve with a path joining the two
    dual-graph points through a boundary triangle, average over both shift
    directions, sum, halve.
    """
    total = Fraction(0)
    for side in (1, -1):
        pts = _slid_points(model, pattern, eps, side)
        for e in model.zero_edges:
            for cell_name, p, q in _path_segments(model, e):
                for k, (arc_cell, a, b) in enumerate(pattern.arcs):
                    if arc_cell != cell_name:
                        continue
                    hit = _segment_hit(pts[(k, "start")], pts[(k, "end")], p, q)
                    if hit is None:
                        continue
                    if hit == "overlap" or hit[0] in (0, 1) or hit[1] in (0, 1):
                        raise DiscError("perturbation too coarse for {}".format(
                            pattern.describe()))
                    total += hit[2]
    return total / 4


def arc_contribution_perturbed(model, cell_name, a, b, eps=Fraction(1, 1000)):
    """Per-arc contribution from averaging left/right shifted copies of the arc."""
    if cell_name[0] != "H":
        return Fraction(0)
    cell = model.cells[cell_name]
    d = _sub(cell.midpoints[b], cell.midpoints[a])
    total = Fraction(0)
    for side in (1, -1):
        ends = []
        for c in (a, b):
            tau = cell.directions[c]
            if _cross2(d, tau) < 0:
                tau = (-tau[0], -tau[1])
            m = cell.midpoints[c]
            ends.append(tuple(m[i] + side * eps * tau[i] for i in range(2)))
        for e, seg in model.alpha[cell_name[1]]:
            hit = _segment_hit(ends[0], ends[1], seg[0], seg[1])
            if hit is None:
                continue
            if hit == "overlap" or hit[1] in (0, 1):
                raise DiscError("perturbation too coarse")
            total += hit[2]
    return total / 4


# ---------------------------------------------------------------------------
# named families and the inequality suite


def vertex_linking_patterns(model, v):
    """Both orientations of the curve around the boundary triangle at ``v``."""
    cells = [("e",) + tuple(sorted((v, w))) for w in range(4) if w != v]
    return enumerate_admissible_discs(model, 6, crossing_set=cells)


def face_parallel_patterns(model, f):
    """Both orientations of the curve parallel to hexagon ``f``."""
    x = [v for v in range(4) if v != f]
    cells = [("t", a, b) for a in x for b in x if a != b]
    return [p for p in enumerate_admissible_discs(model, 6, crossing_set=cells)
            if len(p) == 6]


def face_parallel_pattern(model, f):
    """
    The face-parallel curve around hexagon ``f`` oriented so that ``G . D``
    is positive (the disc is crossed by ``G`` in its direction).
    """
    pats = face_parallel_patterns(model, f)
    return max(pats, key=lambda p: g_dot(model, p))


@dataclass
class Prop12Report:
    max_cusps: int
    count: int
    by_cusps: dict
    max_crossings_by_cusps: dict
    equality_cases: int
    max_abs_g_dot: Fraction

    def as_dict(self):
        return {
            "max_cusps": self.max_cusps,
            "patterns": self.count,
            "by_cusps": {str(k): v for k, v in sorted(self.by_cusps.items())},
            "max_crossings_by_cusps": {str(k): v for k, v in
                                       sorted(self.max_crossings_by_cusps.items())},
            "equality_cases": self.equality_cases,
            "max_abs_g_dot": str(self.max_abs_g_dot),
        }


def check_prop12_suite(model, max_cusps, patterns=None):
    """
    Check ``area >= |G.D|`` and ``|G.D| <= c/2`` (and the per-arc bound) on
    every admissible pattern up to ``max_cusps``; raise
    :class:`Prop12Violation` on the first failure.
    """
    if patterns is None:
        patterns = enumerate_admissible_discs(model, max_cusps)
    by_cusps, max_cross = {}, {}
    equality = 0
    biggest = Fraction(0)
    for p in patterns:
        c = cusp_count(model, p)
        g = g_dot(model, p)
        if c <= 1:
            raise Prop12Violation(p, "admissible disc with fewer than two cusps")
        if abs(g) > Fraction(c, 2):
            raise Prop12Violation(p, "|G.D| = {} exceeds c/2 = {}/2".format(g, c))
        if area(model, p) < abs(g):
            raise Prop12Violation(p, "area {} below |G.D| = {}".format(area(model, p), g))
        for cell, a, b in p.arcs:
            contrib = arc_contribution(model, cell, a, b)
            if abs(contrib) * 4 > arc_cusp_endpoints(model, cell, a, b):
                raise Prop12Violation(p, "arc {}>{} contributes {}".format(
                    one_cell_name(a), one_cell_name(b), contrib))
        by_cusps[c] = by_cusps.get(c, 0) + 1
        max_cross[c] = max(max_cross.get(c, 0), len(p))
        equality += area(model, p) == abs(g)
        biggest = max(biggest, abs(g))
    return Prop12Report(max_cusps, len(patterns), by_cusps, max_cross, equality, biggest)


def pattern_to_dict(model, pattern):
    return {
        "crossings": [one_cell_name(c) for c in pattern.crossings],
        "arcs": [{"cell": "".join(map(str, cell)), "from": one_cell_name(a),
                  "to": one_cell_name(b),
                  "contribution": str(arc_contribution(model, cell, a, b))}
                 for cell, a, b in pattern.arcs],
        "cusps": cusp_count(model, pattern),
        "area": area(model, pattern),
        "g_dot": str(g_dot(model, pattern)),
    }


def _winds_positively(model, pattern, f):
    """True when the curve runs counterclockwise around hexagon ``f`` seen from outside."""
    for cell_name, a, b in pattern.arcs:
        if cell_name[0] != "T":
            continue
        cell = model.cells[cell_name]
        p, q = cell.midpoints[a], cell.midpoints[b]
        r = cell.midpoints[("t", cell_name[1], f)]
        return _cross2(_sub(q, p), _sub(r, p)) > 0
    raise DiscError("face-parallel curve misses the boundary triangles")  # pragma: no cover


def oriented_face_parallel(model, f, normal_inward):
    """
    Face-parallel curve at hexagon ``f`` bounding a disc whose normal points
    into the tetrahedron (``normal_inward``) or out of it.
    """
    for p in face_parallel_patterns(model, f):
        if _winds_positively(model, p, f) != normal_inward:
            return p
    raise DiscError("no face-parallel curve at face {}".format(f))  # pragma: no cover


@dataclass(frozen=True)
class PlacedDisc:
    tet: int
    face: int
    pattern: DiscPattern
    area: int
    g_dot: Fraction


def face_parallel_decomposition(tri, coor, weights):
    """
    Push every sheet of a carried surface into the tetrahedron it enters
    (the one for which its face is an in-face) as a face-parallel disc whose
    normal follows the coorientation.
    """
    from .tri_core import face_classes

    flags = coor.flags(tri)
    models = {}
    out = []
    for k, ((t, f), (t2, f2)) in enumerate(face_classes(tri)):
        if not weights[k]:
            continue
        tet, face = (t2, f2) if flags[t][f] else (t, f)
        if tet not in models:
            models[tet] = TruncatedModel(flags[tet])
        m = models[tet]
        p = oriented_face_parallel(m, face, normal_inward=True)
        disc = PlacedDisc(tet, face, p, area(m, p), g_dot(m, p))
        out.extend([disc] * weights[k])
    return out
