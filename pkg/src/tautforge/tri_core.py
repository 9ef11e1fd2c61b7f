r"""
Ideal triangulations of 3-manifolds: gluing tables, edge classes, cusps.

Conventions
-----------
Face ``f`` of a tetrahedron is the face opposite vertex ``f``.  A gluing of
face ``f`` of tetrahedron ``t`` is a pair ``(t2, perm)`` where ``perm`` is a
permutation of ``(0, 1, 2, 3)`` sending vertex ``v`` of ``t`` to vertex
``perm[v]`` of ``t2``; the target face is ``perm[f]``.

Text format (``tautri 1``)::

    tautri 1
    tets 2
    tet 0: 1 1302 | 1 2031 | 1 2310 | 1 3120
    tet 1: ...
    coor 0: + - + -

``coor`` lines are optional; ``+`` means the transverse orientation points
out of the tetrahedron across that face.  Lines starting with ``#`` are
ignored.
"""
import itertools
import json
from dataclasses import dataclass, field

EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {e: i for i, e in enumerate(EDGES)}
EDGE_INDEX.update({(b, a): i for (a, b), i in list(EDGE_INDEX.items())})

IDENTITY = (0, 1, 2, 3)


class TriangulationError(ValueError):
    """Invalid triangulation data (optionally tied to an input line)."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {}: {}".format(lineno, message)
        super().__init__(message)


# ---------------------------------------------------------------------------
# permutations of {0,1,2,3}


def perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_compose(p, q):
    """Return ``p o q`` (apply ``q`` first)."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_sign(p):
    sign = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            sign = -sign
    return sign


def parse_perm(token, size=4):
    if len(token) != size or not token.isdigit():
        raise ValueError("bad permutation token {!r}".format(token))
    p = tuple(int(c) for c in token)
    if sorted(p) != list(range(size)):
        raise ValueError("{!r} is not a permutation".format(token))
    return p


def edge_complement(a, b):
    """The two vertices not in edge ``{a, b}``, in increasing order."""
    return tuple(v for v in range(4) if v != a and v != b)


# ---------------------------------------------------------------------------
# data model


@dataclass(frozen=True)
class IdealTriangulation:
    """
    Tetrahedra with faces glued in pairs.

    ``gluings[t][f] == (t2, perm)``.  Instances are immutable; construction
    checks that the gluing relation is a fixed-point-free involution and that
    every permutation maps face ``f`` onto face ``perm[f]``.
    """
    gluings: tuple

    def __post_init__(self):
        gl = tuple(tuple((int(t2), tuple(p)) for t2, p in row) for row in self.gluings)
        object.__setattr__(self, "gluings", gl)
        n = len(gl)
        if n == 0:
            raise TriangulationError("a triangulation needs at least one tetrahedron")
        for t, row in enumerate(gl):
            if len(row) != 4:
                raise TriangulationError("tetrahedron {} must have 4 faces".format(t))
            for f, (t2, p) in enumerate(row):
                if not 0 <= t2 < n:
                    raise TriangulationError(
                        "face {} of tet {} glued to missing tet {}".format(f, t, t2))
                if sorted(p) != [0, 1, 2, 3]:
                    raise TriangulationError(
                        "gluing of face {} of tet {} is not a permutation".format(f, t))
                if (t2, p[f]) == (t, f):
                    raise TriangulationError("face {} of tet {} glued to itself".format(f, t))
                back_t, back_p = gl[t2][p[f]]
                if back_t != t or back_p != perm_inverse(p):
                    raise TriangulationError(
                        "gluing of face {} of tet {} is not an involution".format(f, t))

    @property
    def tet_count(self):
        return len(self.gluings)

    def glue(self, t, f):
        return self.gluings[t][f]

    def face_partner(self, t, f):
        t2, p = self.gluings[t][f]
        return t2, p[f]


@dataclass(frozen=True)
class Corner:
    """
    One tetrahedron edge in the cyclic order around an edge class.

    The oriented edge runs ``a -> b``; the walk enters through face ``c`` and
    leaves through face ``d`` (faces opposite those vertices).
    """
    tet: int
    a: int
    b: int
    c: int
    d: int

    @property
    def edge(self):
        return EDGE_INDEX[(self.a, self.b)]


@dataclass(frozen=True)
class EdgeClass:
    index: int
    corners: tuple

    @property
    def degree(self):
        return len(self.corners)


@dataclass(frozen=True)
class CuspTriangulation:
    """
    Triangulated link of one ideal vertex class.

    ``triangles`` lists ``(tet, vertex)`` pairs; ``corner_vertex`` maps a
    triangle corner ``(tet, vertex, other)`` (the end at ``vertex`` of edge
    ``{vertex, other}``) to a link vertex id local to this cusp.
    """
    index: int
    triangles: tuple
    corner_vertex: dict = field(hash=False, compare=False)
    num_vertices: int = 0
    num_edges: int = 0

    @property
    def num_triangles(self):
        return len(self.triangles)

    @property
    def euler_char(self):
        return self.num_vertices - self.num_edges + self.num_triangles

    @property
    def is_torus(self):
        return self.euler_char == 0


@dataclass(frozen=True)
class ValidationReport:
    tet_count: int
    orientable: bool
    connected: bool
    edge_degrees: tuple
    cusp_euler_chars: tuple
    valid_edges: bool = True
    problems: tuple = ()

    @property
    def num_edges(self):
        return len(self.edge_degrees)

    @property
    def num_cusps(self):
        return len(self.cusp_euler_chars)

    @property
    def all_cusps_tori(self):
        return bool(self.cusp_euler_chars) and all(x == 0 for x in self.cusp_euler_chars)

    def as_dict(self):
        return {
            "tets": self.tet_count,
            "orientable": self.orientable,
            "connected": self.connected,
            "valid_edges": self.valid_edges,
            "edge_degrees": list(self.edge_degrees),
            "cusp_euler_chars": list(self.cusp_euler_chars),
            "all_cusps_tori": self.all_cusps_tori,
            "problems": list(self.problems),
        }


# ---------------------------------------------------------------------------
# combinatorics


def face_classes(tri):
    """
    Pairs of glued faces, as ``((t, f), (t2, f2))`` with the first member the
    lexicographically smaller one, ordered by that member.
    """
    out = []
    for t in range(tri.tet_count):
        for f in range(4):
            other = tri.face_partner(t, f)
            if (t, f) < other:
                out.append(((t, f), other))
    return out


def face_class_index(tri):
    """Map ``(t, f) -> face class index``."""
    index = {}
    for k, (x, y) in enumerate(face_classes(tri)):
        index[x] = k
        index[y] = k
    return index


def orientation(tri):
    """
    Orientation signs per tetrahedron making every gluing orientation
    reversing, or ``None`` if no such choice exists.
    """
    signs = [0] * tri.tet_count
    for start in range(tri.tet_count):
        if signs[start]:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            t = stack.pop()
            for f in range(4):
                t2, p = tri.glue(t, f)
                want = signs[t] if perm_sign(p) < 0 else -signs[t]
                if signs[t2] == 0:
                    signs[t2] = want
                    stack.append(t2)
                elif signs[t2] != want:
                    return None
    return tuple(signs)


def is_orientable(tri):
    return orientation(tri) is not None


def components(tri):
    """Connected components as sorted tuples of tetrahedron indices."""
    seen = [False] * tri.tet_count
    comps = []
    for start in range(tri.tet_count):
        if seen[start]:
            continue
        seen[start] = True
        comp, stack = [], [start]
        while stack:
            t = stack.pop()
            comp.append(t)
            for f in range(4):
                t2 = tri.glue(t, f)[0]
                if not seen[t2]:
                    seen[t2] = True
                    stack.append(t2)
        comps.append(tuple(sorted(comp)))
    return comps


def _next_corner(tri, corner):
    t2, p = tri.glue(corner.tet, corner.d)
    return Corner(t2, p[corner.a], p[corner.b], p[corner.d], p[corner.c])


def edge_classes(tri):
    """
    Edge classes with their cyclic corner order.

    Raises ``TriangulationError`` when an edge is identified with itself in
    reverse (the cyclic order is then inconsistent).
    """
    seen = {}
    classes = []
    for t in range(tri.tet_count):
        for a, b in EDGES:
            if (t, a, b) in seen:
                continue
            c, d = edge_complement(a, b)
            start = Corner(t, a, b, c, d)
            corners = [start]
            seen[(t, a, b)] = len(classes)
            cur = _next_corner(tri, start)
            while cur != start:
                key = (cur.tet,) + tuple(sorted((cur.a, cur.b)))
                if key in seen:
                    raise TriangulationError(
                        "edge class through tet {} edge {}{} has an inconsistent cyclic order"
                        .format(t, a, b))
                seen[key] = len(classes)
                corners.append(cur)
                cur = _next_corner(tri, cur)
            classes.append(EdgeClass(len(classes), tuple(corners)))
    return classes


def edge_class_of(classes):
    """Map ``(tet, edge index) -> (class index, position)``."""
    out = {}
    for ec in classes:
        for pos, cn in enumerate(ec.corners):
            out[(cn.tet, cn.edge)] = (ec.index, pos)
    return out


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def cusp_triangulations(tri, classes=None):
    """
    One triangulated closed surface per ideal vertex class.

    Link vertices are ends of edge classes, so this needs consistent edge
    classes (it raises like :func:`edge_classes` otherwise).
    """
    if classes is None:
        classes = edge_classes(tri)
    corners = [(t, v) for t in range(tri.tet_count) for v in range(4)]
    uf = _UnionFind(corners)
    for t in range(tri.tet_count):
        for f in range(4):
            t2, p = tri.glue(t, f)
            for v in range(4):
                if v != f:
                    uf.union((t, v), (t2, p[v]))

    # link vertices: (tet, vertex, other) -> global end id
    ends = {}
    n_ends = 0
    for ec in classes:
        for cn in ec.corners:
            ends[(cn.tet, cn.a, cn.b)] = n_ends
            ends[(cn.tet, cn.b, cn.a)] = n_ends + 1
        n_ends += 2

    roots = sorted({uf.find(x) for x in corners})
    cusps = []
    for k, root in enumerate(roots):
        tris = tuple(x for x in corners if uf.find(x) == root)
        local = {}
        corner_vertex = {}
        for t, v in tris:
            for w in range(4):
                if w == v:
                    continue
                gid = ends[(t, v, w)]
                corner_vertex[(t, v, w)] = local.setdefault(gid, len(local))
        cusps.append(CuspTriangulation(
            index=k,
            triangles=tris,
            corner_vertex=corner_vertex,
            num_vertices=len(local),
            num_edges=3 * len(tris) // 2,
        ))
    return cusps


def validate(tri):
    """Orientability, connectivity, edge and cusp census in one report."""
    problems = []
    orientable = is_orientable(tri)
    if not orientable:
        problems.append("not orientable")
    connected = len(components(tri)) == 1
    if not connected:
        problems.append("not connected")
    try:
        classes = edge_classes(tri)
    except TriangulationError as exc:
        problems.append(str(exc))
        return ValidationReport(tri.tet_count, orientable, connected, (), (),
                                valid_edges=False, problems=tuple(problems))
    cusps = cusp_triangulations(tri, classes)
    chis = tuple(c.euler_char for c in cusps)
    if any(x != 0 for x in chis):
        problems.append("some cusp is not a torus")
    return ValidationReport(
        tet_count=tri.tet_count,
        orientable=orientable,
        connected=connected,
        edge_degrees=tuple(ec.degree for ec in classes),
        cusp_euler_chars=chis,
        problems=tuple(problems),
    )


def disjoint_union(first, second):
    n = first.tet_count
    rows = list(first.gluings)
    rows += [tuple((t + n, p) for t, p in row) for row in second.gluings]
    return IdealTriangulation(tuple(rows))


# ---------------------------------------------------------------------------
# serialization


def _sign_char(out):
    return "+" if out else "-"


def serialize(tri, coor_flags=None):
    """
    Canonical v1 text.  ``coor_flags[t][f]`` is true when the transverse
    orientation points out of tetrahedron ``t`` across face ``f``.
    """
    lines = ["tautri 1", "tets {}".format(tri.tet_count)]
    for t, row in enumerate(tri.gluings):
        cells = ["{} {}".format(t2, "".join(map(str, p))) for t2, p in row]
        lines.append("tet {}: {}".format(t, " | ".join(cells)))
    if coor_flags is not None:
        for t, flags in enumerate(coor_flags):
            lines.append("coor {}: {}".format(t, " ".join(_sign_char(x) for x in flags)))
    return "\n".join(lines) + "\n"


def parse_document(text):
    """
    Parse v1 text into ``(triangulation, coor_flags or None)``.

    Errors carry the offending line number.
    """
    rows = None
    coor = None
    header_seen = False
    n = None
    tet_line = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != "tautri 1":
                raise TriangulationError("expected header 'tautri 1'", lineno)
            header_seen = True
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "tets" or not parts[1].isdigit():
                raise TriangulationError("expected 'tets N'", lineno)
            n = int(parts[1])
            if n == 0:
                raise TriangulationError("tets must be positive", lineno)
            rows = [None] * n
            continue
        head, sep, body = line.partition(":")
        kind_idx = head.split()
        if not sep or len(kind_idx) != 2 or not kind_idx[1].isdigit():
            raise TriangulationError("unrecognised line {!r}".format(line), lineno)
        kind, idx = kind_idx[0], int(kind_idx[1])
        if idx >= n:
            raise TriangulationError("tet index {} out of range".format(idx), lineno)
        if kind == "tet":
            cells = [c.split() for c in body.split("|")]
            if len(cells) != 4 or any(len(c) != 2 for c in cells):
                raise TriangulationError("expected four 'T PPPP' gluings", lineno)
            row = []
            for target, token in cells:
                if not target.isdigit():
                    raise TriangulationError("bad target {!r}".format(target), lineno)
                if int(target) >= n:
                    raise TriangulationError("dangling gluing target {}".format(target), lineno)
                try:
                    row.append((int(target), parse_perm(token)))
                except ValueError as exc:
                    raise TriangulationError(str(exc), lineno) from None
            if rows[idx] is not None:
                raise TriangulationError("tet {} defined twice".format(idx), lineno)
            rows[idx] = tuple(row)
            tet_line[idx] = lineno
        elif kind == "coor":
            signs = body.split()
            if len(signs) != 4 or any(s not in "+-" for s in signs):
                raise TriangulationError("expected four signs from {+,-}", lineno)
            if coor is None:
                coor = [None] * n
            coor[idx] = tuple(s == "+" for s in signs)
        else:
            raise TriangulationError("unknown record {!r}".format(kind), lineno)
    if n is None:
        raise TriangulationError("missing header or tets line")
    missing = [i for i, r in enumerate(rows) if r is None]
    if missing:
        raise TriangulationError("tet {} has no gluing line".format(missing[0]))
    if coor is not None and any(c is None for c in coor):
        raise TriangulationError("coor block incomplete")
    # involution check here so the error can point at a line
    for t, row in enumerate(rows):
        for f, (t2, p) in enumerate(row):
            back_t, back_p = rows[t2][p[f]]
            if (t2, p[f]) == (t, f) or back_t != t or back_p != perm_inverse(p):
                raise TriangulationError(
                    "gluing of face {} of tet {} is not an involution".format(f, t),
                    tet_line[t])
    tri = IdealTriangulation(tuple(rows))
    return tri, (tuple(coor) if coor is not None else None)


def parse_triangulation(text):
    return parse_document(text)[0]


def to_json(tri, coor_flags=None):
    doc = {
        "format": "tautri",
        "version": 1,
        "tets": [[{"tet": t2, "perm": "".join(map(str, p))} for t2, p in row]
                 for row in tri.gluings],
    }
    if coor_flags is not None:
        doc["coor"] = [[_sign_char(x) for x in flags] for flags in coor_flags]
    return json.dumps(doc, sort_keys=True)


def from_json(text):
    doc = json.loads(text)
    if doc.get("format") != "tautri" or doc.get("version") != 1:
        raise TriangulationError("not a tautri v1 JSON document")
    try:
        rows = tuple(tuple((int(g["tet"]), parse_perm(g["perm"])) for g in row)
                     for row in doc["tets"])
    except (KeyError, TypeError, ValueError) as exc:
        raise TriangulationError("bad gluing entry: {}".format(exc)) from None
    coor = doc.get("coor")
    if coor is not None:
        coor = tuple(tuple(s == "+" for s in flags) for flags in coor)
    return IdealTriangulation(rows), coor
