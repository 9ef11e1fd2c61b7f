r"""
Ideal triangulations of oriented punctured surfaces and elementary moves.

Every triangle has vertices ``0, 1, 2`` in counterclockwise order and side
``s`` is the side opposite vertex ``s``, running from vertex ``s+1`` to
vertex ``s+2`` (mod 3).  All sides are glued in pairs and gluings respect
orientation, so a gluing is determined by its partner ``(triangle, side)``:
vertex ``s+1`` of one side meets vertex ``t+2`` of the other.

Text block::

    surf 1
    tris 2
    tri 0: 1 02 | 1 10 | 1 21
    tri 1: 0 10 | 0 21 | 0 02

where each ``T PP`` names the partner triangle and the images of the side's
endpoints (vertex ``s+1`` then ``s+2``).

Punctured-torus words
---------------------
The base triangulation of the once-punctured torus is developed in the plane
with side vectors ``(0,1), (-1,-1), (1,0)`` on triangle 0 and ``(-1,0),
(0,-1), (1,1)`` on triangle 1.  The letters act by

.. math::

    R = \begin{pmatrix} 1 & 1 \\ 0 & 1 \end{pmatrix}, \qquad
    L = \begin{pmatrix} 1 & 0 \\ 1 & 1 \end{pmatrix}

and a word ``w_1 ... w_n`` is realised by the monodromy ``M(w_1)...M(w_n)``.
If ``P`` is the product of the letters read so far, letter ``R`` flips the
edge with slope ``P(0,1)`` and letter ``L`` flips the edge with slope
``P(1,0)``.  The closing map sends the final triangulation back to the base
through the inverse monodromy, matching signed side vectors exactly.
"""
from collections import deque
from dataclasses import dataclass


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceIdealTri:
    """``partners[i][s] = (j, t)``: side ``s`` of triangle ``i`` is glued to side ``t`` of ``j``."""
    partners: tuple

    def __post_init__(self):
        pr = tuple(tuple((int(j), int(t)) for j, t in row) for row in self.partners)
        object.__setattr__(self, "partners", pr)
        n = len(pr)
        if n == 0:
            raise SurfaceError("a surface triangulation needs at least one triangle")
        for i, row in enumerate(pr):
            if len(row) != 3:
                raise SurfaceError("triangle {} must have 3 sides".format(i))
            for s, (j, t) in enumerate(row):
                if not (0 <= j < n and 0 <= t < 3):
                    raise SurfaceError("side {} of triangle {} glued out of range".format(s, i))
                if (j, t) == (i, s):
                    raise SurfaceError("side {} of triangle {} glued to itself".format(s, i))
                if pr[j][t] != (i, s):
                    raise SurfaceError("side gluing at triangle {} side {} is not an involution"
                                       .format(i, s))

    @property
    def triangle_count(self):
        return len(self.partners)

    def edges(self):
        """Edges as ``((i, s), (j, t))`` with the first side the smaller, sorted."""
        out = []
        for i, row in enumerate(self.partners):
            for s, other in enumerate(row):
                if (i, s) < other:
                    out.append(((i, s), other))
        return out

    def edge_index(self, side):
        for k, (x, y) in enumerate(self.edges()):
            if side in (x, y):
                return k
        raise KeyError(side)

    def vertex_count(self):
        """Number of punctures (vertex classes of the triangulation)."""
        parent = {(i, v): (i, v) for i in range(self.triangle_count) for v in range(3)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, row in enumerate(self.partners):
            for s, (j, t) in enumerate(row):
                for a, b in (((s + 1) % 3, (t + 2) % 3), ((s + 2) % 3, (t + 1) % 3)):
                    ra, rb = find((i, a)), find((j, b))
                    if ra != rb:
                        parent[ra] = rb
        return len({find(x) for x in parent})

    def euler_char(self):
        """Euler characteristic of the punctured surface (``F - E``)."""
        return self.triangle_count - len(self.edges())

    def is_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j, _ in self.partners[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.triangle_count


@dataclass(frozen=True)
class FlipSequence:
    """
    Edge indices to flip (each relative to the current triangulation) and an
    optional closing map ``closing[i] = (base_triangle, rotation)`` sending
    vertex ``v`` of final triangle ``i`` to vertex ``v + rotation`` of
    ``base_triangle``.
    """
    flips: tuple
    closing: tuple = None

    def __len__(self):
        return len(self.flips)


def triangular_number(euler_char, boundary_arc_count=0):
    """Number of ideal triangles in any ideal triangulation (``-2 chi + arcs``)."""
    if boundary_arc_count < 0:
        raise ValueError("boundary_arc_count must be non-negative")
    return -2 * euler_char + boundary_arc_count


def punctured_torus():
    """The base two-triangle triangulation of the once-punctured torus."""
    return SurfaceIdealTri((((1, 1), (1, 2), (1, 0)), ((0, 2), (0, 0), (0, 1))))


def punctured_surface(genus, punctures):
    """
    A connected triangulation of the surface of given genus with the given
    number of punctures (a fan on the standard polygon, then subdivision).
    """
    if punctures < 1:
        raise SurfaceError("need at least one puncture")
    chi = 2 - 2 * genus - punctures
    if triangular_number(chi) <= 0:
        raise SurfaceError("surface admits no ideal triangulation (t <= 0)")
    # Start from a polygon with sides identified; sphere case uses a doubled
    # triangle.  We build by gluing a strip of triangles into a closed cycle.
    if genus == 0:
        # Sphere with n punctures: double of an (n)-gon fan triangulated from
        # vertex 0, giving 2(n-2) triangles.
        n = punctures
        fan = n - 2
        partners = [[None] * 3 for _ in range(2 * fan)]
        # top triangle k: vertices (0, k+1, k+2); bottom mirrored with reversed order
        for k in range(fan):
            top, bot = k, fan + k
            # top vertices (0, k+1, k+2): side 0 is the outer edge k+1..k+2
            # bottom vertices (0, k+2, k+1)
            partners[top][0] = (bot, 0)
            partners[bot][0] = (top, 0)
            if k == 0:
                partners[top][2] = (bot, 1)   # edge 0..1
                partners[bot][1] = (top, 2)
            else:
                partners[top][2] = (top - 1, 1)
                partners[top - 1][1] = (top, 2)
                partners[bot][1] = (bot - 1, 2)
                partners[bot - 1][2] = (bot, 1)
            if k == fan - 1:
                partners[top][1] = (bot, 2)   # edge 0..n-1
                partners[bot][2] = (top, 1)
        return SurfaceIdealTri(tuple(tuple(r) for r in partners))
    # genus >= 1: start from the punctured torus / genus-g one-vertex
    # triangulation and add punctures by splitting triangles.
    surf = _one_vertex_surface(genus)
    for _ in range(punctures - 1):
        surf = _split_triangle(surf, 0)
    return surf


def _one_vertex_surface(genus):
    """One-vertex triangulation of the once-punctured genus ``g`` surface."""
    if genus == 1:
        return punctured_torus()
    # standard 4g-gon a1 b1 a1^-1 b1^-1 ... fanned from vertex 0
    m = 4 * genus
    labels = []
    for g in range(genus):
        a, b = 2 * g, 2 * g + 1
        labels += [(a, 1), (b, 1), (a, -1), (b, -1)]
    fan = m - 2
    partners = [[None] * 3 for _ in range(fan)]
    # triangle k: vertices (0, k+1, k+2); polygon side p runs from vertex p to p+1
    # polygon side p belongs to triangle: p=0 -> tri 0 side 2; p=m-1 -> tri fan-1
    # side 1; otherwise tri p-1 side 0.
    def side_of(p):
        if p == 0:
            return (0, 2)
        if p == m - 1:
            return (fan - 1, 1)
        return (p - 1, 0)

    for k in range(fan - 1):
        partners[k][1] = (k + 1, 2)
        partners[k + 1][2] = (k, 1)
    by_label = {}
    for p, (lab, _) in enumerate(labels):
        by_label.setdefault(lab, []).append(p)
    for lab, (p, q) in by_label.items():
        x, y = side_of(p), side_of(q)
        partners[x[0]][x[1]] = y
        partners[y[0]][y[1]] = x
    return SurfaceIdealTri(tuple(tuple(r) for r in partners))


def _split_triangle(surf, i):
    """Add a puncture inside triangle ``i`` (three triangles replace one)."""
    n = surf.triangle_count
    new = (i, n, n + 1)
    outer = surf.partners[i]
    partners = [list(r) for r in surf.partners] + [[None] * 3, [None] * 3]
    # sub-triangle r is (centre, old r+1, old r+2); its side 0 is old side r
    for r in range(3):
        me = new[r]
        j, t = outer[r]
        if j == i:
            j, t = new[t], 0
        else:
            partners[j][t] = (me, 0)
        partners[me][0] = (j, t)
        nxt = new[(r + 1) % 3]
        partners[me][1] = (nxt, 2)
        partners[nxt][2] = (me, 1)
    return SurfaceIdealTri(tuple(tuple(r) for r in partners))


# ---------------------------------------------------------------------------
# flips


def flip_square(tri, edge):
    """
    Square data for an edge: ``(i, s, j, t)`` with the edge being side ``s``
    of ``i`` and side ``t`` of ``j``.
    """
    (i, s), (j, t) = tri.edges()[edge]
    if i == j:
        raise SurfaceError("edge {} is bounded by one triangle on both sides".format(edge))
    return i, s, j, t


def apply_flip(tri, edge):
    """
    Replace edge ``edge`` by the other diagonal of its square.

    With apexes ``P = i:s`` and ``Q = j:t`` and ``A = i:s+1``, ``B = i:s+2``,
    the new triangle ``i`` is ``(P, A, Q)`` and the new ``j`` is
    ``(Q, B, P)``; the new edge is side 1 of both.
    """
    i, s, j, t = flip_square(tri, edge)
    old = tri.partners
    # outer sides of the square, and where they land
    moves = {
        (i, (s + 2) % 3): (i, 2),   # P -> A
        (j, (t + 1) % 3): (i, 0),   # A -> Q
        (j, (t + 2) % 3): (j, 2),   # Q -> B
        (i, (s + 1) % 3): (j, 0),   # B -> P
    }
    partners = [list(r) for r in old]
    for src, dst in moves.items():
        other = old[src[0]][src[1]]
        other = moves.get(other, other)
        partners[dst[0]][dst[1]] = other
        if other[0] not in (i, j):
            partners[other[0]][other[1]] = dst
    partners[i][1] = (j, 1)
    partners[j][1] = (i, 1)
    return SurfaceIdealTri(tuple(tuple(r) for r in partners))


def flipped_edge(tri, i):
    """Edge index of the diagonal that :func:`apply_flip` leaves on side 1 of ``i``."""
    return tri.edge_index((i, 1))


# ---------------------------------------------------------------------------
# relabelling and isomorphism


def _relabel_from(tri, start, rot):
    """
    Breadth-first relabelling from ``start`` with rotation ``rot``.

    Returns ``(code, labels)`` where ``labels[old] = (new, r)`` means old
    vertex ``(k + r) % 3`` becomes new vertex ``k``.
    """
    labels = {start: (0, rot)}
    order = [start]
    q = deque([start])
    code = []
    while q:
        old = q.popleft()
        _, r = labels[old]
        for k in range(3):
            j, t = tri.partners[old][(k + r) % 3]
            if j not in labels:
                labels[j] = (len(order), t)
                order.append(j)
                q.append(j)
            nj, rj = labels[j]
            code.append((nj, (t - rj) % 3))
    if len(order) != tri.triangle_count:
        raise SurfaceError("surface triangulation is not connected")
    return tuple(code), labels


def canonical_form(tri):
    """Lexicographically least relabelled gluing code, with its labelling."""
    best = None
    for start in range(tri.triangle_count):
        for rot in range(3):
            code, labels = _relabel_from(tri, start, rot)
            if best is None or code < best[0]:
                best = (code, labels)
    return best


def canonical(tri):
    """The relabelled triangulation in canonical form."""
    code, _ = canonical_form(tri)
    n = tri.triangle_count
    return SurfaceIdealTri(tuple(tuple(code[3 * i:3 * i + 3]) for i in range(n)))


def isomorphism(a, b):
    """
    An orientation-preserving isomorphism ``a -> b`` as a list of
    ``(triangle of b, rotation)``, or ``None``.
    """
    if a.triangle_count != b.triangle_count:
        return None
    code_b, labels_b = canonical_form(b)
    inv_b = {new: (old, r) for old, (new, r) in labels_b.items()}
    for start in range(a.triangle_count):
        for rot in range(3):
            code_a, labels_a = _relabel_from(a, start, rot)
            if code_a == code_b:
                out = []
                for i in range(a.triangle_count):
                    new, ra = labels_a[i]
                    old_b, rb = inv_b[new]
                    out.append((old_b, (rb - ra) % 3))
                return out
    return None


def check_isomorphism(a, b, mapping):
    """True if ``mapping`` (as from :func:`isomorphism`) carries gluings of ``a`` to ``b``."""
    if len(mapping) != a.triangle_count or len({m[0] for m in mapping}) != a.triangle_count:
        return False
    for i in range(a.triangle_count):
        bi, r = mapping[i]
        for s in range(3):
            j, t = a.partners[i][s]
            bj, rj = mapping[j]
            if b.partners[bi][(s + r) % 3] != (bj, (t + rj) % 3):
                return False
    return True


def flip_path_bfs(a, b, max_depth, up_to_relabel=True):
    """
    Shortest flip sequence from ``a`` to (a relabelling of) ``b``.

    Triangulations are identified up to orientation-preserving relabelling
    when ``up_to_relabel`` is true, otherwise only when their gluing tables
    agree exactly.  Neighbours are expanded in edge-index order.  Returns a
    :class:`FlipSequence` whose closing map is the isomorphism onto ``b``, or
    ``None`` if ``b`` is further than ``max_depth`` flips away.
    """
    if a.triangle_count != b.triangle_count:
        return None
    key = (lambda x: canonical_form(x)[0]) if up_to_relabel else (lambda x: x.partners)
    target = key(b)
    seen = {key(a): None}
    q = deque([(a, ())])
    while q:
        cur, path = q.popleft()
        if key(cur) == target:
            if up_to_relabel:
                closing = tuple(isomorphism(cur, b))
            else:
                closing = tuple((i, 0) for i in range(cur.triangle_count))
            return FlipSequence(tuple(path), closing)
        if len(path) >= max_depth:
            continue
        for e in range(len(cur.edges())):
            try:
                nxt = apply_flip(cur, e)
            except SurfaceError:
                continue
            k = key(nxt)
            if k not in seen:
                seen[k] = key(cur)
                q.append((nxt, path + (e,)))
    return None


def flip_ball(base, radius, up_to_relabel=True):
    """
    Explore the flip graph around ``base``.

    Returns ``(nodes, adjacency)`` with nodes keyed as in
    :func:`flip_path_bfs` and ``adjacency[k]`` the set of neighbouring keys
    (restricted to the ball).
    """
    key = (lambda x: canonical_form(x)[0]) if up_to_relabel else (lambda x: x.partners)
    k0 = key(base)
    nodes = {k0: base}
    depth = {k0: 0}
    adj = {k0: set()}
    q = deque([base])
    while q:
        cur = q.popleft()
        kc = key(cur)
        if depth[kc] >= radius:
            continue
        for e in range(len(cur.edges())):
            try:
                nxt = apply_flip(cur, e)
            except SurfaceError:
                continue
            kn = key(nxt)
            if kn not in nodes:
                nodes[kn] = nxt
                depth[kn] = depth[kc] + 1
                adj[kn] = set()
                q.append(nxt)
            adj[kc].add(kn)
            adj[kn].add(kc)
    return nodes, adj


# ---------------------------------------------------------------------------
# punctured torus words

_BASE_VECTORS = (((0, 1), (-1, -1), (1, 0)), ((-1, 0), (0, -1), (1, 1)))
_LETTERS = {"R": ((1, 1), (0, 1)), "L": ((1, 0), (1, 1))}


def _matmul(m, n):
    return tuple(tuple(sum(m[r][k] * n[k][c] for k in range(2)) for c in range(2))
                 for r in range(2))


def _apply(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _flip_vectors(tri, vectors, edge):
    """Side vectors after :func:`apply_flip` (same square conventions)."""
    i, s, j, t = flip_square(tri, edge)
    x1 = vectors[i][(s + 2) % 3]
    x2 = vectors[j][(t + 1) % 3]
    x3 = vectors[j][(t + 2) % 3]
    x4 = vectors[i][(s + 1) % 3]
    vec = [list(r) for r in vectors]
    qp = (-(x1[0] + x2[0]), -(x1[1] + x2[1]))
    vec[i] = [x2, qp, x1]
    vec[j] = [x4, (-qp[0], -qp[1]), x3]
    return tuple(tuple(r) for r in vec)


def _slope_key(vectors):
    out = set()
    for row in vectors:
        for x, y in row:
            out.add((x, y) if (x, y) > (0, 0) else (-x, -y))
    return frozenset(out)


def ptorus_marked_ball(radius):
    """
    Flip graph ball around the base punctured-torus triangulation, with
    triangulations told apart by the slopes of their edges (so isotopic
    triangulations coincide and the result is a ball in a tree).

    Returns ``(nodes, adjacency)`` keyed by frozensets of three primitive
    slopes; ``nodes[k]`` is ``(triangulation, side vectors)``.
    """
    base = punctured_torus()
    k0 = _slope_key(_BASE_VECTORS)
    nodes = {k0: (base, _BASE_VECTORS)}
    depth = {k0: 0}
    adj = {k0: set()}
    q = deque([k0])
    while q:
        kc = q.popleft()
        if depth[kc] >= radius:
            continue
        tri, vec = nodes[kc]
        for e in range(len(tri.edges())):
            nvec = _flip_vectors(tri, vec, e)
            kn = _slope_key(nvec)
            if kn not in nodes:
                nodes[kn] = (apply_flip(tri, e), nvec)
                depth[kn] = depth[kc] + 1
                adj[kn] = set()
                q.append(kn)
            adj[kc].add(kn)
            adj.setdefault(kn, set()).add(kc)
    return nodes, adj


def ptorus_word_to_flips(word):
    """
    Base punctured-torus triangulation and a flip sequence realising the
    monodromy of an ``R``/``L`` word, with its closing map.

    Returns ``(base, FlipSequence, monodromy matrix)``.
    """
    word = word.strip().upper()
    if not word:
        raise SurfaceError("empty word")
    if any(c not in _LETTERS for c in word):
        raise SurfaceError("word must use only the letters R and L")
    tri = base = punctured_torus()
    vectors = _BASE_VECTORS
    prod = ((1, 0), (0, 1))
    flips = []
    for letter in word:
        slope = _apply(prod, (0, 1) if letter == "R" else (1, 0))
        neg = (-slope[0], -slope[1])
        edge = None
        for k, ((i, s), _) in enumerate(tri.edges()):
            if vectors[i][s] in (slope, neg):
                edge = k
                break
        assert edge is not None, "slope bookkeeping lost an edge"
        flips.append(edge)
        vectors = _flip_vectors(tri, vectors, edge)
        tri = apply_flip(tri, edge)
        prod = _matmul(prod, _LETTERS[letter])
    closing = _closing_by_vectors(tri, vectors, base, _BASE_VECTORS, prod)
    return base, FlipSequence(tuple(flips), closing), prod


def _closing_by_vectors(final, vectors, base, base_vectors, mono):
    for b0 in range(base.triangle_count):
        for r in range(3):
            if all(vectors[0][s] == _apply(mono, base_vectors[b0][(s + r) % 3])
                   for s in range(3)):
                mapping = [None] * final.triangle_count
                mapping[0] = (b0, r)
                # propagate along gluings
                stack = [0]
                while stack:
                    i = stack.pop()
                    bi, ri = mapping[i]
                    for s in range(3):
                        j, t = final.partners[i][s]
                        bj, tb = base.partners[bi][(s + ri) % 3]
                        rj = (tb - t) % 3
                        if mapping[j] is None:
                            mapping[j] = (bj, rj)
                            stack.append(j)
                mapping = tuple(mapping)
                ok = check_isomorphism(final, base, mapping) and all(
                    vectors[i][s] == _apply(mono, base_vectors[bi][(s + ri) % 3])
                    for i, (bi, ri) in enumerate(mapping) for s in range(3))
                if ok:
                    return mapping
    raise SurfaceError("no closing isomorphism matches the monodromy")


def apply_flips(tri, flips):
    for e in flips:
        tri = apply_flip(tri, e)
    return tri


# ---------------------------------------------------------------------------
# text format


def serialize_surface(tri):
    lines = ["surf 1", "tris {}".format(tri.triangle_count)]
    for i, row in enumerate(tri.partners):
        cells = ["{} {}{}".format(j, (t + 2) % 3, (t + 1) % 3) for j, t in row]
        lines.append("tri {}: {}".format(i, " | ".join(cells)))
    return "\n".join(lines) + "\n"


def parse_surface(text):
    n = None
    rows = None
    header = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header:
            if line != "surf 1":
                raise SurfaceError("line {}: expected header 'surf 1'".format(lineno))
            header = True
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "tris" or not parts[1].isdigit():
                raise SurfaceError("line {}: expected 'tris N'".format(lineno))
            n = int(parts[1])
            rows = [None] * n
            continue
        head, sep, body = line.partition(":")
        hp = head.split()
        if not sep or len(hp) != 2 or hp[0] != "tri" or not hp[1].isdigit():
            raise SurfaceError("line {}: unrecognised line {!r}".format(lineno, line))
        i = int(hp[1])
        cells = [c.split() for c in body.split("|")]
        if i >= n or len(cells) != 3 or any(len(c) != 2 for c in cells):
            raise SurfaceError("line {}: expected three 'T PP' gluings".format(lineno))
        row = []
        for target, token in cells:
            if (not target.isdigit() or len(token) != 2 or not token.isdigit()
                    or len(set(token)) != 2 or any(c not in "012" for c in token)):
                raise SurfaceError("line {}: bad gluing {} {}".format(lineno, target, token))
            t = 3 - int(token[0]) - int(token[1])
            if token != "{}{}".format((t + 2) % 3, (t + 1) % 3):
                raise SurfaceError("line {}: orientation-reversing side map {}".format(
                    lineno, token))
            row.append((int(target), t))
        rows[i] = tuple(row)
    if n is None or any(r is None for r in rows):
        raise SurfaceError("incomplete surface block")
    return SurfaceIdealTri(tuple(rows))
