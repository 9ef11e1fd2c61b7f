"""
Surfaces carried by the branched surface of a taut triangulation.

A weight vector assigns a non-negative integer to each face class.  Around an
edge class the two pi corners cut the cyclic sequence of faces into two
sides; the switch equation says both sides carry the same total weight.
"""
from dataclasses import dataclass

from .taut import check_full_taut, corner_angles, dual_cycle
from .tri_core import _UnionFind, edge_classes, face_class_index, face_classes


class CarriedError(ValueError):
    pass


@dataclass(frozen=True)
class Occurrence:
    """
    A face class met around an edge class: the face leaves ``corner`` of the
    edge's cyclic order (through that corner's exit face), and its triangle
    side along the edge is opposite ``side_vertex`` (in the coordinates of the
    face class representative).  ``end_a`` / ``end_b`` are the
    representative's vertices at the two ends of the edge.
    """
    face_class: int
    position: int
    side_vertex: int
    end_a: int
    end_b: int
    forward: bool


@dataclass(frozen=True)
class Switch:
    edge_class: int
    side_a: tuple
    side_b: tuple

    def lhs(self):
        return [o.face_class for o in self.side_a]

    def rhs(self):
        return [o.face_class for o in self.side_b]

    def residual(self, weights):
        return sum(weights[k] for k in self.lhs()) - sum(weights[k] for k in self.rhs())


@dataclass(frozen=True)
class SwitchSystem:
    num_faces: int
    switches: tuple

    def satisfied_by(self, weights):
        return len(weights) == self.num_faces and all(
            s.residual(weights) == 0 for s in self.switches)

    def matrix(self):
        """Rows of integer coefficients, one per edge class."""
        rows = []
        for s in self.switches:
            row = [0] * self.num_faces
            for k in s.lhs():
                row[k] += 1
            for k in s.rhs():
                row[k] -= 1
            rows.append(row)
        return rows


@dataclass(frozen=True)
class SurfaceComponent:
    triangles: int
    euler_char: int
    genus: int
    boundary_curves: int
    boundary_per_cusp: tuple


@dataclass(frozen=True)
class SurfaceReport:
    components: tuple

    @property
    def euler_char(self):
        return sum(c.euler_char for c in self.components)

    def as_dict(self):
        return {"components": [
            {"triangles": c.triangles, "euler_char": c.euler_char, "genus": c.genus,
             "boundary_curves": c.boundary_curves,
             "boundary_per_cusp": list(c.boundary_per_cusp)}
            for c in self.components]}


def _rep_vertex(tri, fcs, index, t, f, v):
    """Vertex ``v`` of face ``f`` of tet ``t`` in face-class representative coordinates."""
    k = index[(t, f)]
    rep = fcs[k][0]
    if rep == (t, f):
        return v
    return tri.glue(t, f)[1][v]


def _occurrences(tri, classes):
    fcs = face_classes(tri)
    index = face_class_index(tri)
    out = []
    for ec in classes:
        occ = []
        for pos, cn in enumerate(ec.corners):
            t, f = cn.tet, cn.d
            occ.append(dict(
                face_class=index[(t, f)],
                side_vertex=_rep_vertex(tri, fcs, index, t, f, cn.c),
                end_a=_rep_vertex(tri, fcs, index, t, f, cn.a),
                end_b=_rep_vertex(tri, fcs, index, t, f, cn.b),
                position=pos,
            ))
        out.append(occ)
    return out


def switch_system(tri, coor):
    """
    One switch per edge class.  Faces are numbered so that face ``i`` leaves
    corner ``i``; with pi corners at positions ``p < q`` side A is the faces
    ``p .. q-1`` and side B the rest, both listed bottom to top in the
    coorientation direction.
    """
    classes = edge_classes(tri)
    if not check_full_taut(tri, coor, classes):
        raise CarriedError("coorientation is not taut")
    angles = corner_angles(tri, coor)
    flags = coor.flags(tri)
    occs = _occurrences(tri, classes)
    switches = []
    for ec, occ in zip(classes, occs):
        n = ec.degree
        pis = [pos for pos, cn in enumerate(ec.corners) if angles[cn.tet][cn.edge]]
        p, q = pis
        # face i (leaving corner i) points forward iff it is an out-face of corner i's tet
        fwd = [flags[cn.tet][cn.d] for cn in ec.corners]
        side_a = [p + k for k in range(q - p)]
        side_b = [(q + k) % n for k in range(n - (q - p))]
        # Side A runs forward from the pi corner at p, side B backward from it
        # (faces p, p-1, ...).  Both start at p's pi corner, which is a common
        # extreme, so sheets are stacked from that end; flip if the
        # coorientation points the other way.
        side_b = side_b[::-1]
        if not fwd[side_a[0]]:
            side_a = side_a[::-1]
        if fwd[side_b[0]]:
            side_b = side_b[::-1]
        mk = lambda i: Occurrence(forward=fwd[i], **occ[i])
        switches.append(Switch(ec.index, tuple(mk(i) for i in side_a),
                               tuple(mk(i) for i in side_b)))
    return SwitchSystem(len(face_classes(tri)), tuple(switches))


def enumerate_solutions(system, max_total):
    """
    All non-negative integer solutions with total weight at most
    ``max_total``, in lexicographic order.  Depth-first over face classes;
    a switch is checked as soon as all its faces are assigned, and partial
    sums are pruned against the remaining budget.
    """
    if max_total < 0:
        raise ValueError("max_total must be non-negative")
    n = system.num_faces
    rows = system.matrix()
    last = []
    for row in rows:
        nz = [k for k, c in enumerate(row) if c]
        last.append(max(nz) if nz else -1)
    closes_at = [[] for _ in range(n)]
    always = []
    for r, k in enumerate(last):
        if k < 0:
            always.append(r)
        else:
            closes_at[k].append(r)
    # suffix bounds: how much the still-free variables can move each row
    pos_after = [[0] * (n + 1) for _ in rows]
    neg_after = [[0] * (n + 1) for _ in rows]
    for r, row in enumerate(rows):
        for k in range(n - 1, -1, -1):
            pos_after[r][k] = pos_after[r][k + 1] + max(row[k], 0)
            neg_after[r][k] = neg_after[r][k + 1] + max(-row[k], 0)

    w = [0] * n
    partial = [0] * len(rows)
    out = []

    def feasible(k, budget):
        for r in range(len(rows)):
            if last[r] < k:
                continue
            # free variables k.. can change row r by at most budget * coefficient
            lo = partial[r] - budget * neg_after[r][k]
            hi = partial[r] + budget * pos_after[r][k]
            if lo > 0 or hi < 0:
                return False
        return True

    def recurse(k, budget):
        if k == n:
            out.append(tuple(w))
            return
        for v in range(budget + 1):
            w[k] = v
            for r, row in enumerate(rows):
                partial[r] += row[k] * v
            if all(partial[r] == 0 for r in closes_at[k]) and feasible(k + 1, budget - v):
                recurse(k + 1, budget - v)
            for r, row in enumerate(rows):
                partial[r] -= row[k] * v
        w[k] = 0

    if all(not any(rows[r]) for r in always):
        recurse(0, max_total)
    return out


def euler_char(weights):
    total = sum(weights)
    if total % 2:
        raise CarriedError("odd total weight {} cannot be a carried surface".format(total))
    return -(total // 2)


def pairing(cycle, tri, coor, weights):
    """
    Signed intersection of the dual cycle with the carried surface.

    The surface is transversely oriented by the coorientation; a face counts
    ``+weight`` when the dual edge crosses it in that direction.
    """
    total = 0
    flags = coor.flags(tri)
    for k, ((t, f), (t2, f2)) in enumerate(face_classes(tri)):
        if not weights[k]:
            continue
        src, dst = cycle.edges[k]
        normal_from = t if flags[t][f] else t2
        normal_to = t2 if flags[t][f] else t
        if (src, dst) == (normal_from, normal_to):
            total += weights[k]
        elif (src, dst) == (normal_to, normal_from):
            total -= weights[k]
        else:
            raise CarriedError("dual edge {} does not join the tets of face class {}".format(
                cycle.edges[k], k))
    return total


def reconstruct(tri, coor, weights, system=None):
    """
    Build the carried surface sheet by sheet and report its components.

    Face class ``k`` contributes ``weights[k]`` parallel triangles, numbered
    bottom to top along the coorientation.  At each edge the sheets of side A
    and side B are matched in stacking order.
    """
    if system is None:
        system = switch_system(tri, coor)
    if not system.satisfied_by(weights):
        raise CarriedError("weights do not satisfy the switch equations")
    fcs = face_classes(tri)
    sheets = [(k, m) for k in range(len(fcs)) for m in range(weights[k])]
    if not sheets:
        return SurfaceReport(())
    # corner (k, m, vertex of rep face)
    corners = [(k, m, v) for k, m in sheets for v in range(4) if v != fcs[k][0][1]]
    uf_tri = _UnionFind(sheets)
    uf_vert = _UnionFind(corners)
    sides_glued = 0
    for sw in system.switches:
        stack_a = [(o, m) for o in sw.side_a for m in range(weights[o.face_class])]
        stack_b = [(o, m) for o in sw.side_b for m in range(weights[o.face_class])]
        if len(stack_a) != len(stack_b):
            raise CarriedError("sheet counts disagree at edge class {}".format(sw.edge_class))
        for (oa, ma), (ob, mb) in zip(stack_a, stack_b):
            ka, kb = oa.face_class, ob.face_class
            uf_tri.union((ka, ma), (kb, mb))
            uf_vert.union((ka, ma, oa.end_a), (kb, mb, ob.end_a))
            uf_vert.union((ka, ma, oa.end_b), (kb, mb, ob.end_b))
            sides_glued += 1
    if sides_glued * 2 != 3 * len(sheets):
        raise CarriedError("sheet sides were not all matched")

    # cusp of each tet vertex, to attribute boundary curves
    from .tri_core import cusp_triangulations
    cusp_of = {}
    for cusp in cusp_triangulations(tri):
        for t, v in cusp.triangles:
            cusp_of[(t, v)] = cusp.index
    ncusps = len(set(cusp_of.values()))

    comps = {}
    for sh in sheets:
        comps.setdefault(uf_tri.find(sh), []).append(sh)
    out = []
    for root in sorted(comps):
        members = comps[root]
        verts = {}
        for k, m in members:
            t, f = fcs[k][0]
            for v in range(4):
                if v != f:
                    verts.setdefault(uf_vert.find((k, m, v)), cusp_of[(t, v)])
        F = len(members)
        E = 3 * F // 2
        V = len(verts)
        closed_chi = V - E + F
        per_cusp = [0] * ncusps
        for c in verts.values():
            per_cusp[c] += 1
        out.append(SurfaceComponent(
            triangles=F,
            euler_char=closed_chi - V,
            genus=(2 - closed_chi) // 2,
            boundary_curves=V,
            boundary_per_cusp=tuple(per_cusp),
        ))
    return SurfaceReport(tuple(out))


def dual_pairing(tri, coor, weights):
    """Convenience: :func:`pairing` against the dual cycle of ``coor``."""
    return pairing(dual_cycle(tri, coor), tri, coor, weights)
