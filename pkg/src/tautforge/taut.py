"""
Transverse orientations on ideal triangulations and the taut conditions.

A coorientation is stored per face class: ``signs[k] == +1`` means the
transverse orientation points out of the tetrahedron of the first
(lexicographically smaller) member of face class ``k``.  Angles are integers
in units of pi, so a corner is either 0 or 1.
"""
from dataclasses import dataclass

from .tri_core import (EDGES, cusp_triangulations, edge_classes, face_classes,
                       face_class_index, validate)


class TautError(ValueError):
    """A taut operation was called outside its hypotheses."""


@dataclass(frozen=True)
class Coorientation:
    signs: tuple

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("coorientation signs must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    def flags(self, tri):
        """Per tetrahedron, per face: ``True`` when the orientation points out."""
        out = [[None] * 4 for _ in range(tri.tet_count)]
        for k, ((t, f), (t2, f2)) in enumerate(face_classes(tri)):
            out[t][f] = self.signs[k] > 0
            out[t2][f2] = self.signs[k] < 0
        return tuple(tuple(row) for row in out)

    @classmethod
    def from_flags(cls, tri, flags):
        """Inverse of :meth:`flags`; checks glued consistency."""
        signs = []
        for (t, f), (t2, f2) in face_classes(tri):
            if bool(flags[t][f]) == bool(flags[t2][f2]):
                raise TautError(
                    "face {} of tet {} and its partner point the same way".format(f, t))
            signs.append(1 if flags[t][f] else -1)
        return cls(tuple(signs))

    def negated(self):
        return Coorientation(tuple(-s for s in self.signs))

    def __len__(self):
        return len(self.signs)


@dataclass(frozen=True)
class DualCycle:
    """
    One node per tetrahedron; ``edges[k] = (source, target)`` for face class
    ``k``, directed along the coorientation.
    """
    num_nodes: int
    edges: tuple

    def in_degree(self, node):
        return sum(1 for _, dst in self.edges if dst == node)

    def out_degree(self, node):
        return sum(1 for src, _ in self.edges if src == node)


def corner_angles(tri, coor):
    """
    ``angles[t][e]`` for edge ``EDGES[e]`` of tet ``t``: 1 (pi) when the two
    faces meeting along that edge are both in or both out, else 0.
    """
    flags = coor.flags(tri)
    out = []
    for t in range(tri.tet_count):
        row = []
        for a, b in EDGES:
            c, d = [v for v in range(4) if v not in (a, b)]
            row.append(1 if flags[t][c] == flags[t][d] else 0)
        out.append(tuple(row))
    return tuple(out)


def check_tet_condition(tri, coor):
    return all(sum(1 for x in row if not x) == 2 for row in coor.flags(tri))


def edge_pi_counts(tri, coor, classes=None):
    if classes is None:
        classes = edge_classes(tri)
    angles = corner_angles(tri, coor)
    return [sum(angles[cn.tet][cn.edge] for cn in ec.corners) for ec in classes]


def check_full_taut(tri, coor, classes=None):
    return check_tet_condition(tri, coor) and all(
        n == 2 for n in edge_pi_counts(tri, coor, classes))


def _require_torus_cusps(tri):
    report = validate(tri)
    if not report.orientable:
        raise TautError("triangulation is not orientable")
    if not report.valid_edges:
        raise TautError("triangulation has invalid edges")
    if not report.all_cusps_tori:
        raise TautError("not every cusp is a torus")
    return report


def check_prop9(tri, coor):
    """
    Two-in/two-out in every tetrahedron and at least one pi corner at every
    edge.  On manifolds with torus cusps this is equivalent to tautness, so
    the hypothesis is enforced rather than assumed.
    """
    _require_torus_cusps(tri)
    return check_tet_condition(tri, coor) and all(n >= 1 for n in edge_pi_counts(tri, coor))


def enumerate_taut(tri):
    """
    All taut coorientations, in lexicographic order of the per-class sign
    tuple with ``+1`` before ``-1``.

    Backtracking over face classes; a tetrahedron prunes once it has three
    in-faces or three out-faces, an edge class once it has more than two pi
    corners or is complete with a count other than two.
    """
    report = _require_torus_cusps(tri)
    if not report.connected:
        raise TautError("triangulation is not connected")
    classes = edge_classes(tri)
    fcs = face_classes(tri)
    nfc = len(fcs)

    # face class k touches edge-class corners; a corner is decided once both
    # of its faces are assigned
    fc_of = face_class_index(tri)
    corner_faces = []  # (edge class, tet, face c, face d)
    for ec in classes:
        for cn in ec.corners:
            corner_faces.append((ec.index, cn.tet, cn.c, cn.d))
    last_needed = []
    for ecls, t, c, d in corner_faces:
        last_needed.append(max(fc_of[(t, c)], fc_of[(t, d)]))
    decided_at = [[] for _ in range(nfc)]
    for i, k in enumerate(last_needed):
        decided_at[k].append(i)
    remaining = [0] * len(classes)
    for ecls, *_ in corner_faces:
        remaining[ecls] += 1

    flags = [[None] * 4 for _ in range(tri.tet_count)]
    outs = [0] * tri.tet_count
    ins = [0] * tri.tet_count
    pis = [0] * len(classes)
    left = list(remaining)
    signs = [0] * nfc
    results = []

    def set_face(t, f, out):
        flags[t][f] = out
        if out:
            outs[t] += 1
        else:
            ins[t] += 1

    def unset_face(t, f):
        if flags[t][f]:
            outs[t] -= 1
        else:
            ins[t] -= 1
        flags[t][f] = None

    def recurse(k):
        if k == nfc:
            results.append(Coorientation(tuple(signs)))
            return
        (t, f), (t2, f2) = fcs[k]
        for s in (1, -1):
            signs[k] = s
            set_face(t, f, s > 0)
            set_face(t2, f2, s < 0)
            ok = outs[t] <= 2 and ins[t] <= 2 and outs[t2] <= 2 and ins[t2] <= 2
            touched = []
            if ok:
                for i in decided_at[k]:
                    ecls, tt, c, d = corner_faces[i]
                    pi = flags[tt][c] == flags[tt][d]
                    pis[ecls] += pi
                    left[ecls] -= 1
                    touched.append((ecls, pi))
                    if pis[ecls] > 2 or (left[ecls] == 0 and pis[ecls] != 2):
                        ok = False
                        break
            if ok:
                recurse(k + 1)
            for ecls, pi in touched:
                pis[ecls] -= pi
                left[ecls] += 1
            unset_face(t2, f2)
            unset_face(t, f)
        signs[k] = 0

    recurse(0)
    return results


def dual_cycle(tri, coor):
    """Oriented 4-valent dual graph; each edge points along the coorientation."""
    edges = []
    for k, ((t, f), (t2, f2)) in enumerate(face_classes(tri)):
        edges.append((t, t2) if coor.signs[k] > 0 else (t2, t))
    return DualCycle(tri.tet_count, tuple(edges))


def cusp_angle_profile(tri, coor, cusps=None):
    """
    Number of pi angles at each vertex of each cusp triangulation, as a list
    (one per cusp) of lists indexed by local link-vertex id.
    """
    if cusps is None:
        cusps = cusp_triangulations(tri)
    angles = corner_angles(tri, coor)
    out = []
    for cusp in cusps:
        counts = [0] * cusp.num_vertices
        for (t, v, w), vid in cusp.corner_vertex.items():
            # the link triangle (t, v) has its corner at the end of edge {v, w}
            counts[vid] += angles[t][EDGES.index(tuple(sorted((v, w))))]
        out.append(counts)
    return out


def cusp_corner_pi_total(tri, coor, cusps=None):
    """Total number of pi corners over all cusp triangles (one per triangle when two-in/two-out)."""
    return sum(sum(c) for c in cusp_angle_profile(tri, coor, cusps))
