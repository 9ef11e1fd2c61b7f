"""
Layered taut triangulations of mapping tori.

Each flip of the fibre triangulation glues one tetrahedron on top of the two
triangles it removes.  With square vertices ``P, A, Q, B`` (see
:func:`~tautforge.surface_flip.apply_flip`) the tetrahedron has vertices
``P=0, A=1, Q=2, B=3``: the removed triangles are faces 2 and 0 (both
cooriented into the tetrahedron), the new ones faces 3 and 1 (out).  The top
of the stack is glued to the bottom through the closing map.
"""
import json
from dataclasses import dataclass

from .surface_flip import (SurfaceError, SurfaceIdealTri, apply_flip,
                           check_isomorphism, flip_square, ptorus_word_to_flips)
from .taut import Coorientation, check_full_taut, cusp_angle_profile
from .tri_core import (IdealTriangulation, TriangulationError, face_class_index,
                       validate)

IN_FACES = (0, 2)
OUT_FACES = (1, 3)
TAUT_FLAGS = (False, True, False, True)


class LayeringError(ValueError):
    """The layered complex is degenerate (not a valid taut triangulation)."""


@dataclass(frozen=True)
class MonodromySpec:
    base: SurfaceIdealTri
    flips: tuple
    closing: tuple

    @classmethod
    def from_word(cls, word):
        base, seq, _ = ptorus_word_to_flips(word)
        return cls(base, seq.flips, seq.closing)

    @classmethod
    def from_sequence(cls, base, seq):
        return cls(base, tuple(seq.flips), tuple(seq.closing))

    def surfaces(self):
        """Surface triangulations after 0, 1, ..., n flips."""
        out = [self.base]
        for e in self.flips:
            out.append(apply_flip(out[-1], e))
        return out

    def to_json(self):
        return json.dumps({
            "base": [[list(p) for p in row] for row in self.base.partners],
            "flips": list(self.flips),
            "closing": [list(c) for c in self.closing],
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        try:
            base = SurfaceIdealTri(tuple(tuple(tuple(p) for p in row) for row in doc["base"]))
            flips = tuple(int(e) for e in doc["flips"])
            closing = tuple(tuple(int(x) for x in c) for c in doc["closing"])
        except (KeyError, TypeError, ValueError) as exc:
            raise LayeringError("bad monodromy spec: {}".format(exc)) from None
        return cls(base, flips, closing)


def _layer(spec):
    """
    Glue tetrahedra; returns ``(gluing rows, per-layer embeddings, bottoms)``.

    ``embeds[k][i]`` is ``(tet, (v0, v1, v2))`` when surface triangle ``i`` at
    layer ``k`` is the top face of a tetrahedron (its vertices ``0, 1, 2``
    being those tet vertices), or ``None`` while it is still a base triangle.
    ``bottoms[b]`` likewise records the tet face sitting on base triangle
    ``b``, with tet vertices indexed by base vertices.
    """
    if not spec.flips:
        raise LayeringError("empty flip sequence")
    surf = spec.base
    n = surf.triangle_count
    rows = []
    emb = [None] * n
    embeds = [tuple(emb)]
    bottoms = [None] * n

    def glue(t, f, t2, perm):
        rows[t][f] = (t2, perm)
        inv = [0] * 4
        for a, b in enumerate(perm):
            inv[b] = a
        rows[t2][perm[f]] = (t, tuple(inv))

    for e in spec.flips:
        try:
            i, s, j, t = flip_square(surf, e)
        except (SurfaceError, IndexError) as exc:
            raise LayeringError("illegal flip {}: {}".format(e, exc)) from None
        tet = len(rows)
        rows.append([None] * 4)
        # surface vertex -> tet vertex for the two removed triangles
        below = (
            (i, 2, {s: 0, (s + 1) % 3: 1, (s + 2) % 3: 3}),
            (j, 0, {t: 2, (t + 1) % 3: 3, (t + 2) % 3: 1}),
        )
        for tri_i, face, vmap in below:
            if emb[tri_i] is None:
                bottoms[tri_i] = (tet, tuple(vmap[k] for k in range(3)))
            else:
                t_old, m_old = emb[tri_i]
                perm = [None] * 4
                for k in range(3):
                    perm[vmap[k]] = m_old[k]
                perm[face] = ({0, 1, 2, 3} - set(m_old)).pop()
                glue(tet, face, t_old, tuple(perm))
        surf = apply_flip(surf, e)
        emb[i] = (tet, (0, 1, 2))
        emb[j] = (tet, (2, 3, 0))
        embeds.append(tuple(emb))
    return rows, embeds, bottoms, surf


def _resolve_bottom(spec, bottoms, b, vmap):
    """
    Follow base triangle ``b`` (vertices mapped by ``vmap``: base vertex ->
    label) up through never-flipped triangles until a tetrahedron face sits
    on it.  Returns ``(tet, {label: tet vertex})``.
    """
    seen = set()
    while bottoms[b] is None:
        if b in seen:
            raise LayeringError("a cycle of unflipped triangles closes up without tetrahedra")
        seen.add(b)
        # base triangle b is final triangle b; cross the closing map
        nb, r = spec.closing[b]
        vmap = {(k + r) % 3: vmap[k] for k in range(3)}
        b = nb
    tet, q = bottoms[b]
    return tet, {vmap[k]: q[k] for k in range(3)}


def build_mapping_torus(spec, verify=True):
    """
    Layered triangulation and its coorientation (two-in/two-out per tet).

    Raises :class:`LayeringError` when the complex is not a valid orientable
    taut triangulation with torus cusps.
    """
    rows, embeds, bottoms, final = _layer(spec)
    closing = tuple(spec.closing)
    if not check_isomorphism(final, spec.base, closing):
        raise LayeringError("closing map is not a simplicial isomorphism onto the base")
    emb = embeds[-1]
    for i, e in enumerate(emb):
        if e is None:
            continue
        t_top, m_top = e
        b, r = closing[i]
        # final vertex k of triangle i -> base vertex (k + r) % 3 of b
        vmap = {(k + r) % 3: m_top[k] for k in range(3)}
        t_bot, top_to_bot = _resolve_bottom(spec, bottoms, b, vmap)
        face_top = ({0, 1, 2, 3} - set(m_top)).pop()
        perm = [None] * 4
        for k in range(3):
            perm[m_top[k]] = top_to_bot[m_top[k]]
        perm[face_top] = ({0, 1, 2, 3} - set(top_to_bot.values())).pop()
        if rows[t_bot][perm[face_top]] is not None:
            raise LayeringError("bottom face glued twice")
        rows[t_top][face_top] = (t_bot, tuple(perm))
        inv = [0] * 4
        for a, c in enumerate(perm):
            inv[c] = a
        rows[t_bot][perm[face_top]] = (t_top, tuple(inv))
    if any(g is None for row in rows for g in row):
        raise LayeringError("some tetrahedron face was left unglued")
    try:
        tri = IdealTriangulation(tuple(tuple(r) for r in rows))
    except TriangulationError as exc:
        raise LayeringError(str(exc)) from None
    coor = Coorientation.from_flags(tri, [TAUT_FLAGS] * tri.tet_count)
    if verify:
        report = validate(tri)
        if report.problems:
            raise LayeringError("layered complex fails validation: " + "; ".join(report.problems))
        if not check_full_taut(tri, coor):
            raise LayeringError("layered complex is not taut")
        if any(x != 2 for prof in cusp_angle_profile(tri, coor) for x in prof):
            raise LayeringError("cusp angle profile is not all 2s")
    return tri, coor


def layer_word(word, verify=True):
    """Layered triangulation of the punctured-torus bundle of an R/L word."""
    return build_mapping_torus(MonodromySpec.from_word(word), verify=verify)


def layer_faces(spec, layer_index):
    """
    The ``(tet, face)`` representatives of the surface triangles at a layer.

    Layer ``k`` is the fibre triangulation after ``k`` flips, for
    ``0 <= k < len(flips)``.
    """
    if not 0 <= layer_index < len(spec.flips):
        raise LayeringError("layer index {} out of range".format(layer_index))
    rows, embeds, bottoms, _ = _layer(spec)
    out = []
    for i, e in enumerate(embeds[layer_index]):
        if e is not None:
            t, m = e
            out.append((t, ({0, 1, 2, 3} - set(m)).pop()))
        else:
            t, vm = _resolve_bottom(spec, bottoms, i, {0: 0, 1: 1, 2: 2})
            out.append((t, ({0, 1, 2, 3} - set(vm.values())).pop()))
    return out


def fiber_weights(spec, tri, layer_index=0):
    """Weight 1 on the face classes of the chosen fibre layer, 0 elsewhere."""
    index = face_class_index(tri)
    weights = [0] * (2 * tri.tet_count)
    for t, f in layer_faces(spec, layer_index):
        weights[index[(t, f)]] += 1
    return tuple(weights)
