import itertools
import random

import numpy as np
import pytest

from tautforge import surface_flip as sf
from tautforge import taut, tri_core
from tautforge.carried import switch_system
from tautforge.layering import (IN_FACES, OUT_FACES, LayeringError, MonodromySpec,
                                build_mapping_torus, fiber_weights, layer_faces, layer_word)

MIXED = ["".join(w) for n in range(2, 5) for w in itertools.product("RL", repeat=n)
         if len(set(w)) == 2]


@pytest.mark.parametrize("word", MIXED)
def test_mixed_words_layer(word):
    tri, coor = layer_word(word)
    r = tri_core.validate(tri)
    assert tri.tet_count == len(word)
    assert not r.problems and r.num_cusps == 1 and r.all_cusps_tori
    # a one-cusped manifold has as many edges as tetrahedra
    assert r.num_edges == tri.tet_count
    assert taut.check_full_taut(tri, coor)
    assert coor in taut.enumerate_taut(tri)


@pytest.mark.parametrize("word", ["R", "L", "RR", "LLL", "RRRR"])
def test_powers_of_one_letter_degenerate(word):
    with pytest.raises(LayeringError):
        layer_word(word)


def test_cyclic_rotation_gives_same_counts():
    a = tri_core.validate(layer_word("RRL")[0])
    b = tri_core.validate(layer_word("RLR")[0])
    assert sorted(a.edge_degrees) == sorted(b.edge_degrees)


@pytest.mark.parametrize("word", ["RL", "RRL", "RLLL", "RLRL"])
def test_layers_differ_by_tetrahedron_moves(word):
    spec = MonodromySpec.from_word(word)
    tri, coor = build_mapping_torus(spec)
    index = tri_core.face_class_index(tri)
    M = np.array(switch_system(tri, coor).matrix())
    layers = [np.array(fiber_weights(spec, tri, k)) for k in range(len(spec.flips))]
    for w in layers:
        assert w.sum() == 2
        assert not (M @ w).any()
    moves = []
    for t in range(tri.tet_count):
        v = np.zeros(2 * tri.tet_count, dtype=int)
        for f in OUT_FACES:
            v[index[(t, f)]] += 1
        for f in IN_FACES:
            v[index[(t, f)]] -= 1
        moves.append(v)
    for k in range(len(layers) - 1):
        assert np.array_equal(layers[k + 1] - layers[k], moves[k])
    # all differences lie in the span of the moves
    D = np.array([layers[k] - layers[0] for k in range(len(layers))] + moves)
    assert np.linalg.matrix_rank(D) == np.linalg.matrix_rank(np.array(moves))


def test_spec_json_round_trip():
    spec = MonodromySpec.from_word("RLL")
    again = MonodromySpec.from_json(spec.to_json())
    assert again == spec
    assert build_mapping_torus(again)[0] == build_mapping_torus(spec)[0]


def test_spec_from_sequence_matches_word():
    base, seq, _ = sf.ptorus_word_to_flips("RRL")
    assert MonodromySpec.from_sequence(base, seq) == MonodromySpec.from_word("RRL")


def test_bad_specs():
    with pytest.raises(LayeringError):
        MonodromySpec.from_json('{"base": [], "flips": []}')
    spec = MonodromySpec.from_word("RL")
    with pytest.raises(LayeringError):
        build_mapping_torus(MonodromySpec(spec.base, (), spec.closing))
    with pytest.raises(LayeringError):
        build_mapping_torus(MonodromySpec(spec.base, spec.flips, ((0, 0), (0, 0))))
    with pytest.raises(LayeringError):
        build_mapping_torus(MonodromySpec(spec.base, (0, 7), spec.closing))


def test_layer_index_range():
    spec = MonodromySpec.from_word("RL")
    assert len(layer_faces(spec, 1)) == 2
    with pytest.raises(LayeringError):
        layer_faces(spec, 2)


def _flippable(tri):
    out = []
    for k in range(len(tri.edges())):
        try:
            sf.flip_square(tri, k)
        except sf.SurfaceError:
            continue
        out.append(k)
    return out


def test_raw_flip_loops_never_crash():
    rng = random.Random(11)
    built = 0
    for g, p in [(0, 4), (1, 2), (0, 5)]:
        base = sf.punctured_surface(g, p)
        for _ in range(8):
            cur, flips = base, []
            for _ in range(rng.randrange(1, 4)):
                e = rng.choice(_flippable(cur))
                flips.append(e)
                cur = sf.apply_flip(cur, e)
            back = sf.flip_path_bfs(cur, base, 4)
            spec = MonodromySpec(base, tuple(flips) + back.flips, back.closing)
            try:
                tri, coor = build_mapping_torus(spec)
            except LayeringError:
                continue
            built += 1
            assert taut.check_full_taut(tri, coor)
            assert tri.tet_count == len(spec.flips)
    # the seed is fixed; some loops do close up into taut triangulations
    assert built >= 1
