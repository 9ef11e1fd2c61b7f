import itertools

import pytest

from tautforge import carried, taut
from tautforge.carried import CarriedError
from tautforge.layering import MonodromySpec, build_mapping_torus, fiber_weights


def brute_solutions(system, max_total):
    n = system.num_faces
    out = []
    for w in itertools.product(range(max_total + 1), repeat=n):
        if sum(w) <= max_total and system.satisfied_by(w):
            out.append(w)
    return out


def test_enumerator_matches_brute_force(corpus_structures):
    for name, tri, found in corpus_structures:
        limit = 6 if tri.tet_count <= 2 else (3 if tri.tet_count == 3 else 2)
        for coor in found:
            system = carried.switch_system(tri, coor)
            assert carried.enumerate_solutions(system, limit) == brute_solutions(system, limit), name


def test_figure_eight_fiber(figure8):
    tri, coor = figure8
    spec = MonodromySpec.from_word("RL")
    system = carried.switch_system(tri, coor)
    for k in range(2):
        w = fiber_weights(spec, tri, k)
        assert system.satisfied_by(w)
        rep = carried.reconstruct(tri, coor, w, system)
        (comp,) = rep.components
        assert (comp.euler_char, comp.genus, comp.boundary_curves) == (-1, 1, 1)
        assert carried.dual_pairing(tri, coor, w) == 2


def test_doubled_fiber_has_two_components(figure8):
    tri, coor = figure8
    w = tuple(2 * x for x in fiber_weights(MonodromySpec.from_word("RL"), tri))
    rep = carried.reconstruct(tri, coor, w)
    assert len(rep.components) == 2
    assert rep.euler_char == -2
    assert carried.dual_pairing(tri, coor, w) == 4


def test_components_meet_the_cusps(corpus_structures):
    for name, tri, found in corpus_structures[:8]:
        for coor in found:
            system = carried.switch_system(tri, coor)
            for w in carried.enumerate_solutions(system, 6):
                if any(w) and sum(w) % 2 == 0:
                    rep = carried.reconstruct(tri, coor, w, system)
                    assert all(c.boundary_curves >= 1 and c.euler_char < 0
                               for c in rep.components), (name, w)


def test_sums_of_solutions_are_solutions(figure8):
    tri, coor = figure8
    system = carried.switch_system(tri, coor)
    sols = [w for w in carried.enumerate_solutions(system, 4) if any(w)]
    for a, b in itertools.combinations_with_replacement(sols, 2):
        s = tuple(x + y for x, y in zip(a, b))
        assert system.satisfied_by(s)
        if sum(s) % 2 == 0:
            assert carried.reconstruct(tri, coor, s, system).euler_char == carried.euler_char(s)


def test_norm_identity_on_layered_fibers():
    for word in ["RRL", "RLL", "RRLL", "RLRL", "RRRL"]:
        spec = MonodromySpec.from_word(word)
        tri, coor = build_mapping_torus(spec)
        for k in range(len(spec.flips)):
            w = fiber_weights(spec, tri, k)
            rep = carried.reconstruct(tri, coor, w)
            assert rep.euler_char == -1 and len(rep.components) == 1
            assert carried.dual_pairing(tri, coor, w) == sum(w) == 2


def test_errors(figure8):
    tri, coor = figure8
    with pytest.raises(CarriedError):
        carried.euler_char((1, 0, 0, 0))
    with pytest.raises(CarriedError):
        carried.reconstruct(tri, coor, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        carried.enumerate_solutions(carried.switch_system(tri, coor), -1)
    not_taut = taut.Coorientation.from_flags(tri, [(True,) * 4, (False,) * 4])
    with pytest.raises(CarriedError):
        carried.switch_system(tri, not_taut)


def test_report_dict(figure8):
    tri, coor = figure8
    w = fiber_weights(MonodromySpec.from_word("RL"), tri)
    d = carried.reconstruct(tri, coor, w).as_dict()
    assert d["components"][0]["boundary_per_cusp"] == [1]
