import itertools

import pytest

from conftest import GIESEKING, SPHERE_CUSPS
from tautforge import taut, tri_core
from tautforge.taut import Coorientation, TautError


def all_coorientations(tri):
    n = 2 * tri.tet_count
    for signs in itertools.product((1, -1), repeat=n):
        yield Coorientation(signs)


def test_enumeration_matches_exhaustive_search(corpus_structures):
    for name, tri, found in corpus_structures:
        brute = [c for c in all_coorientations(tri) if taut.check_full_taut(tri, c)]
        # product((1, -1)) is already lexicographic with +1 first
        assert found == brute, name
        assert found


def test_structures_are_closed_under_negation(corpus_structures):
    for _, tri, found in corpus_structures:
        assert {c.negated() for c in found} == set(found)


def test_dual_cycle_is_balanced(corpus_structures):
    for _, tri, found in corpus_structures:
        for c in found:
            g = taut.dual_cycle(tri, c)
            assert all(g.in_degree(t) == 2 == g.out_degree(t) for t in range(tri.tet_count))


def test_flags_round_trip(figure8):
    tri, coor = figure8
    flags = coor.flags(tri)
    assert Coorientation.from_flags(tri, flags) == coor
    bad = [list(r) for r in flags]
    bad[0][0] = not bad[0][0]
    with pytest.raises(TautError):
        Coorientation.from_flags(tri, bad)


def test_angles_are_zero_or_pi(figure8):
    tri, coor = figure8
    angles = taut.corner_angles(tri, coor)
    for row in angles:
        # two-in/two-out: the pi edges are the two "diagonals"
        assert sorted(row) == [0, 0, 0, 0, 1, 1]


def test_signs_validated():
    with pytest.raises(ValueError):
        Coorientation((1, 0))


@pytest.mark.parametrize("text", [GIESEKING, SPHERE_CUSPS])
def test_hypotheses_enforced(text):
    tri = tri_core.parse_triangulation(text)
    with pytest.raises(TautError):
        taut.enumerate_taut(tri)
    with pytest.raises(TautError):
        taut.check_prop9(tri, Coorientation((1,) * 2))


def test_disconnected_rejected(figure8):
    tri, _ = figure8
    with pytest.raises(TautError, match="connected"):
        taut.enumerate_taut(tri_core.disjoint_union(tri, tri))


def test_cusp_profile_and_total(corpus_structures):
    for _, tri, found in corpus_structures:
        cusps = tri_core.cusp_triangulations(tri)
        for c in found:
            assert all(x == 2 for prof in taut.cusp_angle_profile(tri, c, cusps) for x in prof)
            # one pi corner per cusp triangle
            assert taut.cusp_corner_pi_total(tri, c, cusps) == 4 * tri.tet_count


def test_tet_condition_failure_detected(figure8):
    tri, _ = figure8
    everything_out_of_0 = Coorientation.from_flags(
        tri, [(True,) * 4, (False,) * 4])
    assert not taut.check_tet_condition(tri, everything_out_of_0)
    assert not taut.check_full_taut(tri, everything_out_of_0)
