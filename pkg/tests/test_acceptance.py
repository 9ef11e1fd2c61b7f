"""
Acceptance criteria.  Each test prints one ``PASS``/``FAIL`` line; run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""
import itertools
import os
import random
import subprocess
import sys
import time
from collections import deque

import pytest

from conftest import ACCEPTANCE_LINES
from tautforge import carried, corpus_files, discgeo, surface_flip as sf, taut, tri_core
from tautforge.layering import MonodromySpec, build_mapping_torus, fiber_weights, layer_word


def report(number, ok, detail):
    line = "criterion {}: {} ({})".format(number, "PASS" if ok else "FAIL", detail)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def load_corpus():
    out = []
    for path in corpus_files():
        tri, flags = tri_core.parse_document(path.read_text())
        out.append((path.name, path, tri, flags))
    return out


def test_1_figure_eight_pipeline():
    start = time.perf_counter()
    tri, coor = layer_word("RL")
    r = tri_core.validate(tri)
    elapsed = time.perf_counter() - start
    ok = (tri.tet_count == 2 and not r.problems and r.num_cusps == 1 and r.all_cusps_tori
          and taut.check_full_taut(tri, coor) and elapsed < 1.0)
    report(1, ok, "tets={} cusps={} torus={} taut={} {:.3f}s".format(
        tri.tet_count, r.num_cusps, r.all_cusps_tori, taut.check_full_taut(tri, coor), elapsed))


def test_2_taut_enumeration_soundness():
    start = time.perf_counter()
    tri, _ = layer_word("RL")
    found = taut.enumerate_taut(tri)
    brute = [taut.Coorientation(s) for s in itertools.product((1, -1), repeat=4)
             if taut.check_full_taut(tri, taut.Coorientation(s))]
    elapsed = time.perf_counter() - start
    ok = found == brute and len(found) >= 1 and elapsed < 1.0
    report(2, ok, "{} structures, exhaustive {} of 16, {:.3f}s".format(
        len(found), len(brute), elapsed))


def _prop9_and_profiles():
    checked, mismatches, profile_bad, structures = 0, 0, 0, 0
    for name, _, tri, _ in load_corpus():
        cusps = tri_core.cusp_triangulations(tri)
        for signs in itertools.product((1, -1), repeat=2 * tri.tet_count):
            coor = taut.Coorientation(signs)
            full = taut.check_full_taut(tri, coor)
            checked += 1
            if taut.check_prop9(tri, coor) != full:
                mismatches += 1
            if full:
                structures += 1
                prof = taut.cusp_angle_profile(tri, coor, cusps)
                profile_bad += sum(1 for p in prof for x in p if x != 2)
    return checked, mismatches, profile_bad, structures


def test_3_prop9_equivalence():
    start = time.perf_counter()
    checked, mismatches, _, structures = _prop9_and_profiles()
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and checked > 0 and elapsed < 10.0
    report(3, ok, "{} coorientations, {} taut, {} mismatches, {:.2f}s".format(
        checked, structures, mismatches, elapsed))


def test_4_cusp_angle_profile():
    _, _, profile_bad, structures = _prop9_and_profiles()
    report(4, profile_bad == 0 and structures > 0,
           "{} taut structures, {} cusp vertices without exactly two pi".format(
               structures, profile_bad))


def test_5_carried_surface_identity():
    start = time.perf_counter()
    solutions, failures = 0, []
    for name, _, tri, _ in load_corpus():
        cycle = None
        for coor in taut.enumerate_taut(tri):
            system = carried.switch_system(tri, coor)
            cycle = taut.dual_cycle(tri, coor)
            for w in carried.enumerate_solutions(system, 8):
                total = sum(w)
                if total == 0:
                    continue
                solutions += 1
                if total % 2:
                    failures.append((name, w, "odd total"))
                    continue
                chi = carried.euler_char(w)
                pair = carried.pairing(cycle, tri, coor, w)
                rep = carried.reconstruct(tri, coor, w, system)
                if not (abs(pair) == total == -2 * chi and rep.euler_char == chi):
                    failures.append((name, w, pair, chi, rep.euler_char))
    spec = MonodromySpec.from_word("RL")
    tri, coor = build_mapping_torus(spec)
    fib = carried.reconstruct(tri, coor, fiber_weights(spec, tri))
    fiber_ok = (len(fib.components) == 1 and fib.euler_char == -1
                and fib.components[0].boundary_curves == 1)
    elapsed = time.perf_counter() - start
    ok = not failures and fiber_ok and solutions > 0 and elapsed < 30.0
    report(5, ok, "{} solutions, {} failures, fiber chi={} comps={} {:.2f}s".format(
        solutions, len(failures), fib.euler_char, len(fib.components), elapsed))


def test_6_disc_calculus():
    start = time.perf_counter()
    total, few_cusps, area_bad, half_bad, arc_bad = 0, 0, 0, 0, 0
    for flags in itertools.product((False, True), repeat=4):
        if sum(flags) != 2:
            continue
        m = discgeo.build_model(flags)
        for p in discgeo.enumerate_admissible_discs(m, 6):
            total += 1
            c, g = discgeo.cusp_count(m, p), discgeo.g_dot(m, p)
            few_cusps += c <= 1
            area_bad += discgeo.area(m, p) < abs(g)
            half_bad += 2 * abs(g) > c
            arc_bad += sum(1 for cell, a, b in p.arcs
                           if 2 * abs(discgeo.arc_contribution(m, cell, a, b)) > 1)
    elapsed = time.perf_counter() - start
    ok = total > 0 and not (few_cusps or area_bad or half_bad or arc_bad) and elapsed < 60.0
    report(6, ok, "{} patterns over 6 taut tetrahedra; c<=1: {}, area: {}, c/2: {}, "
                  "per-arc: {}; {:.2f}s".format(total, few_cusps, area_bad, half_bad,
                                                arc_bad, elapsed))


def test_7_area_euler_consistency():
    m = discgeo.build_model((False, True, False, True))
    link_area = sum(discgeo.area(m, p) for v in range(4)
                    for p in discgeo.vertex_linking_patterns(m, v))
    spec = MonodromySpec.from_word("RL")
    tri, coor = build_mapping_torus(spec)
    w = fiber_weights(spec, tri)
    discs = discgeo.face_parallel_decomposition(tri, coor, w)
    fiber_area = sum(d.area for d in discs)
    chi = carried.euler_char(w)
    ok = link_area == 0 and fiber_area == -2 * chi == 2 and len(discs) == 2
    report(7, ok, "vertex-linking area {} pi, fiber area {} pi from {} discs, chi {}".format(
        link_area, fiber_area, len(discs), chi))


def test_8_flip_connectivity():
    # triangulations are told apart by edge slopes; all are isomorphic as
    # gluing tables, so the relabelled graph would be a single vertex
    nodes, adj = sf.ptorus_marked_ball(4)
    start = next(iter(nodes))
    seen, q = {start}, deque([start])
    while q:
        for nb in adj[q.popleft()]:
            if nb not in seen:
                seen.add(nb)
                q.append(nb)
    connected = len(seen) == len(nodes) == 46

    rng = random.Random(1729)
    shapes = [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 1)]
    good = 0
    for _ in range(100):
        tri = sf.punctured_surface(*rng.choice(shapes))
        for _ in range(rng.randrange(5)):
            tri = sf.apply_flip(tri, rng.choice(_flippable(tri)))
        e = rng.choice(_flippable(tri))
        i = sf.flip_square(tri, e)[0]
        once = sf.apply_flip(tri, e)
        good += sf.canonical(sf.apply_flip(once, sf.flipped_edge(once, i))) == sf.canonical(tri)
    report(8, connected and good == 100,
           "ball of radius 4 has {} marked triangulations, connected={}; "
           "reflip identity {}/100".format(len(nodes), connected, good))


def _flippable(tri):
    out = []
    for k in range(len(tri.edges())):
        try:
            sf.flip_square(tri, k)
        except sf.SurfaceError:
            continue
        out.append(k)
    return out


def test_9_format_stability(tmp_path):
    corpus = load_corpus()
    round_trip = all(tri_core.serialize(tri, flags) == path.read_text()
                     for _, path, tri, flags in corpus)
    f8 = str(dict((n, p) for n, p, _, _ in corpus)["figure8.tri"])
    out_a, out_b = tmp_path / "a.tri", tmp_path / "b.tri"
    runs = [
        ["layer", "--surface", "ptorus", "--word", "RL", "--out", "{out}"],
        ["validate", f8, "--json"],
        ["taut", "enumerate", f8, "--json"],
        ["taut", "check", f8],
        ["carried", f8, "--coor", "0", "--max-total", "6", "--json"],
        ["discs", f8, "--coor", "0", "--tet", "0", "--max-cusps", "3", "--json"],
    ]
    deterministic = True
    for argv in runs:
        outputs = []
        for seed, out in (("1", out_a), ("2", out_b)):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            args = [a.replace("{out}", str(out)) for a in argv]
            res = subprocess.run([sys.executable, "-m", "tautforge.cli"] + args,
                                 capture_output=True, env=env)
            outputs.append((res.returncode, res.stdout.replace(str(out).encode(), b"OUT")))
        deterministic &= outputs[0] == outputs[1] and outputs[0][0] == 0
    deterministic &= out_a.read_bytes() == out_b.read_bytes() == \
        (dict((n, p) for n, p, _, _ in corpus)["figure8.tri"]).read_bytes()
    report(9, round_trip and deterministic, "{} corpus files round-trip={}; {} CLI runs "
           "byte-identical under two hash seeds={}".format(
               len(corpus), round_trip, len(runs), deterministic))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "conftest"]))
