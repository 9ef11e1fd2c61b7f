"""
Admissible discs in one truncated taut tetrahedron.

Each disc boundary is a loop crossing truncated edges and boundary-triangle
sides.  Its combinatorial area is (cusps - 2) pi and the dual cycle meets it
``G.D`` times; the enumeration checks ``Area >= pi |G.D|`` on every disc.
"""
from collections import Counter

from tautforge import discgeo, layer_word

tri, coor = layer_word("RL")
m = discgeo.model_for(tri, coor, 0)
print("pi edges", m.pi_edges, " zero edges", m.zero_edges)

# %% the nine arc types per hexagon and what each contributes
for row in discgeo.hexagon_arc_table(m)[:9]:
    print("H{hexagon}  {from:>4} -> {to:<4} {contribution!s:>5}".format(**row))

# %% enumerate and audit
patterns = discgeo.enumerate_admissible_discs(m, 6)
report = discgeo.check_prop12_suite(m, 6, patterns)
print(report.as_dict())
print(Counter((discgeo.cusp_count(m, p), discgeo.g_dot(m, p)) for p in patterns))

# the half-point rule agrees with a perturbation of the curve off the dual path
assert all(discgeo.g_dot(m, p) == discgeo.g_dot_oracle(m, p) for p in patterns)

# %% the two basic families
for v in range(4):
    for p in discgeo.vertex_linking_patterns(m, v):
        print("vertex", v, p.describe(), "area", discgeo.area(m, p))
p = discgeo.face_parallel_pattern(m, 0)
print("face-parallel", p.describe(), "G.D =", discgeo.g_dot(m, p))
