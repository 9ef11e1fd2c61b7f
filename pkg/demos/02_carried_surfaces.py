"""
Surfaces carried by the branched surface of a taut triangulation.

Weights on face classes that satisfy the switch equations describe embedded
surfaces made of parallel copies of faces.  For each one the dual cycle
meets it in exactly ``-2 chi`` points.
"""
from tautforge import carried, layer_word, taut
from tautforge.layering import MonodromySpec, fiber_weights

tri, coor = layer_word("RL")
system = carried.switch_system(tri, coor)
for s in system.switches:
    print("edge", s.edge_class, ":", " + ".join("w%d" % k for k in s.lhs()), "=",
          " + ".join("w%d" % k for k in s.rhs()))

# %% solutions up to total weight 6
cycle = taut.dual_cycle(tri, coor)
print("\n{:<12} {:>5} {:>4} {:>8} {:>6}".format("weights", "total", "chi", "pairing", "comps"))
for w in carried.enumerate_solutions(system, 6):
    if not any(w):
        continue
    rep = carried.reconstruct(tri, coor, w, system)
    print("{:<12} {:>5} {:>4} {:>8} {:>6}".format(
        str(w), sum(w), carried.euler_char(w), carried.pairing(cycle, tri, coor, w),
        len(rep.components)))

# %% the fibre is a punctured torus sitting in one layer
w = fiber_weights(MonodromySpec.from_word("RL"), tri)
print("\nfibre weights", w, carried.reconstruct(tri, coor, w).as_dict())
