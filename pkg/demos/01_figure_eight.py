"""
The figure-eight knot complement as a layered punctured-torus bundle.

The monodromy ``RL`` needs two flips of the once-punctured torus, so the
layered triangulation has two tetrahedra.  We validate it and list its taut
structures.
"""
from tautforge import (cusp_angle_profile, enumerate_taut, layer_word, serialize,
                       surface_flip, validate)

# %% the flip sequence behind the word
base, seq, mono = surface_flip.ptorus_word_to_flips("RL")
print("monodromy", mono)
print("flips", seq.flips, "closing map", seq.closing)

# %% glue one tetrahedron per flip
tri, coor = layer_word("RL")
print(serialize(tri, coor.flags(tri)))

report = validate(tri)
print("orientable:", report.orientable, " cusps:", report.num_cusps,
      " edge degrees:", report.edge_degrees)

# %% every transverse orientation that is taut
structures = enumerate_taut(tri)
for k, c in enumerate(structures):
    print(k, c.signs, "pi angles per cusp vertex:", cusp_angle_profile(tri, c))
print("the layered coorientation is structure", structures.index(coor))
