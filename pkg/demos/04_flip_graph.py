"""
Flips on ideal triangulations of punctured surfaces.

Any two ideal triangulations of a surface are joined by flips.  For the
punctured torus the triangulations, told apart by edge slopes, form a tree.
"""
import random

from tautforge import surface_flip as sf

# %% punctured-torus triangulations near the base
nodes, adj = sf.ptorus_marked_ball(3)
for key in sorted(nodes, key=sorted)[:6]:
    print(sorted(key), "neighbours", len(adj[key]))
print(len(nodes), "triangulations within three flips")

# %% a random walk on a twice-punctured torus and the path back
rng = random.Random(0)
a = sf.punctured_surface(1, 2)
b = a
for _ in range(3):
    edges = []
    for e in range(len(b.edges())):
        try:
            sf.flip_square(b, e)
            edges.append(e)
        except sf.SurfaceError:
            pass
    b = sf.apply_flip(b, rng.choice(edges))
path = sf.flip_path_bfs(a, b, 4)
print("shortest path", path.flips, "closing", path.closing)
print(sf.serialize_surface(b))
