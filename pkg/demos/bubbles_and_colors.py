"""Bubbles from corners versus bubbles from colors.

The graph whose edges join leg i to leg -i mod 4 is colorable; its
color-pair bubbles coincide with the corner bubbles.  The fig8 graph is
not colorable and has a non-planar bubble, so its dual is only a
pseudo-manifold.
"""
import random

from tensorpoly import bubbles_by_color, find_coloring, hypervariate_t, load_fixture
from tensorpoly.stranded import random_colored_graph

for name in ("fig12", "fig8"):
    G = load_fixture(name)
    col = find_coloring(G)
    print(f"{name}: {len(G.bubbles())} bubbles, genera {[b.genus for b in G.bubbles()]}, dual {G.is_manifold_dual()}")
    if col is None:
        print("  not colorable")
        continue
    print("  edge colors   ", col.edge_colors)
    print("  vertex signs  ", col.vertex_signs)
    print("  corner bubbles", G.bubbles().signatures())
    print("  color bubbles ", bubbles_by_color(G, col).signatures())

print()
print("hypervariate T of fig8 keeps track of which bubble carries the genus:")
print(" ", hypervariate_t(load_fixture("fig8")))

print()
rng = random.Random(3)
agree = 0
for _ in range(50):
    G = random_colored_graph(rng.randint(1, 3), rng)
    agree += bubbles_by_color(G, find_coloring(G)).signatures() == G.bubbles().signatures()
print(f"color and corner bubbles agree on {agree}/50 random colored graphs")
