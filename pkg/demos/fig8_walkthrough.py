"""Walk through the two-vertex graph with a genus-one bubble.

Prints its topology, the T polynomial, and the deletion/contraction
branches for edges e2 and e0, checking that each pair adds back up.
"""
from tensorpoly import load_fixture, report, t_polynomial

G = load_fixture("fig8")
print(report(G).to_text())
print()

T = t_polynomial(G)
print("T(G)      =", T)

for e in ("e2", "e0"):
    d = t_polynomial(G.delete(e))
    c = t_polynomial(G.contract(e))
    print()
    print(f"T(G - {e}) =", d)
    print(f"T(G / {e}) =", c, f"   ({e} is now passive)")
    print("sum matches T(G):", d + c == T)

# Only the full graph closes the genus-one bubble, so t shows up only in
# subgraphs containing every edge.
print()
print("bubble genus sum of each 3-edge subgraph:",
      [G.bubble_genus_sum([f for f in G.edge_ids if f != e]) for e in G.edge_ids])
