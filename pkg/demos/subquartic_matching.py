"""Six-colourings of a 4-regular graph via a repaired maximum matching.

The subquartic route takes a maximum matching, makes sure every component
left after deleting it has a vertex the vertex-deletion step can use,
recolours the matching with colour 6 and then works inside five colours.

Run: python3 demos/subquartic_matching.py
"""

from kempe.generators import circulant_graph, random_colouring
from kempe.matching import maximum_matching, qualifying_vertices, repair_matching
from kempe.planner import plan_subquartic, verify_plan

G = circulant_graph(8, (1, 2))
M = maximum_matching(G)
print(f"C8(1,2): {G.n} vertices, {G.m} edges, maximum matching of size {len(M)}")
print(f"  matched edges: {[G.edges[e] for e in sorted(M.edges)]}")

M = repair_matching(G, M)
for comp, v in qualifying_vertices(G, M):
    print(f"  component {comp} of G - M uses vertex {v}")

for seed in range(3):
    phi = random_colouring(G, 6, seed=2 * seed)
    psi = random_colouring(G, 6, seed=2 * seed + 1)
    plan = plan_subquartic(G, phi, psi)
    ok = verify_plan(G, phi, plan, psi).ok
    print(f"pair {seed}: {len(plan)} changes, verified {ok}, fallback steps {plan.fallback_steps}")
