"""Constructive Kempe plan between two 4-edge-colourings of the Petersen graph.

The subcubic planner works on a shortest cycle, lifts changes made on the
graph without a cycle vertex, and records which argument produced each
step.  The plan is replayed independently before it is printed.

Run: python3 demos/petersen_plan.py [seed]
"""

import sys
from collections import Counter

from kempe.generators import petersen_graph, random_colouring
from kempe.graph import diff
from kempe.io import dump_json
from kempe.planner import plan_subcubic, verify_plan

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 24
G = petersen_graph()
phi = random_colouring(G, 4, seed=seed)
psi = random_colouring(G, 4, seed=seed + 1)
print(f"phi = {phi.colours}")
print(f"psi = {psi.colours}")
print(f"edges where they differ: {sorted(diff(G, phi, psi).edges)}")

plan = plan_subcubic(G, phi, psi)
print(f"\n{len(plan)} Kempe changes, target permutation {plan.target_permutation}")
for i, (step, tag) in enumerate(zip(plan.steps, plan.tags)):
    print(f"  {i:2d}  switch ({step.a},{step.b}) at edge {step.seed:2d}  [{tag}]")
print(f"steps per argument: {dict(Counter(plan.tags))}")
print(f"segment steps found by confined search: {plan.segment_search_steps}")
print(f"unconstrained search fallback steps: {plan.fallback_steps}")

check = verify_plan(G, phi, plan, psi)
print(f"\nreplay verdict: {check.to_json()}")
print(f"plan JSON: {dump_json(plan.to_json())[:120]}...")
