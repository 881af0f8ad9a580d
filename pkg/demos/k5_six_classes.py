"""Six Kempe classes of 5-edge-colourings of K5.

Every colour class of a 5-colouring of K5 is a matching of size two, so any
two colours span a Hamilton path and no switch changes the colouring beyond
relabelling.  Each canonical form is therefore its own class.

Run: python3 demos/k5_six_classes.py
"""

from kempe.enumerator import enumerate_colourings, is_rigid, kempe_classes
from kempe.generators import complete_graph, rigid_colouring

G = complete_graph(5)
labelled = enumerate_colourings(G, 5)
print(f"K5 has {len(labelled)} labelled proper 5-colourings")

report = kempe_classes(G, 5)
print(f"they fall into {report.n_forms} forms up to colour permutation")
print(f"number of Kempe classes: {report.kappa}")
for rep, size in report.classes:
    print(f"  representative {''.join(map(str, rep.word))}  forms in class: {size}  "
          f"rigid: {is_rigid(G, rep.colouring(5))}")

# the same phenomenon one prime up: K9 from a perfect 1-factorization of K10
H, c = rigid_colouring(9)
print(f"K9 colouring from a perfect 1-factorization is rigid: {is_rigid(H, c)}")
