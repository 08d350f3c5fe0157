"""Mutual attack between (A, 0.8) and (B, 0.6).

The complete labelings form a small lattice on the characteristic grid.
Grounded sits at the bottom, the two stable labelings split the support,
and a third preferred labeling keeps some undecidedness.
"""

from fuzzylab import FAS, characteristic_values, enumerate_complete, leq_labeling, solve
from fuzzylab.io import format_degree

fas = FAS({"A": "0.8", "B": "0.6"}, [("A", "B", 1), ("B", "A", 1)])
print("grid:", " ".join(format_degree(v) for v in characteristic_values(fas)))


def show(lab):
    return "  ".join(f"{x}=({', '.join(format_degree(v) for v in t)})" for x, t in lab.items())


complete = enumerate_complete(fas)
print(f"\n{len(complete)} complete labelings")
for lab in complete:
    print("  " + show(lab))

for name in ("grounded", "preferred", "semi-stable", "stable", "ideal"):
    labs = solve(fas, name)
    print(f"\n{name}: {len(labs)}")
    for lab in labs:
        print("  " + show(lab))

g = solve(fas, "grounded")[0]
print("\ngrounded below every complete labeling:", all(leq_labeling(g, c) for c in complete))
