"""A weak argument attacking a strong one.

(A, 0.5) attacks (B, 0.8) with full weight.  Classically B would simply be
out; here A can only take away as much as it has, so B keeps half of its
support and the other half turns into rejection.
"""

import numpy as np

from fuzzylab import FAS, grounded_fixpoint
from fuzzylab._kernel import Kernel
from fuzzylab.io import format_degree

fas = FAS({"A": "0.5", "B": "0.8"}, [("A", "B", 1)])

# Kleene iteration from the all-zero acceptability vector
k = Kernel(fas)
a = np.zeros(k.n, dtype=k.dtype)
for step in range(5):
    print(f"step {step}: " + ", ".join(f"{x}^a={format_degree(k.to_frac(v))}" for x, v in zip(k.names, a)))
    nxt = k.step(a)
    if (nxt == a).all():
        break
    a = nxt

lab = grounded_fixpoint(fas)
print()
print("grounded labeling")
for x, (acc, rej, und) in lab.items():
    print(f"  {x}: a={format_degree(acc)}  r={format_degree(rej)}  u={format_degree(und)}")
