"""Empirical principle table.

Every violated cell comes with a witness that can be checked by hand;
cells without a counterexample only report how many systems were tried.
A smaller family than the default keeps this demo quick.
"""

import sys

from fuzzylab import InstanceFamily, PrincipleLab
from fuzzylab.io import render_report

count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
table = PrincipleLab(InstanceFamily(seed=0, count=count)).sweep()
print(render_report(table, pretty=True))

for (s, p), v in table.cells.items():
    if v.witness is not None and v.witness["source"] == "family":
        print(f"{s.value}/{p.value}: random system #{v.witness['index']}: {v.witness['details']}")
