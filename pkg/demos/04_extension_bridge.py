"""From fuzzy extensions to fuzzy labelings and back.

An f-extension only says how much of each argument is accepted.  Adding
the attack it mounts (S+) as rejection and the remainder as undecidedness
recovers a labeling; projecting to the acceptance part goes back.
"""

from fuzzylab import FAS, LabelingSet, enumerate_fextensions, ext_to_flab, flab_to_ext, solve
from fuzzylab.io import render_fextension, render_labeling

fas = FAS({"A": "0.8", "B": "0.6"}, [("A", "B", 1), ("B", "A", 1)])

for kind, sem in (("complete", "complete"), ("preferred", "preferred"), ("grounded", "grounded")):
    exts = enumerate_fextensions(fas, kind)
    images = LabelingSet.of(ext_to_flab(fas, e) for e in exts)
    print(f"{kind}: {len(exts)} f-extensions, images equal the {sem} labelings: {images == solve(fas, sem)}")
    for e in exts:
        lab = ext_to_flab(fas, e)
        assert flab_to_ext(lab) == e
        ext_text = " ".join(render_fextension(e, fas.names).split())
        lab_text = " ".join(render_labeling(lab).split())
        print(f"  {ext_text}\n    -> {lab_text}")

print("\nstable f-extensions")
for e in enumerate_fextensions(fas, "stable"):
    print("  " + " ".join(render_fextension(e, fas.names).split()))
