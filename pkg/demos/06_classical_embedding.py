"""Classical frameworks are fuzzy systems with all degrees equal to 1.

Each complete labeling of a Dung framework becomes a complete fuzzy
labeling, with in/out/undec mapped to the crisp triples.
"""

from fuzzylab import AF, af_to_fas, clab_to_flab, enumerate_classical_complete, enumerate_complete

af = AF("ABCD", [("A", "B"), ("B", "A"), ("B", "C"), ("C", "D"), ("D", "C")])
fas = af_to_fas(af)
fuzzy = enumerate_complete(fas)
print(f"{len(fuzzy)} fuzzy complete labelings on the embedded system")

for clab in enumerate_classical_complete(af):
    image = clab_to_flab(clab)
    text = ", ".join(f"{x}:{clab[x].value}" for x in clab)
    print(f"  {text:<32} found by the fuzzy solver: {image in fuzzy}")
