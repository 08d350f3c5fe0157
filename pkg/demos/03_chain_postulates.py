"""Postulate reports along the chain A -> B -> C.

FLab1 is conflict-free but leaves C more accepted than its attacker B is
rejected, so the defence postulate flags B and C.  FLab2 is the complete
labeling and passes every postulate of its profile.
"""

from fuzzylab import FAS, FuzzyLabeling, Postulate, check_profile, sufficient_attacker_set
from fuzzylab.io import render_report

fas = FAS({"A": "0.8", "B": "0.7", "C": "0.6"}, [("A", "B", 1), ("B", "C", "0.9")])
flab1 = FuzzyLabeling({"A": ("0.5", 0, "0.5"), "B": ("0.4", "0.5", "0.1"), "C": ("0.6", "0.4", 0)})
flab2 = FuzzyLabeling({"A": ("0.8", 0, "0.2"), "B": ("0.2", "0.8", 0), "C": ("0.6", "0.2", "0.2")})

print("FLab1 against all postulates")
print(render_report(check_profile(fas, flab1, list(Postulate)), pretty=True))
print("sufficient attackers of C under FLab1:", sorted(sufficient_attacker_set(fas, flab1, "C").members))
print()
print("FLab2 against the complete profile")
print(render_report(check_profile(fas, flab2, ["BP", "RP", "SWP", "SDP"]), pretty=True))
