# %% [markdown]
# # Generalized entropy
#
# On Bayesian bodies (disjoint singletons, no THETA) the measure is plain
# Shannon entropy.  Overlap and suspended judgement add an ambiguity term
# equal to the summed Pl - Bel gaps.

# %%
from fractions import Fraction as F

from evidentia import THETA, entropy, make_boe, new_frame, shannon

coin = new_frame(["h", "t"], {"H": ["h"], "T": ["t"]})
fair = make_boe(coin, {"H": F(1, 2), "T": F(1, 2)})
rep = entropy(fair)
print(rep.total, shannon([0.5, 0.5]), rep.ambiguity_term)

# %%
overlap = new_frame(["c1", "c2", "c3"], {"A1": ["c1", "c2"], "A2": ["c2", "c3"]})
b = make_boe(overlap, {"A1": F(1, 3), "A2": F(1, 3), THETA: F(1, 3)})
for mode in ("literal", "tbm"):
    rep = entropy(b, mode)
    print(mode, round(rep.total, 6), rep.conflict_term, rep.ambiguity_term)
    for name, t in rep.per_possibility.items():
        print("   ", name, t.belief, t.plausibility)
