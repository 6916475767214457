# %% [markdown]
# # Changing granularity
#
# Refining splits each ground element into finer ones; coarsening merges
# them back.  Masses travel with their focal elements, so beliefs agree
# across the two descriptions.

# %%
from fractions import Fraction as F

from evidentia import THETA, belief, coarsen, make_boe, new_frame, refine

frame = new_frame(["a", "b", "c"], {"X": ["a", "b"], "Y": ["b", "c"]})
body = make_boe(frame, {"X": F(1, 2), "Y": F(1, 4), THETA: F(1, 4)})

fine_frame, fine_body = refine(frame, {"a": ["a1", "a2"], "b": ["b"], "c": ["c1", "c2", "c3"]}, body)
print(fine_frame.ground)
print(fine_body)

# %%
back_frame, back_body = coarsen(fine_frame, {"a1": "a", "a2": "a", "b": "b", "c1": "c", "c2": "c", "c3": "c"}, fine_body)
print(back_body == body)
print(belief(body, "X"), belief(fine_body, "X"))
