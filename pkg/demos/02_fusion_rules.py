# %% [markdown]
# # Dempster versus Smets
#
# Two witnesses, one frame.  Dempster throws the conflicting mass away and
# rescales; Smets keeps it on the empty set as a signal that the frame may
# be missing something.

# %%
from fractions import Fraction as F

from evidentia import THETA, combine_all, combine_dempster, combine_smets, discount, make_boe, new_frame

frame = new_frame(["wolf", "dog", "fox"], {"Canis": ["wolf", "dog"], "Vulpes": ["fox"]})
a = make_boe(frame, {"Canis": F(3, 4), THETA: F(1, 4)})
b = make_boe(frame, {"Vulpes": F(2, 3), THETA: F(1, 3)})

# %%
d = combine_dempster(a, b)
s = combine_smets(a, b)
print("conflict", d.conflict)
print("dempster", d.result)
print("smets   ", s.result)

# %% [markdown]
# Discounting an unreliable witness moves part of its mass to THETA, which
# lowers the conflict.

# %%
weak_b = discount(b, F(1, 2))
print(weak_b)
print("conflict after discount", combine_dempster(a, weak_b).conflict)

# %%
# order never matters
print(combine_all("smets", [a, b, weak_b]).result == combine_all("smets", [weak_b, a, b]).result)
