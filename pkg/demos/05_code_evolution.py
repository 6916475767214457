# %% [markdown]
# # Entropy descent over genetic codes
#
# Start from the ambiguous toy code and keep any single-cell mutation that
# lowers the mean entropy over all 64 codons.  Entropy acts as a Lyapunov
# function: it never rises along the accepted path.

# %%
from evidentia import code_ambiguity, code_entropy, evolve_code, toy_code

start = toy_code(ambiguous=True)
print("ambiguous  ", code_entropy(start))
print("unambiguous", code_entropy(toy_code(ambiguous=False)))

# %%
traj = evolve_code(start, max_steps=200, seed=0)
for s in traj.accepted:
    print(f"{s.step:4d}  {s.mutation.describe():28s} {s.entropy:.5f}")
print("final entropy", traj.final_entropy, "ambiguity", code_ambiguity(traj.final_code))
print("stopped at local minimum:", traj.local_minimum)
