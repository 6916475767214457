# %% [markdown]
# # One codon, two readings
#
# Two amino acids A1 and A2 share the codon GCA.  The three nucleotides of
# GCA arrive one at a time, each carrying its own body of evidence, and the
# cumulative body is re-evaluated after every arrival.

# %%
from evidentia import decode_codon, interval, toy_code
from evidentia.codon import TOY_CODON

code = toy_code(ambiguous=False)
frame = code.frame
print(frame.names, [frame.labels(frame.possibility(n)) for n in frame.names])

# %% [markdown]
# Exact rationals throughout, so the ninths come out as ninths.

# %%
trace = decode_codon(code, TOY_CODON)
for step in trace.steps:
    masses = {frame.describe(f) if isinstance(f, int) else f.name: str(m) for f, m in step.cumulative.masses.items()}
    cells = {n: (str(r.belief), str(r.plausibility)) for n, r in step.evaluations.items()}
    print(step.time, step.position, masses, cells)
print("decision:", trace.decision)

# %% [markdown]
# In the ambiguous variant the third nucleotide says nothing (all mass on
# THETA), so the body after three arrivals equals the body after two and
# no amino acid wins.

# %%
amb = decode_codon(toy_code(ambiguous=True), TOY_CODON)
print("decision:", amb.decision, "tied:", amb.candidates)

# %% [markdown]
# The literal reading counts the overlap A1&A2 toward Bel(A1); the table
# reading does not, because that overlap also sits inside A2.

# %%
final = trace.final
for mode in ("literal", "table", "tbm"):
    r = interval(final, "A1", mode)
    print(mode, r.belief, r.plausibility)
