# %% [markdown]
# # Statistical proteins
#
# An ambiguous codon is read as one of its tied candidates, drawn in
# proportion to plausibility.  Translating the same mRNA many times gives a
# distribution over protein sequences.

# %%
from evidentia import translate, toy_code

mrna = "GCAGCUGGAGCA"
for amb in (False, True):
    p = translate(toy_code(ambiguous=amb), mrna, samples=2000, seed=7)
    print("ambiguous" if amb else "unambiguous")
    for seq, freq in sorted(p.distribution.items(), key=lambda kv: -kv[1]):
        print("   ", "-".join(seq), f"{float(freq):.3f}")
