"""Evidence theory over frames whose possibilities may overlap.

Bodies of evidence, Dempster and Smets combination, belief and plausibility
in literal, table and TBM regimes, a generalized entropy, and a simulator
for ambiguous genetic codes.
"""

from .core import (
    EMPTY,
    THETA,
    BodyOfEvidence,
    Frame,
    Label,
    Regime,
    coarsen,
    make_boe,
    meet,
    new_frame,
    refine,
    renormalize,
    vacuous,
)
from .fusion import (
    CombinationReport,
    Rule,
    combine,
    combine_all,
    combine_dempster,
    combine_smets,
    conflict_mass,
    discount,
)
from .evaluation import EvalMode, EvalResult, Preference, belief, compare_hypotheses, interval, plausibility
from .entropy import EntropyReport, ambiguity, entropy, shannon
from .codon import (
    DecodingTrace,
    EvolutionTrajectory,
    GeneticCode,
    StatisticalProtein,
    code_ambiguity,
    code_entropy,
    decode_codon,
    evolve_code,
    standard_frame,
    toy_code,
    translate,
)

__version__ = "0.1.0"
