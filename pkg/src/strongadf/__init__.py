"""Strong admissibility for abstract dialectical frameworks."""

from .adf import (
    Adf,
    LinkType,
    Semantics,
    check,
    classify_link,
    credulous,
    enumerate_interpretations,
    gamma,
    grounded,
    load_adf,
)
from .af import Af, af_to_adf, grounded_extension, load_af
from .formula import FormulaClass, classify, parse_formula, partial_valuation
from .interpretation import (
    F,
    T,
    U,
    Interpretation,
    Ordering,
    TruthValue,
    compare,
    join,
    meet,
    parse_interpretation,
    trivial,
    update,
)
from .lattice import SadmLattice, build_lattice
from .strong import (
    Witness,
    enumerate_strongly_admissible,
    gamma_sequence,
    infimum,
    is_strongly_admissible,
    least_bounding_index,
    least_witness,
    max_level,
    max_sadm_below,
    strongly_acceptable,
    supremum,
    witness_members_strong,
)

__version__ = "0.1.0"
