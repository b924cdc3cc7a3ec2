from .invariant import (
    ClassCorrespondence,
    ClassKey,
    SWInvariant,
    SymbolicClass,
    format_class,
    parse_class,
    symbol,
)

from .certificates import (  # isort: skip
    SignVerdict,
    li_liu_sign_check,
    pairwise_distinct,
    taubes_nonvanishing,
)
from .genus import (  # isort: skip
    adjunction_min_genus,
    canonical_genus,
    symplectic_genus,
)
from .gluing import mms_combine, single_term_reduction  # isort: skip

__all__ = [
    "ClassCorrespondence",
    "ClassKey",
    "SWInvariant",
    "SignVerdict",
    "SymbolicClass",
    "adjunction_min_genus",
    "canonical_genus",
    "format_class",
    "li_liu_sign_check",
    "mms_combine",
    "pairwise_distinct",
    "parse_class",
    "single_term_reduction",
    "symbol",
    "symplectic_genus",
    "taubes_nonvanishing",
]
