"""Rank-metric length analysis for cyclic and twisted cyclic codes.

The core objects are a field tower (gf), conventional and twisted
polynomial rings over it (cpoly, lpoly), linear codes with cyclic
structure detection (code), and the length/degeneracy analysis built on
all of them (lengths).  sweep enumerates small exhaustive families,
textio gives the text grammar, and service/cli expose jobs over HTTP and
the command line.
"""

__version__ = "0.1.0"

from .code import LinearCode
from .cpoly import CPoly, cgcd, clcm, conjugate_closures, mu_eta, order_a, root_set
from .errors import (
    CapExceeded,
    InputError,
    InvariantFailure,
    SkewRankError,
)
from .gf import Element, FieldTower, make_tower
from .lengths import (
    LengthReport,
    RankEquivalence,
    analyze,
    build_equivalence,
    degeneracy_report,
    eta_duality_check,
    period_length,
    probe_exact_skew_length,
    rank_length,
    shift_length,
    shift_table,
    shorten_pseudo_cyclic,
    shorten_pseudo_skew,
    singleton_audit,
    skew_length_bounds,
)
from .lpoly import LPoly, conjugate_closures_l, llcm, rgcd, root_space
from .textio import (
    parse_cpoly,
    parse_element,
    parse_lpoly,
    render_cpoly,
    render_element,
    render_lpoly,
)

__all__ = [
    "CPoly",
    "CapExceeded",
    "Element",
    "FieldTower",
    "InputError",
    "InvariantFailure",
    "LPoly",
    "LengthReport",
    "LinearCode",
    "RankEquivalence",
    "SkewRankError",
    "analyze",
    "build_equivalence",
    "cgcd",
    "clcm",
    "conjugate_closures",
    "conjugate_closures_l",
    "degeneracy_report",
    "eta_duality_check",
    "llcm",
    "make_tower",
    "mu_eta",
    "order_a",
    "parse_cpoly",
    "parse_element",
    "parse_lpoly",
    "period_length",
    "probe_exact_skew_length",
    "rank_length",
    "render_cpoly",
    "render_element",
    "render_lpoly",
    "rgcd",
    "root_set",
    "root_space",
    "shift_length",
    "shift_table",
    "shorten_pseudo_cyclic",
    "shorten_pseudo_skew",
    "singleton_audit",
    "skew_length_bounds",
]
