"""Exact enumeration of integer compositions by congruence successions.

Counts compositions of n by number of parts and number of adjacent pairs
(u, v) with v = u + r (mod m); expands the counting generating functions to
exact coefficient tables; executes the bijections behind the parity-case
recurrences; and computes certified dominant-root growth constants.
"""

from .asymptotics import (
    AsymptoticEstimate,
    CircleScanReport,
    RootBracketError,
    asymptotic_estimate,
    carlitz_root,
    carlitz_segment,
    characteristic,
    characteristic_deriv,
    circle_scan,
    diagonal_check,
    dominant_estimate,
    dominant_root,
    segment_positive_root,
    tail_bound,
)
from .bijections import (
    ColoredComposition,
    classify_tail,
    enumerate_colored,
    head_forward,
    is_head_special,
    merge_alternating,
    split_colored,
    tail_forward,
    tail_inverse,
)
from .closed_forms import (
    alternating_binomial_even,
    alternating_binomial_odd,
    alternating_count,
    alternating_even_parts,
    alternating_odd_parts,
    binom,
    count_recurrence_holds,
)
from .compositions import (
    BudgetError,
    Composition,
    CountTable,
    SuccessionParams,
    brute_force_table,
    carlitz_count,
    enumerate_compositions,
    is_carlitz,
    residue_bar,
    succession_count,
)
from .series import (
    CyclicSystem,
    Series,
    coefficient,
    count_no_successions,
    gf_carlitz,
    gf_carlitz_alt,
    gf_congruence,
    gf_general,
    gf_parity,
    series_table_rows,
    solve_cyclic,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticEstimate",
    "BudgetError",
    "CircleScanReport",
    "ColoredComposition",
    "Composition",
    "CountTable",
    "CyclicSystem",
    "RootBracketError",
    "Series",
    "SuccessionParams",
    "alternating_binomial_even",
    "alternating_binomial_odd",
    "alternating_count",
    "alternating_even_parts",
    "alternating_odd_parts",
    "asymptotic_estimate",
    "binom",
    "brute_force_table",
    "carlitz_count",
    "carlitz_root",
    "carlitz_segment",
    "characteristic",
    "characteristic_deriv",
    "circle_scan",
    "classify_tail",
    "coefficient",
    "count_no_successions",
    "count_recurrence_holds",
    "diagonal_check",
    "dominant_estimate",
    "dominant_root",
    "enumerate_colored",
    "enumerate_compositions",
    "gf_carlitz",
    "gf_carlitz_alt",
    "gf_congruence",
    "gf_general",
    "gf_parity",
    "head_forward",
    "is_carlitz",
    "is_head_special",
    "merge_alternating",
    "residue_bar",
    "segment_positive_root",
    "series_table_rows",
    "solve_cyclic",
    "split_colored",
    "succession_count",
    "tail_bound",
    "tail_forward",
    "tail_inverse",
    "__version__",
]
