"""Griesmer and Singleton bounds for systematic codes, with exhaustive
feasibility search for tail assignments at the critical length."""

from .core import (
    Code,
    CodeParams,
    Word,
    distance,
    is_systematic,
    min_distance,
    pad,
    translate,
    weight,
)
from .bounds import (
    BoundReport,
    bound_report,
    bound_table,
    griesmer_sum,
    griesmer_term,
    singleton_bound,
    table_to_csv,
)
from .search import (
    GuardLimitError,
    SearchOptions,
    SearchOutcome,
    WitnessSet,
    full_search,
    load_witness_set,
    naive_oracle,
    parse_witness_set,
    tail_search,
)
from .theorems import THEOREM_IDS, TheoremCase, Verdict, verify, verify_all, witness_set_for

__version__ = "0.1.0"

__all__ = [
    "Code",
    "CodeParams",
    "Word",
    "distance",
    "is_systematic",
    "min_distance",
    "pad",
    "translate",
    "weight",
    "BoundReport",
    "bound_report",
    "bound_table",
    "griesmer_sum",
    "griesmer_term",
    "singleton_bound",
    "table_to_csv",
    "GuardLimitError",
    "SearchOptions",
    "SearchOutcome",
    "WitnessSet",
    "full_search",
    "load_witness_set",
    "naive_oracle",
    "parse_witness_set",
    "tail_search",
    "THEOREM_IDS",
    "TheoremCase",
    "Verdict",
    "verify",
    "verify_all",
    "witness_set_for",
    "__version__",
]
