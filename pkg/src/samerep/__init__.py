"""Integer sets with equal representation functions.

Representation functions, Thue-Morse constructions, a forcing solver for
equal-representation partitions of constrained intervals, and grid scans
that check the solver's answers against the closed-form classification.
"""

from .intset import (
    CapacityError,
    IntSet,
    evil_parity,
    format_set,
    parse_set,
    reflect,
    shift,
    thue_morse_set,
    universe_cap,
)
from .repfn import RepTable, check_eq10_identity, rep_fn_naive, rep_fn_table, rep_tables_equal
from .scanner import ScanRecord, scan
from .solver import (
    Infeasible,
    Label,
    PartitionSolution,
    PositionProfile,
    Provenance,
    enumerate_all,
    solve_forced,
    verify_pair,
)
from .theorems import (
    check_lemma3,
    check_lemma4,
    check_lemma5,
    construct_lemma6,
    construct_problem2,
    construct_theorem1,
    find_lemma7_witness,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Infeasible",
    "IntSet",
    "Label",
    "PartitionSolution",
    "PositionProfile",
    "Provenance",
    "RepTable",
    "ScanRecord",
    "check_eq10_identity",
    "check_lemma3",
    "check_lemma4",
    "check_lemma5",
    "construct_lemma6",
    "construct_problem2",
    "construct_theorem1",
    "enumerate_all",
    "evil_parity",
    "find_lemma7_witness",
    "format_set",
    "parse_set",
    "reflect",
    "rep_fn_naive",
    "rep_fn_table",
    "rep_tables_equal",
    "scan",
    "shift",
    "solve_forced",
    "thue_morse_set",
    "universe_cap",
    "verify_pair",
]
