from .conjectures import (
    binom,
    chat,
    conjecture1,
    conjecture2,
    conjecture2_magnitude,
    conjecture2_stats,
    conjecture2_zero_rule,
)
from .noadjacency import lemma3_contains
from .theorem import BASE_CASES, base_case_table, is_nonzero, theorem4

__all__ = [
    "BASE_CASES",
    "base_case_table",
    "binom",
    "chat",
    "conjecture1",
    "conjecture2",
    "conjecture2_magnitude",
    "conjecture2_stats",
    "conjecture2_zero_rule",
    "is_nonzero",
    "lemma3_contains",
    "theorem4",
]
