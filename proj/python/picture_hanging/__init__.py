"""Python bindings for the picture-hanging toolkit."""

from ._core import (
    BudgetExceeded,
    LimitExceeded,
    ParseError,
    Unrealizable,
    build_disjoint,
    build_e,
    build_k_of_n,
    build_s,
    compile_formula,
    estimate_length,
    fall_table,
    falls,
    fixture,
    fixture_ids,
    format_word,
    greedy_min_fell,
    max_survive,
    min_fell,
    parse_word,
    reduce,
    remove_nails,
    render,
    set_cover,
)

__all__ = [
    "BudgetExceeded",
    "LimitExceeded",
    "ParseError",
    "Unrealizable",
    "build_disjoint",
    "build_e",
    "build_k_of_n",
    "build_s",
    "compile_formula",
    "estimate_length",
    "fall_table",
    "falls",
    "fixture",
    "fixture_ids",
    "format_word",
    "greedy_min_fell",
    "max_survive",
    "min_fell",
    "parse_word",
    "reduce",
    "remove_nails",
    "render",
    "set_cover",
]
