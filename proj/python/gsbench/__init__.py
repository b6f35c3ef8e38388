# SPDX-License-Identifier: Apache-2.0
"""Python bindings for the gsb Groebner-Shirshov workbench.

Words are tuples of generator indices (1-based), polynomials are lists of
(word, "p/q") pairs with the leading term first.
"""

from ._gsb import (
    compare_deglex,
    complete_symn,
    count_normal_forms,
    format_poly,
    irr_enumerate,
    irr_member,
    normal_form,
    oracle_check_irr,
    parse_poly,
    sort_word,
    verify_symn,
)

__all__ = [
    "compare_deglex",
    "complete_symn",
    "count_normal_forms",
    "format_poly",
    "irr_enumerate",
    "irr_member",
    "normal_form",
    "oracle_check_irr",
    "parse_poly",
    "sort_word",
    "verify_symn",
]
