"""Exact symmetric-group character values and sign-partition classification."""

from ._core import (
    __version__,
    centralizer_order,
    char_value,
    classify,
    conjecture_predicate,
    count_paths,
    counts,
    degree,
    degree_is_odd,
    enumerate_class,
    enumerate_partitions,
    evaluate_theta,
    hook_lengths,
    is_exceptional,
    is_sd,
    is_up,
    parse,
    remove_hooks,
    render,
    theta_decompose,
    two_element_sign_classes,
    verify_conjecture,
    verify_count_identities,
    verify_theorem5,
)

__all__ = [
    "__version__",
    "centralizer_order",
    "char_value",
    "classify",
    "conjecture_predicate",
    "count_paths",
    "counts",
    "degree",
    "degree_is_odd",
    "enumerate_class",
    "enumerate_partitions",
    "evaluate_theta",
    "hook_lengths",
    "is_exceptional",
    "is_sd",
    "is_up",
    "parse",
    "remove_hooks",
    "render",
    "theta_decompose",
    "two_element_sign_classes",
    "verify_conjecture",
    "verify_count_identities",
    "verify_theorem5",
]
