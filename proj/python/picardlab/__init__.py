"""Picard groupoids of two-term complexes: exact checks over the integers."""

try:
    from ._picardlab import (  # installed layout: extension inside the package
        apply_matrix,
        check_model,
        fuzz,
        homology,
        normalize_expression,
        smith_normal_form,
        solve_linear,
    )
except ImportError:  # build-tree layout: extension next to the package dir
    from _picardlab import (
        apply_matrix,
        check_model,
        fuzz,
        homology,
        normalize_expression,
        smith_normal_form,
        solve_linear,
    )

__all__ = [
    "apply_matrix",
    "check_model",
    "fuzz",
    "homology",
    "normalize_expression",
    "smith_normal_form",
    "solve_linear",
]
