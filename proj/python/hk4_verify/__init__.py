"""Python interface to the exact-arithmetic verification engine.

The compiled extension `_hk4` carries the implementation; this package
re-exports it and adds a single convenience wrapper.  All rational values
cross the boundary as strings (e.g. "-5/3") so nothing is ever rounded.
"""

try:  # installed layout: extension lives inside the package
    from ._hk4 import (
        ParseError,
        PreconditionError,
        adapt_to_node,
        canonical_poly,
        chord_secant_degree,
        du_val_check,
        eval_poly,
        lattice_info,
        report_axioms,
        run_checks,
        tantipiani_example,
        two_node_quartic,
        yg_fit,
        __version__,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _hk4 import (
        ParseError,
        PreconditionError,
        adapt_to_node,
        canonical_poly,
        chord_secant_degree,
        du_val_check,
        eval_poly,
        lattice_info,
        report_axioms,
        run_checks,
        tantipiani_example,
        two_node_quartic,
        yg_fit,
        __version__,
    )

__all__ = [
    "ParseError",
    "PreconditionError",
    "adapt_to_node",
    "canonical_poly",
    "chord_secant_degree",
    "du_val_check",
    "eval_poly",
    "lattice_info",
    "report_axioms",
    "run_checks",
    "tantipiani_example",
    "two_node_quartic",
    "verify",
    "yg_fit",
    "__version__",
]


def verify(scope="all", seed=1, box=3, truncation=-1):
    """Run a verification scope; return (all_passed, records)."""
    records = run_checks(scope, seed=seed, box=box, truncation=truncation)
    return all(r["pass"] for r in records), records
