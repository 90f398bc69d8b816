"""Restricted SAT and NAE-SAT toolkit: validators, oracles, gadgets, reductions."""

from ._core import (
    Certificate,
    DimacsError,
    EnumerationCapExceeded,
    Instance,
    certify_known_unsat,
    check_sat_via_transversal,
    emit_dimacs,
    gadget_names,
    known_unsat,
    normalize_variant,
    output_spec,
    parse_dimacs,
    parse_dimacs_variant,
    reduce,
    reduction_names,
    run_cli,
    solve,
    validate,
    verify_gadget,
)

__all__ = [
    "Certificate",
    "DimacsError",
    "EnumerationCapExceeded",
    "Instance",
    "certify_known_unsat",
    "check_sat_via_transversal",
    "emit_dimacs",
    "gadget_names",
    "known_unsat",
    "normalize_variant",
    "output_spec",
    "parse_dimacs",
    "parse_dimacs_variant",
    "reduce",
    "reduction_names",
    "run_cli",
    "solve",
    "validate",
    "verify_gadget",
]
