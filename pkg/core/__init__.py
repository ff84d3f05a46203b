from .lsta_ops import validate, accepts, trim, reduce, union, intersection, enumerate_language
from .emptiness import check_nonempty
from .inclusion import includes, equivalent, InclusionResult
from .gates import apply_gate, apply_circuit, product_construction
from .param_gates import apply_param_gate, unfold_top, unfold_bottom, fold
from .verifier import CircuitVerifier, run_verification, run_eqcheck

__all__ = [
    "validate",
    "accepts",
    "trim",
    "reduce",
    "union",
    "intersection",
    "enumerate_language",
    "check_nonempty",
    "includes",
    "equivalent",
    "InclusionResult",
    "apply_gate",
    "apply_circuit",
    "product_construction",
    "apply_param_gate",
    "unfold_top",
    "unfold_bottom",
    "fold",
    "CircuitVerifier",
    "run_verification",
    "run_eqcheck"
]
