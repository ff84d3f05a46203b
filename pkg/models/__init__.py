from .enums import Verdict, GateKind, ParamGateKind, Parity, BugScenario, PredicateKind
from .amplitude import AlgebraicComplex, parse_amplitude, format_amplitude
from .automaton import Lsta, Transition, Internal, Leaf, INTERNAL_ANY, StateTree, format_term
from .circuit import GateMatrix, GateOp, ParamGateOp, Circuit
from .report import VerificationOptions, VerificationReport, GateSizeRecord
from .errors import VerifierError

__all__ = [
    "Verdict",
    "GateKind",
    "ParamGateKind",
    "Parity",
    "BugScenario",
    "PredicateKind",
    "AlgebraicComplex",
    "parse_amplitude",
    "format_amplitude",
    "Lsta",
    "Transition",
    "Internal",
    "Leaf",
    "INTERNAL_ANY",
    "StateTree",
    "format_term",
    "GateMatrix",
    "GateOp",
    "ParamGateOp",
    "Circuit",
    "VerificationOptions",
    "VerificationReport",
    "GateSizeRecord",
    "VerifierError"
]
