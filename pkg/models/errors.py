from typing import Optional


class VerifierError(Exception):
    """Base class for every error raised by the verifier"""


class UnsupportedAngleError(VerifierError):
    """Rotation angle is not an integer multiple of pi/4"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AmplitudeLiteralError(VerifierError):
    """Malformed amplitude literal"""


class NeedsUnfoldError(VerifierError):
    """A fixed-index gate reached a level whose symbols are not indexed"""


class AmbiguousLastLayerError(VerifierError):
    """The leaf layer of a parameterized automaton cannot be identified"""


class MixedSymbolsError(VerifierError):
    """Indexed and parameterized internal symbols appear in the same automaton"""


class ShortTreeError(VerifierError):
    """Unfolding would silently drop accepted trees that are too short"""


class GateArgumentError(VerifierError):
    """Invalid qubit arguments for a gate (overlap, out of range, bad kind)"""


class BudgetExhaustedError(VerifierError):
    """The inclusion search visited more vertices than allowed"""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"inclusion search exceeded the budget of {budget} vertices")


class LstaValidationError(VerifierError):
    """An automaton violates the structural invariants"""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InvalidPredicateError(VerifierError):
    """Invalid parameters for a predicate family"""


class BugInjectionError(VerifierError):
    """The requested bug scenario cannot be applied to the circuit"""


class WidthMismatchError(VerifierError):
    """Circuits compared for equivalence have different qubit counts"""


class GateApplicationError(VerifierError):
    """Wraps an error raised while applying a specific gate of a circuit"""

    def __init__(self, gate_index: int, label: str, cause: Exception):
        self.gate_index = gate_index
        self.label = label
        self.cause = cause
        super().__init__(f"gate {gate_index} ({label}): {cause}")


class ParseError(VerifierError):
    """Base class for text format errors; carries the 1-based line number"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class QasmParseError(ParseError):
    pass


class UnsupportedGateError(QasmParseError):
    pass


class ClassicalOperationError(QasmParseError):
    pass


class QubitIndexError(QasmParseError):
    pass


class PqasmParseError(ParseError):
    pass


class LstaFormatError(ParseError):
    pass
