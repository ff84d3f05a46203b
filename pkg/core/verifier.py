import time
from typing import List, Optional, Tuple

from loguru import logger

from frontend.qasm_parser import compose, dagger
from models.automaton import Lsta, StateTree, format_term
from models.circuit import Circuit, GateOp
from models.enums import Verdict
from models.errors import (
    GateApplicationError,
    MixedSymbolsError,
    VerifierError,
    WidthMismatchError,
)
from models.report import GateSizeRecord, VerificationOptions, VerificationReport
from speckit.predicates import eq_vectors
from .gates import apply_gate
from .inclusion import includes
from .lsta_ops import accepts, validate
from .param_gates import apply_param_gate, symbol_shape


class CircuitVerifier:
    """Runs Hoare-triple checks {pre} C {post} by symbolic gate application and inclusion"""

    def __init__(self, options: Optional[VerificationOptions] = None):
        self.options = options or VerificationOptions()

    def post_image(self, pre: Lsta, circuit: Circuit) -> Tuple[Lsta, List[GateSizeRecord]]:
        """Apply every gate of the circuit to pre, recording sizes after each gate"""
        current = pre
        sizes: List[GateSizeRecord] = []
        for index, gate in enumerate(circuit.gates):
            try:
                if isinstance(gate, GateOp):
                    current = apply_gate(current, gate, self.options.reduce_after_gate)
                else:
                    current = apply_param_gate(current, gate, self.options.reduce_after_gate)
            except GateApplicationError:
                raise
            except VerifierError as e:
                raise GateApplicationError(index, gate.label(), e) from e
            sizes.append(GateSizeRecord(index, gate.label(), current.size, len(current.transitions)))
            logger.info(f"   ⚙️  gate {index} {gate.label()}: {current.size} states, "
                        f"{len(current.transitions)} transitions")
        return current, sizes

    def run_verification(self, pre: Lsta, circuit: Circuit, post: Lsta) -> VerificationReport:
        """Decide {pre} circuit {post}"""
        logger.info(f"🔬 verifying circuit with {len(circuit)} gates")
        try:
            self._check_inputs(pre, circuit, post)
            started = time.perf_counter()
            image, sizes = self.post_image(pre, circuit)
            timings = {"post_computation": time.perf_counter() - started}

            started = time.perf_counter()
            forward = includes(image, post, self.options.inclusion_budget)
            reverse_holds = None
            if self.options.check_equality:
                reverse_holds = includes(post, image, self.options.inclusion_budget).holds
            timings["inclusion"] = time.perf_counter() - started
            logger.info(f"   ⏱️  post-image {timings['post_computation']:.3f}s, inclusion {timings['inclusion']:.3f}s")
        except VerifierError as e:
            logger.error(f"verification aborted: {e}")
            return VerificationReport(Verdict.ERROR, message=str(e))

        if forward.holds:
            logger.info("✅ post-image is included in the postcondition")
            return VerificationReport(Verdict.PASS, gate_sizes=sizes, timings=timings,
                                      reverse_holds=reverse_holds)
        return self._failure(image, post, forward.counterexample, "forward", sizes, timings, reverse_holds)

    def run_eqcheck(self, first: Circuit, second: Circuit) -> VerificationReport:
        """Check first == second through {E} first;second^dagger {E} in both directions"""
        logger.info("🔬 checking circuit equivalence")
        try:
            if first.is_parameterized or second.is_parameterized:
                raise MixedSymbolsError("equivalence checking needs fixed-width circuits")
            if first.qubit_count != second.qubit_count:
                raise WidthMismatchError(
                    f"circuits have {first.qubit_count} and {second.qubit_count} qubits")
            vectors = eq_vectors(first.qubit_count)
            circuit = compose(first, dagger(second))
            started = time.perf_counter()
            image, sizes = self.post_image(vectors, circuit)
            timings = {"post_computation": time.perf_counter() - started}

            started = time.perf_counter()
            forward = includes(image, vectors, self.options.inclusion_budget)
            backward = includes(vectors, image, self.options.inclusion_budget) if forward.holds else None
            timings["inclusion"] = time.perf_counter() - started
        except VerifierError as e:
            logger.error(f"equivalence check aborted: {e}")
            return VerificationReport(Verdict.ERROR, message=str(e))

        if not forward.holds:
            return self._failure(image, vectors, forward.counterexample, "forward", sizes, timings, None)
        if not backward.holds:
            return self._failure(vectors, image, backward.counterexample, "backward", sizes, timings, False)
        logger.info("✅ circuits are equivalent")
        return VerificationReport(Verdict.PASS, gate_sizes=sizes, timings=timings, reverse_holds=True)

    def _check_inputs(self, pre: Lsta, circuit: Circuit, post: Lsta):
        """Validate the automata and match their symbols to the circuit kind"""
        validate(pre).raise_if_invalid()
        validate(post).raise_if_invalid()
        if circuit.is_parameterized:
            for label, a in (("precondition", pre), ("postcondition", post)):
                if symbol_shape(a) == "mixed":
                    raise MixedSymbolsError(f"{label} mixes indexed and parameterized symbols")

    def _failure(self, holder: Lsta, other: Lsta, witness: StateTree, direction: str,
                 sizes: List[GateSizeRecord], timings, reverse_holds) -> VerificationReport:
        """FAIL report for a tree of holder outside other, re-checked when enabled"""
        if self.options.check_witness:
            if accepts(holder, witness) is None or accepts(other, witness) is not None:
                message = f"witness {format_term(witness)} does not separate the automata"
                logger.error(message)
                return VerificationReport(Verdict.ERROR, message=message, gate_sizes=sizes, timings=timings)
        logger.info(f"❌ counterexample ({direction}): {format_term(witness)}")
        return VerificationReport(Verdict.FAIL, witness=format_term(witness), witness_direction=direction,
                                  gate_sizes=sizes, timings=timings, reverse_holds=reverse_holds)


def run_verification(pre: Lsta, circuit: Circuit, post: Lsta,
                     options: Optional[VerificationOptions] = None) -> VerificationReport:
    return CircuitVerifier(options).run_verification(pre, circuit, post)


def run_eqcheck(first: Circuit, second: Circuit,
                options: Optional[VerificationOptions] = None) -> VerificationReport:
    return CircuitVerifier(options).run_eqcheck(first, second)
