"""OpenQASM 2.0 subset: one register, fixed gates and pi/4 rotations.

Qubit ``q[i]`` is qubit i+1 of the circuit; qubit 1 is the root level of
the state trees.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import pyparsing as pp
from loguru import logger

from models.gate_library import INVERSE_NAMES, gate_constants, quarter_turns, rotation
from models.circuit import AnyGate, Circuit, GateOp, ParamGateOp
from models.enums import GateKind
from models.errors import (
    ClassicalOperationError,
    GateArgumentError,
    QasmParseError,
    QubitIndexError,
    UnsupportedAngleError,
    UnsupportedGateError,
)

CLASSICAL_KEYWORDS = ("creg", "measure", "reset", "if")
UNSUPPORTED_DEFINITIONS = ("gate", "opaque")
FIXED_GATES = ("x", "y", "z", "h", "s", "sdg", "t", "tdg")
ROTATION_GATES = ("rx", "rz")
GATE_ARITY = {"cx": 2, "cz": 2, "ccx": 3, "swap": 2}


@dataclass(frozen=True)
class PiMultiple:
    """coeff * pi**power; power None marks an expression outside that shape"""
    coeff: Fraction
    power: Optional[int]


def _negate(toks):
    sign, value = toks[0]
    return PiMultiple(-value.coeff if sign == "-" else value.coeff, value.power)


def _mul_div(toks):
    items = toks[0]
    result = items[0]
    for op, value in zip(items[1::2], items[2::2]):
        if result.power is None or value.power is None:
            result = PiMultiple(Fraction(0), None)
        elif op == "*":
            result = PiMultiple(result.coeff * value.coeff, result.power + value.power)
        elif value.coeff == 0:
            result = PiMultiple(Fraction(0), None)
        else:
            result = PiMultiple(result.coeff / value.coeff, result.power - value.power)
    return result


def _add_sub(toks):
    items = toks[0]
    result = items[0]
    for op, value in zip(items[1::2], items[2::2]):
        coeff = value.coeff if op == "+" else -value.coeff
        if result.power is None or value.power is None:
            result = PiMultiple(Fraction(0), None)
        elif coeff == 0:
            continue
        elif result.coeff == 0:
            result = PiMultiple(coeff, value.power)
        elif result.power == value.power:
            result = PiMultiple(result.coeff + coeff, result.power)
        else:
            result = PiMultiple(Fraction(0), None)
    return result


@dataclass(frozen=True)
class Statement:
    line: int
    text: str


_number = pp.Regex(r"\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+").set_parse_action(
    lambda toks: PiMultiple(Fraction(toks[0]), 0))
_pi = pp.Keyword("pi").set_parse_action(lambda: PiMultiple(Fraction(1), 1))

ANGLE_EXPR = pp.infix_notation(_number | _pi, [
    (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, _negate),
    (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _mul_div),
    (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _add_sub),
])

_ident = pp.Word(pp.alphas + "_", pp.alphanums + "_")
_index = pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))
_qubit_ref = pp.Group(_ident("register") + pp.Suppress("[") + _index("index") + pp.Suppress("]"))

STATEMENT = (
    _ident("name")
    + pp.Optional(pp.Group(pp.Suppress("(") + pp.DelimitedList(ANGLE_EXPR) + pp.Suppress(")"))("params"))
    + pp.Group(pp.DelimitedList(_qubit_ref))("args")
)

_statement_text = pp.Regex(r"[^;]+")("text") + pp.Suppress(";")
_statement_text.set_parse_action(lambda s, loc, toks: Statement(pp.lineno(loc, s), toks["text"].strip()))
PROGRAM = pp.ZeroOrMore(pp.Group(_statement_text))


def angle_quarter_turns(value: PiMultiple, line: int) -> int:
    """Rotation angle in multiples of pi/4"""
    if value.power == 0 and value.coeff == 0:
        return 0
    if value.power != 1:
        raise UnsupportedAngleError("rotation angle must be a rational multiple of pi", line)
    try:
        return quarter_turns(value.coeff)
    except UnsupportedAngleError as e:
        raise UnsupportedAngleError(str(e), line) from e


def _strip_comments(text: str) -> str:
    return re.sub(r"//[^\n]*", "", text)


class QasmCircuitBuilder:
    """Turns the statements of one OpenQASM program into a Circuit"""

    def __init__(self):
        self.register: Optional[str] = None
        self.qubit_count = 0
        self.gates: List[GateOp] = []

    def add_statement(self, line: int, text: str):
        keyword = re.split(r"[\s(\[]", text, maxsplit=1)[0]
        if keyword == "OPENQASM":
            if text.split()[1:] != ["2.0"]:
                raise QasmParseError(f"unsupported version: {text}", line)
            return
        if keyword == "include":
            return
        if keyword == "barrier":
            return
        if keyword in CLASSICAL_KEYWORDS:
            raise ClassicalOperationError(f"classical operation '{keyword}' is not supported", line)
        if keyword in UNSUPPORTED_DEFINITIONS:
            raise UnsupportedGateError("custom gate definitions are not supported", line)

        try:
            parsed = STATEMENT.parse_string(text, parse_all=True)
        except pp.ParseException as e:
            raise QasmParseError(f"malformed statement '{text}': {e.msg}", line) from e

        name = parsed["name"]
        params = list(parsed["params"]) if "params" in parsed else []
        args = [(ref["register"], ref["index"]) for ref in parsed["args"]]
        if name == "qreg":
            self._declare(args, line)
        else:
            self._add_gate(name, params, args, line)

    def _declare(self, args: List[Tuple[str, int]], line: int):
        """Handle the single qreg declaration"""
        if self.register is not None:
            raise QasmParseError("only one qreg is supported", line)
        if len(args) != 1 or args[0][1] < 1:
            raise QasmParseError("qreg needs one register of positive size", line)
        self.register, self.qubit_count = args[0]

    def _qubit(self, ref: Tuple[str, int], line: int) -> int:
        """1-based qubit index of a register reference"""
        register, index = ref
        if self.register is None:
            raise QasmParseError("gate before qreg declaration", line)
        if register != self.register:
            raise QubitIndexError(f"unknown register '{register}'", line)
        if index >= self.qubit_count:
            raise QubitIndexError(f"{register}[{index}] is out of range for {self.qubit_count} qubits", line)
        return index + 1

    def _add_gate(self, name: str, params: List[PiMultiple], args, line: int):
        if name not in FIXED_GATES and name not in ROTATION_GATES and name not in GATE_ARITY and name != "cnx":
            raise UnsupportedGateError(f"unsupported gate '{name}'", line)
        qubits = [self._qubit(ref, line) for ref in args]
        if len(set(qubits)) != len(qubits):
            raise QasmParseError(f"repeated qubit in '{name}'", line)
        expected_params = 1 if name in ROTATION_GATES else 0
        if len(params) != expected_params:
            raise QasmParseError(f"'{name}' takes {expected_params} parameter(s)", line)

        if name in FIXED_GATES or name in ROTATION_GATES:
            self._expect_arity(name, qubits, 1, line)
            angle = angle_quarter_turns(params[0], line) if params else None
            self.gates.append(single_qubit_gate(name, qubits[0], angle))
        elif name in GATE_ARITY:
            self._expect_arity(name, qubits, GATE_ARITY[name], line)
            self.gates.extend(_multi_qubit_gates(name, qubits))
        else:
            if len(qubits) < 2:
                raise QasmParseError("cnx needs at least one control and a target", line)
            self.gates.append(GateOp.controlled(tuple(qubits[:-1]), GateOp.x(qubits[-1])))

    @staticmethod
    def _expect_arity(name: str, qubits: List[int], arity: int, line: int):
        if len(qubits) != arity:
            raise QasmParseError(f"'{name}' takes {arity} qubit(s), got {len(qubits)}", line)

    def build(self) -> Circuit:
        if self.register is None:
            raise QasmParseError("missing qreg declaration")
        return Circuit(self.qubit_count, list(self.gates))


def single_qubit_gate(name: str, target: int, angle: Optional[int] = None) -> GateOp:
    """GateOp for a named single-qubit gate; diagonal gates take the fast path"""
    if name == "x":
        return GateOp.x(target)
    matrix = rotation(name, angle) if name in ROTATION_GATES else gate_constants()[name]
    if matrix.is_diagonal:
        return GateOp.diagonal(target, matrix.u1, matrix.u4, name=name, angle=angle)
    return GateOp.single(target, matrix, name=name, angle=angle)


def _multi_qubit_gates(name: str, qubits: List[int]) -> List[GateOp]:
    if name == "cx":
        return [GateOp.controlled((qubits[0],), GateOp.x(qubits[1]))]
    if name == "cz":
        return [GateOp.controlled((qubits[0],), single_qubit_gate("z", qubits[1]))]
    if name == "ccx":
        return [GateOp.controlled((qubits[0], qubits[1]), GateOp.x(qubits[2]))]
    a, b = qubits
    return [GateOp.controlled((a,), GateOp.x(b)), GateOp.controlled((b,), GateOp.x(a)),
            GateOp.controlled((a,), GateOp.x(b))]


def parse_qasm(text: str) -> Circuit:
    """Parse an OpenQASM 2.0 program of the supported subset"""
    source = _strip_comments(text)
    try:
        statements = PROGRAM.parse_string(source, parse_all=True)
    except pp.ParseException as e:
        raise QasmParseError(f"unterminated statement: {e.msg}", e.lineno) from e

    builder = QasmCircuitBuilder()
    for statement in statements:
        builder.add_statement(statement[0].line, statement[0].text)
    circuit = builder.build()
    logger.debug(f"parsed QASM circuit: {circuit.qubit_count} qubits, {len(circuit)} gates")
    return circuit


def format_angle(quarters: int) -> str:
    """n*pi/4 in QASM syntax"""
    value = Fraction(quarters, 4)
    if value == 0:
        return "0"
    numerator = {1: "pi", -1: "-pi"}.get(value.numerator, f"{value.numerator}*pi")
    return numerator if value.denominator == 1 else f"{numerator}/{value.denominator}"


def _operands(qubits) -> str:
    return ",".join(f"q[{q - 1}]" for q in qubits)


def _gate_line(g: GateOp) -> str:
    if g.kind is GateKind.CONTROLLED:
        inner = g.inner
        if inner.kind is GateKind.X:
            name = {1: "cx", 2: "ccx"}.get(len(g.controls), "cnx")
        elif inner.name == "z" and len(g.controls) == 1:
            name = "cz"
        else:
            raise UnsupportedGateError(f"no QASM form for {g.label()}")
        return f"{name} {_operands(g.qubits)};"
    if g.name in ROTATION_GATES:
        return f"{g.name}({format_angle(g.angle)}) {_operands(g.qubits)};"
    if g.name not in FIXED_GATES:
        raise UnsupportedGateError(f"no QASM form for {g.label()}")
    return f"{g.name} {_operands(g.qubits)};"


def serialize_qasm(circuit: Circuit) -> str:
    """OpenQASM text that parses back to an equal circuit"""
    if circuit.is_parameterized:
        raise GateArgumentError("parameterized circuits are written in the pqasm dialect")
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{circuit.qubit_count}];"]
    lines.extend(_gate_line(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def invert_gate(g: GateOp) -> GateOp:
    """Inverse gate: conjugate transpose, S<->Sdg, T<->Tdg, rotation angle negated"""
    if g.kind is GateKind.X:
        return g
    if g.kind is GateKind.CONTROLLED:
        return GateOp.controlled(g.controls, invert_gate(g.inner))
    name = INVERSE_NAMES.get(g.name, g.name)
    angle = -g.angle if g.angle is not None else None
    return GateOp(g.kind, g.target, g.matrix.dagger(), name=name, angle=angle)


def dagger(circuit: Circuit) -> Circuit:
    """Reversed circuit of inverted gates"""
    if circuit.is_parameterized:
        raise GateArgumentError("dagger is defined for fixed-width circuits only")
    gates: List[AnyGate] = []
    for g in reversed(circuit.gates):
        if isinstance(g, ParamGateOp):
            raise GateArgumentError(f"cannot invert parameterized gate {g.label()}")
        gates.append(invert_gate(g))
    return Circuit(circuit.qubit_count, gates)


def compose(first: Circuit, second: Circuit) -> Circuit:
    """first followed by second on the wider of the two registers"""
    width = max(first.qubit_count or 0, second.qubit_count or 0)
    return Circuit(width, list(first.gates) + list(second.gates))
