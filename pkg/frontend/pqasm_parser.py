"""Line-based dialect for parameterized circuits.

One directive per line, ``#`` starts a comment::

    H 1            # gate on qubit 1 (negative index counts from the bottom)
    RZ -1 -4       # rotation on the last qubit by -4 * pi/4
    RX_FIRST 2     # same as RX 1 2
    H_LAST         # same as H -1
    CXN
    CXNINV
    XALL
    ALTCNOT even
    PHALL 4 1      # D(1, w_4^1) on every qubit
    UNFOLD_TOP 2
    UNFOLD_BOTTOM 1
    FOLD
"""

from typing import List, Optional

import pyparsing as pp
from loguru import logger

from models.gate_library import gate_constants, rotation
from models.circuit import Circuit, ParamGateOp
from models.enums import ParamGateKind, Parity
from models.errors import PqasmParseError

FIXED_NAMES = ("X", "Y", "Z", "H", "S", "SDG", "T", "TDG")
ROTATION_NAMES = ("RX", "RZ", "PH")
NULLARY = {
    "CXN": ParamGateKind.CXN,
    "CXNINV": ParamGateKind.CXN_INV,
    "XALL": ParamGateKind.X_ALL,
    "FOLD": ParamGateKind.FOLD,
}
UNFOLDS = {"UNFOLD_TOP": ParamGateKind.UNFOLD_TOP, "UNFOLD_BOTTOM": ParamGateKind.UNFOLD_BOTTOM}

_argument = pp.Regex(r"[+-]?\d+").set_parse_action(lambda toks: int(toks[0])) | pp.Word(pp.alphas)
DIRECTIVE = pp.Word(pp.alphas, pp.alphanums + "_")("name") + pp.Group(pp.ZeroOrMore(_argument))("args")


def _positioned_gate(name: str, position: int, angle: Optional[int], line: int) -> ParamGateOp:
    """SINGLE_FIRST for positive positions, SINGLE_LAST for negative ones"""
    if position == 0:
        raise PqasmParseError("qubit position must be non-zero", line)
    matrix = rotation(name.lower(), angle) if angle is not None else gate_constants()[name.lower()]
    kind = ParamGateKind.SINGLE_FIRST if position > 0 else ParamGateKind.SINGLE_LAST
    return ParamGateOp(kind, matrix, index=abs(position), name=name.lower(), angle=angle)


def _int_args(name: str, args: List, count: int, line: int) -> List[int]:
    if len(args) != count or not all(isinstance(a, int) for a in args):
        raise PqasmParseError(f"{name} takes {count} integer argument(s)", line)
    return list(args)


def parse_directive(text: str, line: int) -> ParamGateOp:
    try:
        parsed = DIRECTIVE.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise PqasmParseError(f"malformed directive '{text}': {e.msg}", line) from e
    name, args = parsed["name"].upper(), list(parsed["args"])

    if name in NULLARY:
        _int_args(name, args, 0, line)
        return ParamGateOp(NULLARY[name])
    if name in UNFOLDS:
        (depth,) = _int_args(name, args, 1, line)
        if depth < 1:
            raise PqasmParseError(f"{name} depth must be positive", line)
        return ParamGateOp(UNFOLDS[name], index=depth)
    if name == "ALTCNOT":
        if len(args) != 1 or str(args[0]).lower() not in ("even", "odd"):
            raise PqasmParseError("ALTCNOT takes 'even' or 'odd'", line)
        return ParamGateOp(ParamGateKind.ALT_CNOT, parity=Parity(str(args[0]).lower()))
    if name == "PHALL":
        if len(args) not in (1, 2):
            raise PqasmParseError("PHALL takes N and an optional power", line)
        values = _int_args(name, args, len(args), line)
        count, power = values[0], values[1] if len(values) == 2 else 1
        if count < 1 or 16 % count:
            raise PqasmParseError(f"PHALL needs N dividing 16, got {count}", line)
        return ParamGateOp(ParamGateKind.PHASE_ALL, roots_of_unity=count, power=power)

    base, _, where = name.partition("_")
    if where and where not in ("FIRST", "LAST"):
        raise PqasmParseError(f"unknown directive '{name}'", line)
    if base in FIXED_NAMES:
        if where:
            _int_args(name, args, 0, line)
            return _positioned_gate(base, 1 if where == "FIRST" else -1, None, line)
        (position,) = _int_args(name, args, 1, line)
        return _positioned_gate(base, position, None, line)
    if base in ROTATION_NAMES:
        if where:
            (angle,) = _int_args(name, args, 1, line)
            return _positioned_gate(base, 1 if where == "FIRST" else -1, angle, line)
        position, angle = _int_args(name, args, 2, line)
        return _positioned_gate(base, position, angle, line)
    raise PqasmParseError(f"unknown directive '{name}'", line)


def parse_pqasm(text: str) -> Circuit:
    """Parse a parameterized circuit; the result has no fixed qubit count"""
    gates = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            gates.append(parse_directive(body, number))
    logger.debug(f"parsed pqasm circuit with {len(gates)} directives")
    return Circuit(None, gates)


def format_directive(g: ParamGateOp) -> str:
    if g.kind in (ParamGateKind.SINGLE_FIRST, ParamGateKind.SINGLE_LAST):
        position = g.index if g.kind is ParamGateKind.SINGLE_FIRST else -g.index
        angle = f" {g.angle}" if g.angle is not None else ""
        return f"{g.name.upper()} {position}{angle}"
    if g.kind is ParamGateKind.ALT_CNOT:
        return f"ALTCNOT {g.parity.value}"
    if g.kind is ParamGateKind.PHASE_ALL:
        return f"PHALL {g.roots_of_unity} {g.power}"
    if g.kind in (ParamGateKind.UNFOLD_TOP, ParamGateKind.UNFOLD_BOTTOM):
        return f"{g.kind.value} {g.index}"
    return g.kind.value


def serialize_pqasm(circuit: Circuit) -> str:
    return "".join(format_directive(g) + "\n" for g in circuit.gates)
