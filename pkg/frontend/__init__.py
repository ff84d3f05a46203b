from .qasm_parser import (
    parse_qasm,
    serialize_qasm,
    dagger,
    compose,
    invert_gate,
    single_qubit_gate
)
from .pqasm_parser import (
    parse_pqasm,
    serialize_pqasm
)

__all__ = [
    "parse_qasm",
    "serialize_qasm",
    "dagger",
    "compose",
    "invert_gate",
    "single_qubit_gate",
    "parse_pqasm",
    "serialize_pqasm"
]
