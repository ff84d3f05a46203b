"""Benchmark generators: each returns a precondition, a circuit and a postcondition."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from config import BV_SINGLE_PATTERN, DEFAULT_BENCHMARK_SEED, FERMIONIC_ANGLE
from frontend.pqasm_parser import parse_pqasm
from frontend.qasm_parser import single_qubit_gate
from models.automaton import Lsta
from models.circuit import Circuit, GateOp
from models.errors import InvalidPredicateError
from .predicates import (
    basis_all,
    basis_single,
    bell,
    bv_post,
    bv_pre,
    even_parity_param,
    ghz_all_fixed,
    ghz_fixed,
    ghz_param,
    mctoffoli_post,
    mctoffoli_pre,
    parity_phase,
    zeros_param,
)


@dataclass
class Benchmark:
    name: str
    pre: Lsta
    circuit: Circuit
    post: Lsta

    @property
    def is_parameterized(self) -> bool:
        return self.circuit.is_parameterized


def _cx(control: int, target: int) -> GateOp:
    return GateOp.controlled((control,), GateOp.x(target))


def _ccx(c1: int, c2: int, target: int) -> GateOp:
    return GateOp.controlled((c1, c2), GateOp.x(target))


def bell_benchmark() -> Benchmark:
    circuit = Circuit(2, [single_qubit_gate("h", 1), _cx(1, 2)])
    return Benchmark("bell", basis_all(2), circuit, bell())


def ghz_benchmark(n: int, all_inputs: bool = False) -> Benchmark:
    """H on qubit 1, then a CX fan-out from qubit 1"""
    if n < 1:
        raise InvalidPredicateError("GHZ needs n >= 1")
    gates = [single_qubit_gate("h", 1)] + [_cx(1, i) for i in range(2, n + 1)]
    if all_inputs:
        return Benchmark(f"ghz-all-{n}", basis_all(n), Circuit(n, gates), ghz_all_fixed(n))
    return Benchmark(f"ghz-{n}", basis_single("0" * n), Circuit(n, gates), ghz_fixed(n))


def bv_benchmark(n: int, hidden: Optional[str] = None) -> Benchmark:
    """Bernstein-Vazirani with the hidden string stored on odd qubits.

    Qubit 2i-1 holds s_i, qubit 2i is data bit i and qubit 2n+1 the ancilla.
    ``hidden`` None runs over every hidden string.
    """
    if n < 1:
        raise InvalidPredicateError("BV needs n >= 1")
    width = 2 * n + 1
    layer = [single_qubit_gate("h", 2 * i) for i in range(1, n + 1)] + [single_qubit_gate("h", width)]
    oracle = [_ccx(2 * i - 1, 2 * i, width) for i in range(1, n + 1)]
    name = f"bv-{n}" if hidden is not None else f"bv-all-{n}"
    return Benchmark(name, bv_pre(n, hidden), Circuit(width, layer + oracle + layer), bv_post(n, hidden))


def bv_single_pattern(n: int) -> str:
    """The default hidden string: BV_SINGLE_PATTERN repeated to length n"""
    return (BV_SINGLE_PATTERN * n)[:n]


def mctoffoli_gates(n: int, use_cnx: bool = False) -> List[GateOp]:
    """Toffoli ladder over c1 c2 a1 c3 a2 ... cn a(n-1) t, with uncomputation"""
    controls = [1] + [2 * j - 2 for j in range(2, n + 1)]
    target = 2 * n
    if use_cnx or n == 1:
        return [GateOp.controlled(tuple(controls), GateOp.x(target))]
    ancilla = [2 * j + 1 for j in range(1, n)]
    compute = [_ccx(controls[0], controls[1], ancilla[0])]
    compute += [_ccx(ancilla[j - 2], controls[j], ancilla[j - 1]) for j in range(2, n)]
    return compute + [_cx(ancilla[-1], target)] + list(reversed(compute))


def mctoffoli_benchmark(n: int, k: int = 0, use_cnx: bool = False) -> Benchmark:
    if n < 1:
        raise InvalidPredicateError("MCToffoli needs n >= 1")
    circuit = Circuit(2 * n, mctoffoli_gates(n, use_cnx))
    return Benchmark(f"mctoffoli-{n}-{k}", mctoffoli_pre(n, k), circuit, mctoffoli_post(n, k))


def h2_benchmark(n: int) -> Benchmark:
    gates = [single_qubit_gate("h", q) for q in range(1, n + 1) for _ in range(2)]
    return Benchmark(f"h2-{n}", basis_all(n), Circuit(n, gates), basis_all(n))


def hxh_benchmark(n: int) -> Benchmark:
    """H X H on every qubit acts as Z"""
    gates = [single_qubit_gate(name, q) for q in range(1, n + 1) for name in ("h", "x", "h")]
    return Benchmark(f"hxh-{n}", basis_all(n), Circuit(n, gates), parity_phase(n))


def param_ghz_benchmark() -> Benchmark:
    return Benchmark("param-ghz", zeros_param(), parse_pqasm("H 1\nCXN\n"), ghz_param())


def hamiltonian_benchmark() -> Benchmark:
    """Diagonal Hamiltonian simulation; the phases cancel on even-parity inputs"""
    circuit = parse_pqasm("PH_FIRST -2\nCXN\nRZ_LAST -4\nCXNINV\n")
    return Benchmark("hamiltonian", even_parity_param(), circuit, even_parity_param())


def fermionic_benchmark(angle: int = FERMIONIC_ANGLE) -> Benchmark:
    """Single fermionic excitation at angle * pi/4; |0^n> is a fixed point for n >= 2"""
    directives = [
        "RX_FIRST 2", "H_LAST", "CXN", f"RZ_LAST {angle}", "CXNINV", "RX_FIRST -2", "H_LAST",
        "H_FIRST", "RX_LAST 2", "CXN", f"RZ_LAST {-angle}", "CXNINV", "H_FIRST", "RX_LAST -2",
    ]
    circuit = parse_pqasm("\n".join(directives) + "\n")
    return Benchmark("fermionic", zeros_param(2), circuit, zeros_param(2))


CLIFFORD_T_GATES = ("h", "s", "sdg", "t", "tdg", "x", "z", "cx")


def random_clifford_t(n: int, length: int, seed: int = DEFAULT_BENCHMARK_SEED) -> Circuit:
    """Random Clifford+T circuit, deterministic in seed"""
    rng = np.random.default_rng(seed)
    names = [g for g in CLIFFORD_T_GATES if n >= 2 or g != "cx"]
    gates = []
    for _ in range(length):
        name = names[int(rng.integers(len(names)))]
        if name == "cx":
            control, target = (int(q) + 1 for q in rng.choice(n, size=2, replace=False))
            gates.append(_cx(control, target))
        else:
            gates.append(single_qubit_gate(name, int(rng.integers(n)) + 1))
    return Circuit(n, gates)


BENCHMARKS: Dict[str, Callable[..., Benchmark]] = {
    "bell": lambda n, k: bell_benchmark(),
    "ghz": lambda n, k: ghz_benchmark(n),
    "ghz-all": lambda n, k: ghz_benchmark(n, all_inputs=True),
    "bv": lambda n, k: bv_benchmark(n, bv_single_pattern(n)),
    "bv-all": lambda n, k: bv_benchmark(n),
    "mctoffoli": lambda n, k: mctoffoli_benchmark(n, k),
    "h2": lambda n, k: h2_benchmark(n),
    "hxh": lambda n, k: hxh_benchmark(n),
    "param-ghz": lambda n, k: param_ghz_benchmark(),
    "hamiltonian": lambda n, k: hamiltonian_benchmark(),
    "fermionic": lambda n, k: fermionic_benchmark(),
}


def generate(family: str, n: int = 2, k: int = 0) -> Benchmark:
    if family not in BENCHMARKS:
        raise InvalidPredicateError(f"unknown benchmark family '{family}'")
    return BENCHMARKS[family](n, k)
