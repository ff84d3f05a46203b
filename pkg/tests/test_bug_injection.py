import pytest

from frontend.pqasm_parser import parse_pqasm
from models.circuit import Circuit
from models.enums import BugScenario
from models.errors import BugInjectionError
from speckit.benchmarks import ghz_benchmark, random_clifford_t
from speckit.bug_injection import inject_bug
from tests.oracle import cx


@pytest.mark.parametrize("scenario", list(BugScenario))
def test_same_seed_same_bug(scenario):
    circuit = random_clifford_t(4, 30, seed=7)
    assert inject_bug(circuit, scenario, 3) == inject_bug(circuit, scenario, 3)


def test_miss_gate_drops_exactly_one_gate():
    circuit = random_clifford_t(3, 12, seed=1)
    buggy = inject_bug(circuit, BugScenario.MISS_GATE, 11)
    assert buggy.qubit_count == circuit.qubit_count
    assert len(buggy) == len(circuit) - 1
    remaining = iter(circuit.gates)
    assert all(any(g == original for original in remaining) for g in buggy.gates)


def test_miss_gate_works_on_parameterized_circuits():
    circuit = parse_pqasm("H 1\nCXN\nXALL\n")
    buggy = inject_bug(circuit, BugScenario.MISS_GATE, 0)
    assert buggy.is_parameterized
    assert len(buggy) == 2


def test_flip_cx_swaps_control_and_target():
    circuit = ghz_benchmark(5).circuit
    buggy = inject_bug(circuit, BugScenario.FLIP_CX, 2)
    changed = [(a, b) for a, b in zip(circuit.gates, buggy.gates) if a != b]
    assert len(changed) == 1
    original, flipped = changed[0]
    assert flipped == cx(original.target, original.controls[0])


def test_flip_cx_needs_a_cnot():
    with pytest.raises(BugInjectionError):
        inject_bug(Circuit(2, ghz_benchmark(1).circuit.gates), BugScenario.FLIP_CX, 0)


def test_miss_gate_needs_a_gate():
    with pytest.raises(BugInjectionError):
        inject_bug(Circuit(2, []), BugScenario.MISS_GATE, 0)
