import pytest

from models.circuit import GateOp
from models.enums import GateKind
from models.errors import InvalidPredicateError
from speckit.benchmarks import (
    BENCHMARKS,
    CLIFFORD_T_GATES,
    bv_single_pattern,
    fermionic_benchmark,
    generate,
    mctoffoli_gates,
    random_clifford_t,
)


def test_every_family_generates():
    for family in BENCHMARKS:
        bench = generate(family, 2, 0)
        assert bench.pre.roots and bench.post.roots
        assert len(bench.circuit) > 0


def test_unknown_family():
    with pytest.raises(InvalidPredicateError):
        generate("qft")


@pytest.mark.parametrize("family", ["ghz", "bv", "mctoffoli"])
def test_width_must_be_positive(family):
    with pytest.raises(InvalidPredicateError):
        generate(family, 0)


def test_widths():
    assert generate("ghz", 5).circuit.qubit_count == 5
    assert generate("bv", 3).circuit.qubit_count == 7
    assert generate("mctoffoli", 4).circuit.qubit_count == 8
    assert generate("param-ghz").is_parameterized


def test_bv_hidden_string_pattern():
    assert bv_single_pattern(5) == "10101"
    assert generate("bv", 3).name == "bv-3"
    assert generate("bv-all", 3).name == "bv-all-3"


def test_mctoffoli_ladder():
    gates = mctoffoli_gates(3)
    assert len(gates) == 5
    assert gates[0] == GateOp.controlled((1, 2), GateOp.x(3))
    assert gates[1] == GateOp.controlled((3, 4), GateOp.x(5))
    assert gates[2] == GateOp.controlled((5,), GateOp.x(6))
    assert gates[3:] == gates[1::-1]
    assert mctoffoli_gates(3, use_cnx=True) == [GateOp.controlled((1, 2, 4), GateOp.x(6))]


def test_fermionic_angle_is_configurable():
    circuit = fermionic_benchmark(3).circuit
    angles = [g.angle for g in circuit.gates if g.name == "rz"]
    assert angles == [3, -3]


def test_random_clifford_t_is_deterministic():
    first = random_clifford_t(3, 40, seed=5)
    assert first == random_clifford_t(3, 40, seed=5)
    assert first != random_clifford_t(3, 40, seed=6)
    assert {g.name for g in first.gates} <= set(CLIFFORD_T_GATES)
    for g in first.gates:
        if g.kind is GateKind.CONTROLLED:
            assert g.controls[0] != g.target
        assert all(1 <= q <= 3 for q in g.qubits)


def test_single_qubit_clifford_t_has_no_cnot():
    assert all(g.kind is not GateKind.CONTROLLED for g in random_clifford_t(1, 25).gates)
