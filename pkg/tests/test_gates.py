import pytest
from hypothesis import given, strategies as st

from models.gate_library import H, T
from core.gates import apply_circuit, apply_controlled, apply_diag, apply_gate, apply_x, product_construction
from core.inclusion import equivalent
from core.lsta_ops import enumerate_language
from frontend.qasm_parser import single_qubit_gate
from models.amplitude import ONE, I
from models.circuit import GateOp
from models.errors import GateArgumentError, NeedsUnfoldError
from speckit.predicates import (
    basis_all,
    basis_single,
    bell,
    eq_vectors,
    ghz_all_fixed,
    ghz_fixed,
    parity_phase,
    zeros_param,
)
from tests.oracle import cx, fixed_gates, run_dense, tree_sets, trees_lsta

PREDICATES = {
    "basis-2": (basis_all(2), 2),
    "bell": (bell(), 2),
    "ghz-all-3": (ghz_all_fixed(3), 3),
    "eq-vectors-2": (eq_vectors(2), 2),
    "parity-3": (parity_phase(3), 3),
}


def gates_for(n: int):
    gates = [single_qubit_gate(name, q) for name in ("h", "y", "t") for q in range(1, n + 1)]
    gates.append(single_qubit_gate("rx", n, 3))
    for c in range(1, n + 1):
        for t in range(1, n + 1):
            if c != t:
                gates.append(cx(c, t))
                gates.append(GateOp.controlled((c,), single_qubit_gate("h", t)))
                gates.append(GateOp.controlled((c,), single_qubit_gate("y", t)))
    if n >= 3:
        gates += [GateOp.controlled((1, 3), GateOp.x(2)), GateOp.controlled((2, 3), GateOp.x(1)),
                  GateOp.controlled((1, 2), single_qubit_gate("z", 3))]
    return gates


CASES = [(name, g) for name, (_, n) in PREDICATES.items() for g in gates_for(n)]


@pytest.mark.parametrize("name, gate", CASES, ids=[f"{n}-{g.label()}" for n, g in CASES])
def test_gate_matches_dense_oracle_on_predicates(name, gate):
    a, n = PREDICATES[name]
    expected = {run_dense(t, [gate], n) for t in enumerate_language(a, n)}
    assert enumerate_language(apply_gate(a, gate), n) == expected


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), tree_sets(n), fixed_gates(n))))
def test_gate_matches_dense_oracle_on_random_automata(case):
    n, trees, gate = case
    a = trees_lsta(trees)
    expected = {run_dense(t, [gate], n) for t in trees}
    assert enumerate_language(apply_gate(a, gate), n) == expected
    assert enumerate_language(apply_gate(a, gate, then_reduce=False), n) == expected


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), tree_sets(n), st.integers(1, n))))
def test_construction_size_bounds(case):
    n, trees, t = case
    a = trees_lsta(trees)
    assert apply_x(a, t).size == a.size
    assert apply_diag(a, t, ONE, I).size == 2 * a.size
    product, _ = product_construction(a, t, H)
    assert product.size <= a.size + 2 * a.size ** 2


@pytest.mark.parametrize("name", sorted(PREDICATES))
def test_controlled_size_bound(name):
    a, n = PREDICATES[name]
    above = apply_controlled(a, (1,), 2, GateOp.x(2))
    assert above.size == a.size + apply_x(a, 2).size
    below = apply_controlled(a, (2,), 1, single_qubit_gate("h", 1))
    assert below.size == a.size + product_construction(a, 1, H)[0].size


def test_bell_circuit():
    out = apply_circuit(basis_all(2), [single_qubit_gate("h", 1), cx(1, 2)])
    assert equivalent(out, bell())


def test_ghz_circuit():
    out = apply_circuit(basis_single("000"), [single_qubit_gate("h", 1), cx(1, 2), cx(1, 3)])
    assert equivalent(out, ghz_fixed(3))


def test_diagonal_fast_path_matches_product():
    a = basis_all(2)
    via_diag = apply_gate(a, GateOp.diagonal(2, ONE, T.u4))
    via_product = apply_gate(a, GateOp.single(2, T))
    assert equivalent(via_diag, via_product)


def test_gate_below_the_tree_is_identity(basis2):
    assert equivalent(apply_gate(basis2, GateOp.x(3)), basis2)
    assert equivalent(apply_gate(basis2, single_qubit_gate("h", 5)), basis2)


@pytest.mark.parametrize("name, angle", [("rz", 2), ("rz", 3), ("ph", 1), ("t", None)])
def test_diagonal_below_the_tree_keeps_leaves(basis2, name, angle):
    gate = single_qubit_gate(name, 3, angle)
    assert enumerate_language(apply_gate(basis2, gate), 3) == enumerate_language(basis2, 3)
    assert enumerate_language(apply_gate(basis2, gate, then_reduce=False), 3) == enumerate_language(basis2, 3)


def test_diagonal_keeps_short_trees_in_a_separate_copy(basis2):
    gate = single_qubit_gate("rz", 3, 2)
    assert apply_diag(basis2, 3, gate.r0, gate.r1).size == 3 * basis2.size
    assert apply_diag(basis2, 3, ONE, gate.r1).size == 2 * basis2.size


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), tree_sets(n), st.integers(1, n))))
def test_diagonal_with_nontrivial_r0_matches_dense_oracle(case):
    n, trees, t = case
    gate = single_qubit_gate("rz", t, 3)
    assert gate.r0 != ONE
    a = trees_lsta(trees)
    assert apply_diag(a, t, gate.r0, gate.r1).size == 2 * a.size
    assert enumerate_language(apply_gate(a, gate), n) == {run_dense(tree, [gate], n) for tree in trees}


def test_parameterized_levels_need_unfolding():
    with pytest.raises(NeedsUnfoldError):
        apply_gate(zeros_param(), single_qubit_gate("h", 1))


@pytest.mark.parametrize("gate", [
    GateOp.controlled((2,), GateOp.x(2)),
    GateOp.controlled((0,), GateOp.x(1)),
    GateOp.x(0),
    GateOp.controlled((1,), GateOp.controlled((2,), GateOp.x(3))),
])
def test_invalid_qubit_arguments(gate, basis2):
    with pytest.raises(GateArgumentError):
        apply_gate(basis2, gate)
