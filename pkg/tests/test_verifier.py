import pytest

from core.lsta_ops import accepts
from core.verifier import CircuitVerifier, run_eqcheck, run_verification
from frontend.pqasm_parser import parse_pqasm
from frontend.qasm_parser import single_qubit_gate
from models.automaton import INTERNAL_ANY, Internal, Lsta, internal, leaf
from models.amplitude import ONE
from models.circuit import Circuit
from models.enums import BugScenario, Verdict
from models.report import VerificationOptions
from speckit.benchmarks import generate, random_clifford_t
from speckit.bug_injection import inject_bug
from speckit.lsta_format import parse_term
from speckit.predicates import basis_all, zeros_param
from tests.oracle import cx


def verify(bench, **options):
    return run_verification(bench.pre, bench.circuit, bench.post, VerificationOptions(**options))


@pytest.mark.parametrize("family, n, k", [
    ("bell", 2, 0),
    ("ghz", 8, 0),
    ("ghz-all", 3, 0),
    ("bv", 3, 0),
    ("bv-all", 2, 0),
    ("mctoffoli", 3, 0),
    ("mctoffoli", 3, 1),
    ("h2", 3, 0),
    ("hxh", 3, 0),
    ("param-ghz", 2, 0),
    ("hamiltonian", 2, 0),
    ("fermionic", 2, 0),
])
def test_benchmarks_pass(family, n, k):
    report = verify(generate(family, n, k))
    assert report.verdict is Verdict.PASS, report.message
    assert report.exit_code == 0
    assert report.witness is None


def test_pass_without_reduction():
    assert verify(generate("ghz", 4), reduce_after_gate=False).verdict is Verdict.PASS


@pytest.mark.parametrize("family", ["bell", "h2", "param-ghz"])
def test_equality_check(family):
    assert verify(generate(family, 2), check_equality=True).reverse_holds is True


def test_inclusion_without_equality():
    bench = generate("bv", 2)
    report = run_verification(basis_all(5), bench.circuit, bench.post, VerificationOptions(check_equality=True))
    assert report.verdict is Verdict.FAIL
    assert report.reverse_holds is True


@pytest.mark.parametrize("scenario, seed", [(BugScenario.MISS_GATE, 0), (BugScenario.MISS_GATE, 5),
                                            (BugScenario.FLIP_CX, 1), (BugScenario.FLIP_CX, 9)])
def test_injected_bugs_are_caught(scenario, seed):
    bench = generate("ghz", 8)
    buggy = inject_bug(bench.circuit, scenario, seed)
    verifier = CircuitVerifier()
    report = verifier.run_verification(bench.pre, buggy, bench.post)
    assert report.verdict is Verdict.FAIL
    assert report.exit_code == 1
    assert report.witness_direction == "forward"

    image, _ = verifier.post_image(bench.pre, buggy)
    witness = parse_term(report.witness)
    assert accepts(image, witness) is not None
    assert accepts(bench.post, witness) is None


def test_report_records_every_gate():
    bench = generate("ghz", 4)
    report = verify(bench)
    assert [r.gate_index for r in report.gate_sizes] == list(range(len(bench.circuit)))
    assert set(report.timings) == {"post_computation", "inclusion"}
    assert "verdict=pass" in report.to_key_values()
    assert "max_states=" in report.to_key_values()


def test_budget_exhaustion_is_an_error():
    report = verify(generate("ghz", 3), inclusion_budget=1)
    assert report.verdict is Verdict.ERROR
    assert report.exit_code == 2
    assert "budget" in report.message


def test_gate_errors_name_the_gate():
    circuit = Circuit(1, [single_qubit_gate("h", 1)])
    report = run_verification(zeros_param(), circuit, zeros_param())
    assert report.verdict is Verdict.ERROR
    assert "gate 0" in report.message


def test_invalid_precondition_is_an_error():
    broken = Lsta.build([0], [internal(0, Internal(1), 1, 1, [1]), internal(0, Internal(1), 1, 1, [1, 2]),
                              leaf(1, ONE, [1])])
    report = run_verification(broken, Circuit(1, []), basis_all(1))
    assert report.verdict is Verdict.ERROR


def test_parameterized_circuit_rejects_mixed_conditions():
    mixed = Lsta.build([0], [internal(0, Internal(1), 1, 1, [1]), internal(1, INTERNAL_ANY, 2, 2, [1]),
                             leaf(2, ONE, [1])])
    report = run_verification(mixed, parse_pqasm("XALL\n"), zeros_param())
    assert report.verdict is Verdict.ERROR
    assert "mixes" in report.message


def test_identity_circuit_equivalence():
    hh = Circuit(1, [single_qubit_gate("h", 1), single_qubit_gate("h", 1)])
    report = run_eqcheck(hh, Circuit(1, []))
    assert report.verdict is Verdict.PASS
    assert report.reverse_holds is True


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_circuit_is_equivalent_to_itself(seed):
    circuit = random_clifford_t(3, 15, seed)
    assert run_eqcheck(circuit, circuit).verdict is Verdict.PASS


def test_different_phases_are_not_equivalent():
    report = run_eqcheck(Circuit(1, [single_qubit_gate("s", 1)]), Circuit(1, [single_qubit_gate("t", 1)]))
    assert report.verdict is Verdict.FAIL
    assert report.witness_direction == "forward"


def test_eqcheck_needs_equal_widths():
    report = run_eqcheck(Circuit(2, []), Circuit(3, []))
    assert report.verdict is Verdict.ERROR
    assert report.exit_code == 2


def test_eqcheck_rejects_parameterized_circuits():
    assert run_eqcheck(parse_pqasm("CXN\n"), parse_pqasm("CXN\n")).verdict is Verdict.ERROR


@pytest.mark.parametrize("n", [16, 32])
def test_wide_ghz_passes(n):
    assert verify(generate("ghz", n)).verdict is Verdict.PASS


def test_bell_without_its_cnot_fails():
    bench = generate("bell")
    report = run_verification(bench.pre, Circuit(2, bench.circuit.gates[:1]), bench.post)
    assert report.verdict is Verdict.FAIL
    assert report.witness.startswith("x1(")


@pytest.mark.parametrize("family, n, k, scenario", [
    ("bv-all", 3, 0, BugScenario.MISS_GATE),
    ("mctoffoli", 4, 0, BugScenario.FLIP_CX),
    ("mctoffoli", 4, 1, BugScenario.FLIP_CX),
    ("h2", 8, 0, BugScenario.MISS_GATE),
    ("hxh", 8, 0, BugScenario.MISS_GATE),
])
def test_benchmark_bugs_fail(family, n, k, scenario):
    bench = generate(family, n, k)
    assert verify(bench).verdict is Verdict.PASS
    buggy = inject_bug(bench.circuit, scenario, 4)
    report = run_verification(bench.pre, buggy, bench.post)
    assert report.verdict is Verdict.FAIL


def test_flipped_cnot_breaks_equivalence():
    base = random_clifford_t(6, 10, seed=2)
    correct = Circuit(6, base.gates + [cx(1, 2)])
    flipped = Circuit(6, base.gates + [cx(2, 1)])
    assert run_eqcheck(correct, correct).verdict is Verdict.PASS
    assert run_eqcheck(correct, flipped).verdict is Verdict.FAIL


@pytest.mark.slow
@pytest.mark.parametrize("family, n, k", [
    ("ghz", 64, 0),
    ("ghz-all", 64, 0),
    ("bv-all", 9, 0),
    ("mctoffoli", 8, 0),
    ("mctoffoli", 8, 1),
    ("h2", 12, 0),
    ("hxh", 12, 0),
])
def test_full_size_benchmarks_pass(family, n, k):
    report = verify(generate(family, n, k))
    assert report.verdict is Verdict.PASS, report.message


@pytest.mark.slow
@pytest.mark.parametrize("seed", [0, 1])
def test_six_qubit_random_circuit_equivalence(seed):
    circuit = random_clifford_t(6, 30, seed)
    assert run_eqcheck(circuit, circuit).verdict is Verdict.PASS
    buggy = inject_bug(circuit, BugScenario.MISS_GATE, seed)
    assert run_eqcheck(circuit, buggy).verdict is Verdict.FAIL
