import pytest

from core.lsta_ops import enumerate_language, validate
from models.amplitude import MINUS_ONE, ONE, ZERO
from models.automaton import tree_from_leaves
from models.enums import PredicateKind
from models.errors import InvalidPredicateError
from speckit.predicates import (
    PredicateFamily,
    basis_all,
    basis_single,
    build_predicate,
    bv_post,
    bv_pre,
    eq_vectors,
    even_parity_param,
    ghz_fixed,
    mctoffoli_post,
    mctoffoli_pre,
    mctoffoli_role,
    parity_phase,
    zeros_param,
)


def basis(bits: str, indexed: bool = True):
    values = [ZERO] * 2 ** len(bits)
    values[int(bits, 2)] = ONE
    return tree_from_leaves(values, indexed=indexed)


def language(a, height):
    return enumerate_language(a, height)


def test_basis_sets():
    assert language(basis_all(3), 3) == {basis(format(i, "03b")) for i in range(8)}
    assert language(basis_single("101"), 3) == {basis("101")}


def test_bernstein_vazirani_conditions():
    assert language(bv_pre(2), 5) == {basis(b) for b in ("00001", "00101", "10001", "10101")}
    assert language(bv_post(2), 5) == {basis(b) for b in ("00001", "00111", "11001", "11111")}
    assert language(bv_pre(2, "10"), 5) == {basis("10001")}
    assert language(bv_post(2, "10"), 5) == {basis("11001")}


def test_mctoffoli_layout():
    assert [mctoffoli_role(3, q) for q in range(1, 7)] == \
        ["control", "control", "ancilla", "control", "ancilla", "target"]


@pytest.mark.parametrize("k, flipped", [(0, ("0000", "0100", "1000", "1101")),
                                        (1, ("0001", "0101", "1001", "1100"))])
def test_mctoffoli_conditions(k, flipped):
    assert language(mctoffoli_pre(2, k), 4) == {basis(f"{c}0{k}") for c in ("00", "01", "10", "11")}
    assert language(mctoffoli_post(2, k), 4) == {basis(b) for b in flipped}


def test_eq_vectors_are_suffixes_of_ones():
    expected = {tree_from_leaves([ZERO] * i + [ONE] * (4 - i)) for i in range(4)}
    assert language(eq_vectors(2), 2) == expected


def test_parity_phase():
    expected = {tree_from_leaves(v) for v in ([ONE, ZERO, ZERO, ZERO], [ZERO, MINUS_ONE, ZERO, ZERO],
                                              [ZERO, ZERO, MINUS_ONE, ZERO], [ZERO, ZERO, ZERO, ONE])}
    assert language(parity_phase(2), 2) == expected


def test_parameterized_zero_states_respect_the_minimum_width():
    assert language(zeros_param(2), 3) == {basis("00", indexed=False), basis("000", indexed=False)}


def test_even_parity_states():
    expected = {basis(b, indexed=False) for b in ("0", "00", "11")}
    assert language(even_parity_param(), 2) == expected


@pytest.mark.parametrize("family, direct", [
    (PredicateFamily(PredicateKind.BASIS_ALL, n=3), basis_all(3)),
    (PredicateFamily(PredicateKind.BASIS_SINGLE, bits="0110"), basis_single("0110")),
    (PredicateFamily(PredicateKind.BASIS_SINGLE, n=3), basis_single("000")),
    (PredicateFamily(PredicateKind.GHZ_FIXED, n=4), ghz_fixed(4)),
    (PredicateFamily(PredicateKind.BV_POST, n=2, bits="01"), bv_post(2, "01")),
    (PredicateFamily(PredicateKind.MCTOFFOLI_PRE, n=3, k=1), mctoffoli_pre(3, 1)),
    (PredicateFamily(PredicateKind.ZEROS_PARAM, min_qubits=3), zeros_param(3)),
])
def test_build_predicate_dispatches(family, direct):
    assert build_predicate(family) == direct


@pytest.mark.parametrize("kind", list(PredicateKind))
def test_every_family_builds_a_valid_automaton(kind):
    a = build_predicate(PredicateFamily(kind, n=2))
    assert validate(a).ok
    assert a.roots


@pytest.mark.parametrize("family", [
    PredicateFamily(PredicateKind.BASIS_ALL),
    PredicateFamily(PredicateKind.GHZ_FIXED, n=0),
    PredicateFamily(PredicateKind.BASIS_SINGLE, bits="012"),
    PredicateFamily(PredicateKind.BASIS_SINGLE, bits=""),
    PredicateFamily(PredicateKind.BV_PRE, n=2, bits="1"),
    PredicateFamily(PredicateKind.MCTOFFOLI_POST, n=2, k=2),
    PredicateFamily(PredicateKind.ZEROS_PARAM, min_qubits=0),
])
def test_invalid_parameters(family):
    with pytest.raises(InvalidPredicateError):
        build_predicate(family)
