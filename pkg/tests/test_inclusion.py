import pytest
from hypothesis import given

from core.emptiness import check_nonempty
from core.inclusion import equivalent, includes
from core.lsta_ops import accepts, enumerate_language, intersection, reduce, trim, union
from models.amplitude import ONE
from models.automaton import Internal, Lsta, internal, leaf
from models.errors import BudgetExhaustedError
from speckit.predicates import basis_all, basis_single, eq_vectors, ghz_all_fixed, parity_phase
from tests.oracle import layered_pairs, trees_lsta, tree_sets


def test_nonempty_witness_is_accepted(bell_states, ghz3_all):
    for a in (bell_states, ghz3_all, eq_vectors(3)):
        tree = check_nonempty(a)
        assert tree is not None
        assert accepts(a, tree) is not None


def test_empty_language():
    no_leaves = Lsta.build([0], [internal(0, Internal(1), 0, 0, [1])])
    assert check_nonempty(no_leaves) is None
    assert check_nonempty(Lsta.build([], [leaf(0, ONE, [1])])) is None


def test_bell_equals_ghz_all_two(bell_states):
    assert equivalent(bell_states, ghz_all_fixed(2))
    assert equivalent(bell_states, reduce(bell_states))


def test_inclusion_failure_carries_counterexample(basis2, bell_states):
    result = includes(basis2, bell_states)
    assert not result
    assert accepts(basis2, result.counterexample) is not None
    assert accepts(bell_states, result.counterexample) is None


def test_subset_inclusion():
    single = basis_single("101")
    assert includes(single, basis_all(3))
    assert not includes(basis_all(3), single)
    assert not includes(parity_phase(3), basis_all(3))


def test_no_roots_on_the_right(basis2):
    assert not includes(basis2, Lsta.build([], []))
    assert includes(Lsta.build([], []), basis2)


def test_budget_exhaustion():
    with pytest.raises(BudgetExhaustedError):
        includes(basis_all(3), basis_all(3), budget=1)


@given(tree_sets(2), tree_sets(2))
def test_inclusion_matches_enumeration(left, right):
    a, b = trees_lsta(left), trees_lsta(right)
    result = includes(a, b)
    assert result.holds == (enumerate_language(a, 2) <= enumerate_language(b, 2))
    if not result.holds:
        assert accepts(a, result.counterexample) is not None
        assert accepts(b, result.counterexample) is None


@given(tree_sets(2), tree_sets(2))
def test_union_includes_its_parts(left, right):
    a, b = trees_lsta(left), trees_lsta(right)
    assert includes(a, union(a, b))
    assert includes(b, union(a, b))


def test_branches_without_a_common_choice_are_empty():
    a = Lsta.build([0], [internal(0, Internal(1), 1, 2, [1]), leaf(1, ONE, [1]), leaf(2, ONE, [2])])
    assert check_nonempty(a) is None
    assert enumerate_language(a, 1) == set()
    shared = Lsta.build([0], [internal(0, Internal(1), 1, 2, [1]), leaf(1, ONE, [1]), leaf(2, ONE, [1, 2])])
    assert check_nonempty(shared) is not None


@given(layered_pairs())
def test_inclusion_matches_enumeration_on_layered_automata(case):
    n, a, b = case
    result = includes(a, b)
    assert result.holds == (enumerate_language(a, n) <= enumerate_language(b, n))
    if not result.holds:
        assert result.counterexample in enumerate_language(a, n)
        assert result.counterexample not in enumerate_language(b, n)


@given(layered_pairs())
def test_emptiness_matches_enumeration_on_layered_automata(case):
    n, a, _ = case
    witness = check_nonempty(a)
    language = enumerate_language(a, n)
    assert (witness is None) == (not language)
    if witness is not None:
        assert witness in language


@given(layered_pairs())
def test_boolean_operations_match_enumeration(case):
    n, a, b = case
    left, right = enumerate_language(a, n), enumerate_language(b, n)
    assert enumerate_language(union(a, b), n) == left | right
    assert enumerate_language(intersection(a, b), n) == left & right
    assert enumerate_language(trim(a), n) == left
    assert enumerate_language(reduce(a), n) == left
    assert equivalent(reduce(a), a)
