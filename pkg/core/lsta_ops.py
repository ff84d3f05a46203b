"""Structural operations on LSTAs: validation, membership, enumeration,
union, intersection, trimming and reduction."""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from loguru import logger

from config import ENUMERATION_MAX_HEIGHT
from models.automaton import (
    InternalNode,
    LeafNode,
    Lsta,
    RunWitness,
    StateId,
    StateTree,
    Transition,
    tree_height,
)
from models.errors import LstaValidationError


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self):
        if self.violations:
            raise LstaValidationError(self.violations)


def validate(a: Lsta) -> ValidationReport:
    """Report every structural violation of a"""
    report = ValidationReport()
    for root in sorted(a.roots - a.states):
        report.violations.append(f"root {a.name_of(root)} is not a state")
    for t in sorted(a.transitions, key=lambda t: (t.top, sorted(t.choices))):
        top = a.name_of(t.top)
        if not t.choices:
            report.violations.append(f"empty choice set on a transition of {top}")
        if t.is_leaf != (t.bottom is None):
            report.violations.append(f"arity mismatch on {top} -> {t.symbol}")
        used = [t.top] + (list(t.bottom) if t.bottom is not None else [])
        for q in used:
            if q not in a.states:
                report.violations.append(f"dangling state {a.name_of(q)} in a transition of {top}")
    for q, ts in a.by_top.items():
        for t1, t2 in combinations(ts, 2):
            shared = t1.choices & t2.choices
            if shared:
                report.violations.append(
                    f"choices {sorted(shared)} shared by two transitions of {a.name_of(q)}")
    return report


def symbol_matches(t: Transition, node: StateTree) -> bool:
    if isinstance(node, LeafNode):
        return t.is_leaf and t.symbol.value == node.value
    return not t.is_leaf and t.symbol == node.symbol


def _candidate_choices(a: Lsta, states: Iterable[StateId]) -> List[int]:
    """Choices offered by every state in the set"""
    common: Optional[Set[int]] = None
    for q in states:
        offered: Set[int] = set()
        for t in a.transitions_of(q):
            offered |= t.choices
        common = offered if common is None else common & offered
        if not common:
            return []
    return sorted(common or ())


def accepts(a: Lsta, tree: StateTree) -> Optional[RunWitness]:
    """Accepting run of a on tree, if there is one"""
    for root in sorted(a.roots):
        found = _accept_levels(a, [(tree, root)], {})
        if found is not None:
            choices, transitions = found
            return RunWitness(tree, root, tuple(choices), tuple(transitions))
    return None


def _accept_levels(a: Lsta, level: List[Tuple[StateTree, StateId]],
                   failed: Dict[FrozenSet, bool]) -> Optional[Tuple[List[int], List[Tuple[Transition, ...]]]]:
    if not level:
        return [], []
    key = frozenset((id(node), q) for node, q in level)
    if key in failed:
        return None
    states = {q for _, q in level}
    for c in _candidate_choices(a, states):
        used: List[Transition] = []
        below: List[Tuple[StateTree, StateId]] = []
        for node, q in level:
            t = a.transition_for_choice(q, c)
            if t is None or not symbol_matches(t, node):
                break
            used.append(t)
            if isinstance(node, InternalNode):
                below.append((node.left, t.left))
                below.append((node.right, t.right))
        else:
            rest = _accept_levels(a, _dedupe(below), failed)
            if rest is not None:
                choices, transitions = rest
                return [c] + choices, [tuple(dict.fromkeys(used))] + transitions
    failed[key] = True
    return None


def _dedupe(level: List[Tuple[StateTree, StateId]]) -> List[Tuple[StateTree, StateId]]:
    seen = set()
    result = []
    for node, q in level:
        key = (id(node), q)
        if key not in seen:
            seen.add(key)
            result.append((node, q))
    return result


def enumerate_language(a: Lsta, max_height: int = ENUMERATION_MAX_HEIGHT) -> Set[StateTree]:
    """All accepted trees of height at most max_height"""
    trees: Set[StateTree] = set()
    for root in a.roots:
        for subtrees in _enumerate_level(a, frozenset([root]), 0, max_height):
            trees.add(subtrees[root])
    return trees


def _enumerate_level(a: Lsta, states: FrozenSet[StateId], depth: int,
                     max_height: int) -> Iterator[Dict[StateId, StateTree]]:
    # nodes sharing a state at one level have identical subtrees
    seen_gammas = set()
    for c in _candidate_choices(a, states):
        gamma = {q: a.transition_for_choice(q, c) for q in states}
        gamma_key = frozenset(gamma.values())
        if gamma_key in seen_gammas:
            continue
        seen_gammas.add(gamma_key)
        below = frozenset(q for t in gamma.values() if not t.is_leaf for q in t.bottom)
        if below and depth >= max_height:
            continue
        if not below:
            yield {q: LeafNode(t.symbol.value) for q, t in gamma.items()}
            continue
        for lower in _enumerate_level(a, below, depth + 1, max_height):
            yield {q: _subtree(t, lower) for q, t in gamma.items()}


def _subtree(t: Transition, lower: Dict[StateId, StateTree]) -> StateTree:
    if t.is_leaf:
        return LeafNode(t.symbol.value)
    return InternalNode(t.symbol, lower[t.left], lower[t.right])


def language_up_to(a: Lsta, max_height: int, exact_height: Optional[int] = None) -> Set[StateTree]:
    """Enumeration filtered to one height when exact_height is given"""
    trees = enumerate_language(a, max_height)
    if exact_height is None:
        return trees
    return {t for t in trees if tree_height(t) == exact_height}


def rename_states(a: Lsta, mapping: Callable[[StateId], StateId]) -> Lsta:
    """Apply a state renaming; transitions that collide are merged by set semantics"""
    transitions = [
        Transition(mapping(t.top), t.symbol,
                   None if t.bottom is None else (mapping(t.left), mapping(t.right)), t.choices)
        for t in a.transitions
    ]
    names = {}
    for q in sorted(a.states):
        names.setdefault(mapping(q), a.name_of(q))
    return Lsta.build((mapping(r) for r in a.roots), transitions,
                      (mapping(q) for q in a.states), names)


def union(a: Lsta, b: Lsta) -> Lsta:
    """Disjoint union; |union| = |a| + |b|"""
    offset = a.next_free_state - min(b.states, default=0)
    shifted = rename_states(b, lambda q: q + offset)
    names = dict(a.names)
    names.update(shifted.names)
    return Lsta.build(a.roots | shifted.roots, a.transitions | shifted.transitions,
                      a.states | shifted.states, names)


def intersection(a: Lsta, b: Lsta) -> Lsta:
    """Product automaton over reachable state pairs, choice pairs renumbered"""
    pairs: Dict[Tuple[StateId, StateId], StateId] = {}
    names: Dict[StateId, str] = {}
    pending: List[Tuple[StateId, StateId]] = []

    def pair_id(p: StateId, q: StateId) -> StateId:
        if (p, q) not in pairs:
            pairs[(p, q)] = len(pairs)
            names[pairs[(p, q)]] = f"{a.name_of(p)}&{b.name_of(q)}"
            pending.append((p, q))
        return pairs[(p, q)]

    roots = [pair_id(p, q) for p in sorted(a.roots) for q in sorted(b.roots)]
    raw: List[Tuple[StateId, Transition, Transition]] = []
    while pending:
        p, q = pending.pop()
        for t1 in a.transitions_of(p):
            for t2 in b.transitions_of(q):
                if t1.symbol != t2.symbol:
                    continue
                if not t1.is_leaf:
                    pair_id(t1.left, t2.left)
                    pair_id(t1.right, t2.right)
                raw.append((pairs[(p, q)], t1, t2))

    choice_pairs = sorted({(c1, c2) for _, t1, t2 in raw for c1 in t1.choices for c2 in t2.choices})
    numbering = {pair: i for i, pair in enumerate(choice_pairs)}
    transitions = []
    for top, t1, t2 in raw:
        choices = frozenset(numbering[(c1, c2)] for c1 in t1.choices for c2 in t2.choices)
        bottom = None if t1.is_leaf else (pairs[(t1.left, t2.left)], pairs[(t1.right, t2.right)])
        transitions.append(Transition(top, t1.symbol, bottom, choices))
    return Lsta.build(roots, transitions, pairs.values(), names)


def trim(a: Lsta) -> Lsta:
    """Drop unproductive states, then states unreachable from the roots"""
    productive: Set[StateId] = set()
    changed = True
    while changed:
        changed = False
        for t in a.transitions:
            if t.top in productive:
                continue
            if t.is_leaf or (t.left in productive and t.right in productive):
                productive.add(t.top)
                changed = True

    useful = [t for t in a.transitions
              if t.top in productive and (t.is_leaf or (t.left in productive and t.right in productive))]
    by_top: Dict[StateId, List[Transition]] = {}
    for t in useful:
        by_top.setdefault(t.top, []).append(t)

    reachable: Set[StateId] = set()
    stack = [r for r in a.roots if r in productive]
    while stack:
        q = stack.pop()
        if q in reachable:
            continue
        reachable.add(q)
        for t in by_top.get(q, ()):
            if not t.is_leaf:
                stack.extend(t.bottom)

    transitions = [t for t in useful if t.top in reachable]
    return Lsta.build(a.roots & reachable, transitions, reachable, a.names)


def merge_choice_variants(transitions: Iterable[Transition]) -> FrozenSet[Transition]:
    """Union the choice sets of transitions identical up to choices"""
    merged: Dict[Tuple, Set[int]] = {}
    for t in transitions:
        merged.setdefault((t.top, t.symbol, t.bottom), set()).update(t.choices)
    return frozenset(Transition(top, symbol, bottom, frozenset(choices))
                     for (top, symbol, bottom), choices in merged.items())


def reduce(a: Lsta) -> Lsta:
    """Language-preserving reduction to fixpoint, trimming first"""
    current = trim(a)
    before = current.size
    while True:
        transitions = merge_choice_variants(current.transitions)
        signatures: Dict[FrozenSet, StateId] = {}
        representative: Dict[StateId, StateId] = {}
        by_top: Dict[StateId, List[Transition]] = {q: [] for q in current.states}
        for t in transitions:
            by_top[t.top].append(t)
        for q in sorted(current.states):
            signature = frozenset((t.symbol, t.bottom, t.choices) for t in by_top[q])
            representative[q] = signatures.setdefault(signature, q)
        merged = rename_states(Lsta.build(current.roots, transitions, current.states, current.names),
                               lambda q: representative[q])
        merged = Lsta.build(merged.roots, merge_choice_variants(merged.transitions),
                            merged.states, merged.names)
        if merged.states == current.states and merged.transitions == current.transitions:
            break
        current = merged
    logger.debug(f"reduce: {before} -> {current.size} states")
    return current


def transition_count(a: Lsta) -> int:
    return len(a.transitions)


def any_tree_within(a: Lsta, max_height: int) -> Optional[StateTree]:
    """Some accepted tree of height at most max_height, without enumerating the rest"""
    for root in sorted(a.roots):
        for subtrees in _enumerate_level(a, frozenset([root]), 0, max_height):
            return subtrees[root]
    return None
