from collections import deque
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from loguru import logger

from models.automaton import InternalNode, LeafNode, Lsta, StateId, StateTree, Transition

Gamma = Dict[StateId, Transition]


def pivot_state(a: Lsta, states: FrozenSet[StateId]) -> StateId:
    """State with the fewest transitions, ties broken by smallest id"""
    return min(states, key=lambda q: (len(a.transitions_of(q)), q))


def gammas_by_choice(a: Lsta, states: FrozenSet[StateId]) -> Iterator[Tuple[int, Gamma]]:
    """One transition per state sharing a common choice, indexed by that choice.

    Candidate choices come from the pivot's transitions; disjointness makes
    each candidate determine at most one transition per state.
    """
    pivot = pivot_state(a, states)
    seen = set()
    for c in sorted({c for t in a.transitions_of(pivot) for c in t.choices}):
        gamma: Gamma = {}
        for q in states:
            t = a.transition_for_choice(q, c)
            if t is None:
                break
            gamma[q] = t
        else:
            key = frozenset(gamma.values())
            if key not in seen:
                seen.add(key)
                yield c, gamma


def bottoms(gamma: Gamma) -> FrozenSet[StateId]:
    return frozenset(q for t in gamma.values() if not t.is_leaf for q in t.bottom)


def build_tree(root: StateId, path: List[Gamma]) -> StateTree:
    """Rebuild the tree of a level-by-level sequence of transition choices"""
    levels: List[Dict[StateId, StateTree]] = [dict() for _ in path]
    for depth in range(len(path) - 1, -1, -1):
        for q, t in path[depth].items():
            if t.is_leaf:
                levels[depth][q] = LeafNode(t.symbol.value)
            else:
                below = levels[depth + 1]
                levels[depth][q] = InternalNode(t.symbol, below[t.left], below[t.right])
    return levels[0][root]


def check_nonempty(a: Lsta) -> Optional[StateTree]:
    """Some accepted tree, or None when the language is empty"""
    for root in sorted(a.roots):
        start = frozenset([root])
        parents: Dict[FrozenSet[StateId], Optional[Tuple[FrozenSet[StateId], Gamma]]] = {start: None}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for _, gamma in gammas_by_choice(a, current):
                below = bottoms(gamma)
                if not below:
                    path = [gamma]
                    node = current
                    while parents[node] is not None:
                        node, previous = parents[node]
                        path.append(previous)
                    path.reverse()
                    logger.debug(f"non-empty: witness of height {len(path) - 1}")
                    return build_tree(root, path)
                if below not in parents:
                    parents[below] = (current, gamma)
                    queue.append(below)
    return None
