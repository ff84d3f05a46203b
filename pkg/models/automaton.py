from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Tuple, Union

from .amplitude import AlgebraicComplex, format_amplitude

StateId = int
ChoiceSet = FrozenSet[int]


@dataclass(frozen=True)
class Internal:
    """Indexed internal symbol x_i"""
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class InternalAny:
    """Parameterized internal symbol x"""

    def __str__(self):
        return "x"


@dataclass(frozen=True)
class Leaf:
    value: AlgebraicComplex

    def __str__(self):
        return format_amplitude(self.value)


Symbol = Union[Internal, InternalAny, Leaf]
INTERNAL_ANY = InternalAny()


def is_internal(symbol: Symbol) -> bool:
    return not isinstance(symbol, Leaf)


@dataclass(frozen=True)
class Transition:
    top: StateId
    symbol: Symbol
    bottom: Optional[Tuple[StateId, StateId]]
    choices: ChoiceSet

    @property
    def is_leaf(self) -> bool:
        return isinstance(self.symbol, Leaf)

    @property
    def left(self) -> StateId:
        return self.bottom[0]

    @property
    def right(self) -> StateId:
        return self.bottom[1]

    def with_choices(self, choices: Iterable[int]) -> "Transition":
        return Transition(self.top, self.symbol, self.bottom, frozenset(choices))


def internal(top: StateId, symbol: Symbol, left: StateId, right: StateId,
             choices: Iterable[int]) -> Transition:
    return Transition(top, symbol, (left, right), frozenset(choices))


def leaf(top: StateId, value: AlgebraicComplex, choices: Iterable[int]) -> Transition:
    return Transition(top, Leaf(value), None, frozenset(choices))


@dataclass(frozen=True)
class Lsta:
    """Level-synchronized tree automaton; |A| is the number of states"""
    states: FrozenSet[StateId]
    roots: FrozenSet[StateId]
    transitions: FrozenSet[Transition]
    names: Mapping[StateId, str] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def build(cls, roots: Iterable[StateId], transitions: Iterable[Transition],
              states: Iterable[StateId] = (), names: Optional[Mapping[StateId, str]] = None) -> "Lsta":
        roots = frozenset(roots)
        transitions = frozenset(transitions)
        all_states = set(states) | roots
        for t in transitions:
            all_states.add(t.top)
            if t.bottom is not None:
                all_states.update(t.bottom)
        kept_names = {q: n for q, n in (names or {}).items() if q in all_states}
        return cls(frozenset(all_states), roots, transitions, kept_names)

    @cached_property
    def by_top(self) -> Dict[StateId, Tuple[Transition, ...]]:
        index: Dict[StateId, List[Transition]] = {q: [] for q in self.states}
        for t in sorted(self.transitions, key=transition_sort_key):
            index.setdefault(t.top, []).append(t)
        return {q: tuple(ts) for q, ts in index.items()}

    def transitions_of(self, state: StateId) -> Tuple[Transition, ...]:
        return self.by_top.get(state, ())

    def transition_for_choice(self, state: StateId, choice: int) -> Optional[Transition]:
        """The unique transition of state whose choice set holds choice"""
        for t in self.transitions_of(state):
            if choice in t.choices:
                return t
        return None

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def next_free_state(self) -> StateId:
        return max(self.states, default=-1) + 1

    def name_of(self, state: StateId) -> str:
        return self.names.get(state, f"q{state}")

    def internal_symbols(self) -> FrozenSet[Symbol]:
        return frozenset(t.symbol for t in self.transitions if not t.is_leaf)


def _symbol_sort_key(symbol: Symbol):
    if isinstance(symbol, Internal):
        return (0, symbol.index, "")
    if isinstance(symbol, InternalAny):
        return (1, 0, "")
    return (2, 0, format_amplitude(symbol.value))


def transition_sort_key(t: Transition):
    return (t.top, _symbol_sort_key(t.symbol), t.bottom or (-1, -1), tuple(sorted(t.choices)))


class StateInterner:
    """Hands out fresh integer ids for construction keys (tuples, tagged states)"""

    def __init__(self, start: StateId = 0):
        self._ids: Dict[Hashable, StateId] = {}
        self._next = start
        self.names: Dict[StateId, str] = {}

    def __call__(self, key: Hashable, name: Optional[str] = None) -> StateId:
        state = self._ids.get(key)
        if state is None:
            state = self._next
            self._next += 1
            self._ids[key] = state
            if name is not None:
                self.names[state] = name
        return state

    def __contains__(self, key: Hashable) -> bool:
        return key in self._ids

    def items(self):
        return self._ids.items()


# State trees

@dataclass(frozen=True)
class LeafNode:
    value: AlgebraicComplex


@dataclass(frozen=True)
class InternalNode:
    symbol: Union[Internal, InternalAny]
    left: "StateTree"
    right: "StateTree"


StateTree = Union[LeafNode, InternalNode]


def tree_height(tree: StateTree) -> int:
    if isinstance(tree, LeafNode):
        return 0
    return 1 + max(tree_height(tree.left), tree_height(tree.right))


def is_perfect(tree: StateTree) -> bool:
    return _perfect_height(tree) is not None


def _perfect_height(tree: StateTree) -> Optional[int]:
    if isinstance(tree, LeafNode):
        return 0
    left, right = _perfect_height(tree.left), _perfect_height(tree.right)
    if left is None or left != right:
        return None
    return left + 1


def is_quantum_state(tree: StateTree, depth: int = 1) -> bool:
    """Perfect tree whose level d carries x_d"""
    if isinstance(tree, LeafNode):
        return True
    if tree.symbol != Internal(depth):
        return False
    return (is_perfect(tree) and is_quantum_state(tree.left, depth + 1)
            and is_quantum_state(tree.right, depth + 1))


def tree_leaves(tree: StateTree) -> List[AlgebraicComplex]:
    """Leaf values left to right (basis order |0..0> first for quantum states)"""
    if isinstance(tree, LeafNode):
        return [tree.value]
    return tree_leaves(tree.left) + tree_leaves(tree.right)


def tree_from_leaves(values: List[AlgebraicComplex], depth: int = 1, indexed: bool = True) -> StateTree:
    """Perfect tree over a list of 2^n amplitudes"""
    if len(values) == 1:
        return LeafNode(values[0])
    if len(values) % 2:
        raise ValueError("number of leaves must be a power of two")
    half = len(values) // 2
    symbol = Internal(depth) if indexed else INTERNAL_ANY
    return InternalNode(symbol,
                        tree_from_leaves(values[:half], depth + 1, indexed),
                        tree_from_leaves(values[half:], depth + 1, indexed))


def format_term(tree: StateTree) -> str:
    """Term syntax, e.g. x1(x2(0,1/s2), x2(1/s2,0))"""
    if isinstance(tree, LeafNode):
        return format_amplitude(tree.value)
    inner = f"{format_term(tree.left)}, {format_term(tree.right)}"
    if isinstance(tree.left, LeafNode) and isinstance(tree.right, LeafNode):
        inner = f"{format_term(tree.left)},{format_term(tree.right)}"
    return f"{tree.symbol}({inner})"


@dataclass(frozen=True)
class RunWitness:
    """An accepting run: root state plus the common choice and transitions per level"""
    tree: StateTree
    root: StateId
    level_choices: Tuple[int, ...]
    level_transitions: Tuple[Tuple[Transition, ...], ...]


@dataclass(frozen=True)
class InclusionVertex:
    """(D, F): A-states of one level and the B-side covering maps"""
    domain: FrozenSet[StateId]
    maps: FrozenSet[FrozenSet[Tuple[StateId, FrozenSet[StateId]]]]
