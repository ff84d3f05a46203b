"""Builders for the pre- and post-conditions of the benchmark families.

Fixed-width sets of basis states come from one stratified construction: a
path state walks down the tree following a small tracker (allowed bit and
next tracker state per level) while zero states fill every branch the path
leaves. Distinct options of one path state get distinct choices, and the
zero state of a level offers all of them.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from loguru import logger

from core.lsta_ops import trim
from models.amplitude import INV_SQRT2, MINUS_ONE, ONE, ZERO, AlgebraicComplex
from models.automaton import INTERNAL_ANY, Internal, Lsta, StateInterner, Transition, internal, leaf
from models.enums import PredicateKind
from models.errors import InvalidPredicateError

TrackerStep = Callable[[int, Hashable], Iterable[Tuple[int, Hashable]]]
LeafValue = Callable[[Hashable], Optional[AlgebraicComplex]]


@dataclass(frozen=True)
class PredicateFamily:
    """A predicate family with its parameters.

    ``n`` is the width (number of data bits for BV, number of controls for
    MCToffoli), ``bits`` fixes a single basis state or hidden string, ``k``
    is the MCToffoli target bit and ``min_qubits`` the smallest width of the
    parameterized zero states.
    """
    kind: PredicateKind
    n: Optional[int] = None
    bits: Optional[str] = None
    k: int = 0
    min_qubits: int = 1


def basis_set(n: int, start: Hashable, step: TrackerStep, leaf_value: LeafValue) -> Lsta:
    """Stratified automaton for a set of basis states, one nonzero leaf per tree"""
    intern = StateInterner(0)
    counters: Dict[int, int] = {}

    def path(level: int, state: Hashable) -> int:
        if ("p", level, state) not in intern:
            counters[level] = counters.get(level, 0) + 1
        return intern(("p", level, state), f"p{level}_{counters[level] - 1}")

    def zero(level: int) -> int:
        return intern(("z", level), f"z{level}")

    transitions: List[Transition] = []
    root = path(1, start)
    frontier = {start: root}
    for level in range(1, n + 1):
        below: Dict[Hashable, int] = {}
        widest = 0
        for state, top in frontier.items():
            options = list(step(level, state))
            widest = max(widest, len(options))
            for choice, (bit, following) in enumerate(options, start=1):
                child = below.setdefault(following, path(level + 1, following))
                left, right = (child, zero(level + 1)) if bit == 0 else (zero(level + 1), child)
                transitions.append(internal(top, Internal(level), left, right, [choice]))
        if level >= 2 and widest:
            transitions.append(internal(zero(level), Internal(level), zero(level + 1), zero(level + 1),
                                        range(1, widest + 1)))
        frontier = below

    for state, top in frontier.items():
        value = leaf_value(state)
        if value is not None:
            transitions.append(leaf(top, value, [1]))
    if n >= 1:
        transitions.append(leaf(zero(n + 1), ZERO, [1]))
    return trim(Lsta.build([root], transitions, names=intern.names))


def _any_bit(level: int, state: Hashable):
    return [(0, state), (1, state)]


def _accept_one(state: Hashable) -> AlgebraicComplex:
    return ONE


def basis_all(n: int) -> Lsta:
    """All 2^n computational basis states"""
    return basis_set(n, 0, _any_bit, _accept_one)


def basis_single(bits: str) -> Lsta:
    """The single basis state |bits>"""
    return basis_set(len(bits), 0, lambda level, s: [(int(bits[level - 1]), s)], _accept_one)


def parity_phase(n: int) -> Lsta:
    """(-1)^popcount(x) |x> for every x of length n"""
    return basis_set(n, 0, lambda level, parity: [(0, parity), (1, 1 - parity)],
                     lambda parity: MINUS_ONE if parity else ONE)


def bell() -> Lsta:
    """The four Bell states with nine transitions"""
    names = ["r", "p", "q", "h", "z", "s"]
    r, p, q, h, z, s = range(6)
    transitions = [
        internal(r, Internal(1), p, q, [1]),
        internal(p, Internal(2), h, z, [1]),
        internal(p, Internal(2), z, h, [2]),
        internal(q, Internal(2), z, s, [1]),
        internal(q, Internal(2), s, z, [2]),
        leaf(h, INV_SQRT2, [1, 2]),
        leaf(z, ZERO, [1, 2]),
        leaf(s, INV_SQRT2, [1]),
        leaf(s, -INV_SQRT2, [2]),
    ]
    return Lsta.build([r], transitions, names=dict(enumerate(names)))


def ghz_fixed(n: int) -> Lsta:
    """1/sqrt2 (|0^n> + |1^n>)"""
    intern = StateInterner(0)
    transitions: List[Transition] = []
    if n == 1:
        root = intern("r", "r")
        transitions.append(internal(root, Internal(1), intern("h", "h"), intern("h"), [1]))
        transitions.append(leaf(intern("h"), INV_SQRT2, [1]))
        return Lsta.build([root], transitions, names=intern.names)

    def state(kind: str, level: int) -> int:
        return intern((kind, level), f"{kind}{level}")

    root = intern("r", "r")
    transitions.append(internal(root, Internal(1), state("a", 2), state("b", 2), [1]))
    for level in range(2, n + 1):
        transitions.append(internal(state("a", level), Internal(level), state("a", level + 1),
                                    state("z", level + 1), [1]))
        transitions.append(internal(state("b", level), Internal(level), state("z", level + 1),
                                    state("b", level + 1), [1]))
        if level >= 3:
            transitions.append(internal(state("z", level), Internal(level), state("z", level + 1),
                                        state("z", level + 1), [1]))
    transitions.append(leaf(state("a", n + 1), INV_SQRT2, [1]))
    transitions.append(leaf(state("b", n + 1), INV_SQRT2, [1]))
    transitions.append(leaf(state("z", n + 1), ZERO, [1]))
    return Lsta.build([root], transitions, names=intern.names)


def ghz_all_fixed(n: int) -> Lsta:
    """All 1/sqrt2 (|0 b2..bn> +- |1 b2'..bn'>) with 5n-1 transitions"""
    intern = StateInterner(0)

    def state(kind: str, level: int) -> int:
        return intern((kind, level), f"{kind}{level}")

    root = intern("r", "r")
    transitions = [internal(root, Internal(1), state("p", 2), state("m", 2), [1])]
    for level in range(2, n + 1):
        plus, minus, zero = state("p", level + 1), state("m", level + 1), state("z", level + 1)
        transitions += [
            internal(state("p", level), Internal(level), plus, zero, [1]),
            internal(state("p", level), Internal(level), zero, plus, [2]),
            internal(state("m", level), Internal(level), zero, minus, [1]),
            internal(state("m", level), Internal(level), minus, zero, [2]),
        ]
        if level >= 3:
            transitions.append(internal(state("z", level), Internal(level), zero, zero, [1, 2]))
    transitions += [
        leaf(state("p", n + 1), INV_SQRT2, [1, 2]),
        leaf(state("m", n + 1), INV_SQRT2, [1]),
        leaf(state("m", n + 1), -INV_SQRT2, [2]),
    ]
    if n >= 2:
        transitions.append(leaf(state("z", n + 1), ZERO, [1, 2]))
    return Lsta.build([root], transitions, names=intern.names)


def eq_vectors(n: int) -> Lsta:
    """The 2^n linearly independent vectors (0,..,0,1,..,1) used for equivalence checking"""
    intern = StateInterner(0)

    def state(kind: str, level: int) -> int:
        return intern((kind, level), f"{kind}{level}")

    transitions: List[Transition] = []
    for level in range(1, n + 1):
        m, o, z = state("M", level + 1), state("O", level + 1), state("Z", level + 1)
        transitions.append(internal(state("M", level), Internal(level), m, o, [1]))
        transitions.append(internal(state("M", level), Internal(level), z, m, [2]))
        if level >= 2:
            transitions.append(internal(state("O", level), Internal(level), o, o, [1, 2]))
            transitions.append(internal(state("Z", level), Internal(level), z, z, [1, 2]))
    transitions += [
        leaf(state("M", n + 1), ONE, [1]),
        leaf(state("O", n + 1), ONE, [1]),
        leaf(state("Z", n + 1), ZERO, [1]),
    ]
    return trim(Lsta.build([state("M", 1)], transitions, names=intern.names))


def zeros_param(min_qubits: int = 1) -> Lsta:
    """|0^n> for every n >= min_qubits; the last level is a pure leaf layer"""
    names = {0: "r", 1: "z", 2: "r_", 3: "z_"}
    r, z, r_leaf, z_leaf = 0, 1, 2, 3
    transitions = [
        internal(r, INTERNAL_ANY, r, z, [1]),
        internal(r, INTERNAL_ANY, r_leaf, z_leaf, [2]),
        internal(z, INTERNAL_ANY, z, z, [1]),
        internal(z, INTERNAL_ANY, z_leaf, z_leaf, [2]),
        leaf(r_leaf, ONE, [1]),
        leaf(z_leaf, ZERO, [1]),
    ]
    root = r
    for i in range(min_qubits - 1, 0, -1):
        prefix = len(names)
        names[prefix] = f"p{i}"
        transitions.append(internal(prefix, INTERNAL_ANY, root, z, [1]))
        root = prefix
    return Lsta.build([root], transitions, names=names)


def ghz_param() -> Lsta:
    """1/sqrt2 (|0^n> + |1^n>) for every n >= 1"""
    names = {0: "r", 1: "a", 2: "b", 3: "z", 4: "a_", 5: "z_"}
    r, a, b, z, a_leaf, z_leaf = range(6)
    transitions = [
        internal(r, INTERNAL_ANY, a, b, [1]),
        internal(r, INTERNAL_ANY, a_leaf, a_leaf, [2]),
        internal(a, INTERNAL_ANY, a, z, [1]),
        internal(a, INTERNAL_ANY, a_leaf, z_leaf, [2]),
        internal(b, INTERNAL_ANY, z, b, [1]),
        internal(b, INTERNAL_ANY, z_leaf, a_leaf, [2]),
        internal(z, INTERNAL_ANY, z, z, [1]),
        internal(z, INTERNAL_ANY, z_leaf, z_leaf, [2]),
        leaf(a_leaf, INV_SQRT2, [1]),
        leaf(z_leaf, ZERO, [1]),
    ]
    return Lsta.build([r], transitions, names=names)


def even_parity_param() -> Lsta:
    """|x> for every x of any length n >= 1 with an even number of ones"""
    names = {0: "e", 1: "o", 2: "z", 3: "e_", 4: "z_"}
    e, o, z, e_leaf, z_leaf = range(5)
    transitions = [
        internal(e, INTERNAL_ANY, e, z, [1]),
        internal(e, INTERNAL_ANY, z, o, [2]),
        internal(e, INTERNAL_ANY, e_leaf, z_leaf, [3]),
        internal(o, INTERNAL_ANY, o, z, [1]),
        internal(o, INTERNAL_ANY, z, e, [2]),
        internal(o, INTERNAL_ANY, z_leaf, e_leaf, [4]),
        internal(z, INTERNAL_ANY, z, z, [1, 2]),
        internal(z, INTERNAL_ANY, z_leaf, z_leaf, [3, 4]),
        leaf(e_leaf, ONE, [5]),
        leaf(z_leaf, ZERO, [5]),
    ]
    return Lsta.build([e], transitions, names=names)


def bv_pre(n: int, hidden: Optional[str] = None) -> Lsta:
    """|s1 0 s2 0 ... sn 0 1> over 2n+1 qubits, for one hidden string or all of them"""

    def step(level: int, state):
        if level == 2 * n + 1:
            return [(1, state)]
        if level % 2 == 0:
            return [(0, state)]
        if hidden is not None:
            return [(int(hidden[level // 2]), state)]
        return [(0, state), (1, state)]

    return basis_set(2 * n + 1, 0, step, _accept_one)


def bv_post(n: int, hidden: Optional[str] = None) -> Lsta:
    """|s1 s1 s2 s2 ... sn sn 1>; the tracker remembers the last hidden bit"""

    def step(level: int, last):
        if level == 2 * n + 1:
            return [(1, last)]
        if level % 2 == 0:
            return [(last, last)]
        if hidden is not None:
            bit = int(hidden[level // 2])
            return [(bit, bit)]
        return [(0, 0), (1, 1)]

    return basis_set(2 * n + 1, 0, step, _accept_one)


def mctoffoli_role(n: int, qubit: int) -> str:
    """'control', 'ancilla' or 'target' for the layout c1 c2 a1 c3 a2 ... cn a(n-1) t"""
    if qubit == 2 * n:
        return "target"
    if qubit <= 2 or qubit % 2 == 0:
        return "control"
    return "ancilla"


def mctoffoli_pre(n: int, k: int) -> Lsta:
    def step(level: int, state):
        role = mctoffoli_role(n, level)
        if role == "control":
            return [(0, state), (1, state)]
        return [(k if role == "target" else 0, state)]

    return basis_set(2 * n, 0, step, _accept_one)


def mctoffoli_post(n: int, k: int) -> Lsta:
    """Target flipped exactly when every control is 1; the tracker carries the AND"""

    def step(level: int, conjunction):
        role = mctoffoli_role(n, level)
        if role == "control":
            return [(0, 0), (1, conjunction)]
        if role == "target":
            return [(conjunction ^ k, conjunction)]
        return [(0, conjunction)]

    return basis_set(2 * n, 1, step, _accept_one)


def _check_width(family: PredicateFamily, minimum: int = 1) -> int:
    if family.n is None or family.n < minimum:
        raise InvalidPredicateError(f"{family.kind.value} needs n >= {minimum}")
    return family.n


def _check_bits(family: PredicateFamily, length: Optional[int]) -> Optional[str]:
    bits = family.bits
    if bits is None:
        return None
    if not bits or set(bits) - {"0", "1"}:
        raise InvalidPredicateError(f"bit string must be non-empty and over 0/1, got {bits!r}")
    if length is not None and len(bits) != length:
        raise InvalidPredicateError(f"bit string {bits!r} must have length {length}")
    return bits


def build_predicate(family: PredicateFamily) -> Lsta:
    """The automaton of a predicate family"""
    kind = family.kind
    if family.k not in (0, 1):
        raise InvalidPredicateError(f"k must be 0 or 1, got {family.k}")
    if family.min_qubits < 1:
        raise InvalidPredicateError("min_qubits must be positive")

    if kind is PredicateKind.BASIS_ALL:
        result = basis_all(_check_width(family))
    elif kind is PredicateKind.BASIS_SINGLE:
        bits = _check_bits(family, family.n)
        if bits is None:
            bits = "0" * _check_width(family)
        result = basis_single(bits)
    elif kind is PredicateKind.BELL:
        result = bell()
    elif kind is PredicateKind.GHZ_FIXED:
        result = ghz_fixed(_check_width(family))
    elif kind is PredicateKind.GHZ_ALL_FIXED:
        result = ghz_all_fixed(_check_width(family))
    elif kind is PredicateKind.ZEROS_PARAM:
        result = zeros_param(family.min_qubits)
    elif kind is PredicateKind.GHZ_PARAM:
        result = ghz_param()
    elif kind is PredicateKind.BV_PRE:
        n = _check_width(family)
        result = bv_pre(n, _check_bits(family, n))
    elif kind is PredicateKind.BV_POST:
        n = _check_width(family)
        result = bv_post(n, _check_bits(family, n))
    elif kind is PredicateKind.MCTOFFOLI_PRE:
        result = mctoffoli_pre(_check_width(family), family.k)
    elif kind is PredicateKind.MCTOFFOLI_POST:
        result = mctoffoli_post(_check_width(family), family.k)
    elif kind is PredicateKind.EQ_VECTORS:
        result = eq_vectors(_check_width(family))
    elif kind is PredicateKind.PARITY_PHASE:
        result = parity_phase(_check_width(family))
    elif kind is PredicateKind.EVEN_PARITY_PARAM:
        result = even_parity_param()
    else:
        raise InvalidPredicateError(f"unknown predicate family {kind}")
    logger.debug(f"built {kind.value}: {result.size} states, {len(result.transitions)} transitions")
    return result
