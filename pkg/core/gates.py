"""Fixed-index gate application on LSTAs.

Every construction here reads the level of a transition from its symbol:
``Internal(i)`` sits at level i, so for a target t the transitions split
into those above the target, those at it (``Internal(t)``) and the rest.
Parameterized symbols are accepted only strictly below the target level.
In an indexed automaton ``Internal(i)`` transitions are reached exactly at
depth i, so the symbol index and the reachability depth agree; ``check_indexed``
establishes this down to the target before any rewrite.
"""

from typing import Callable, Dict, Iterable, List, Set, Tuple

from loguru import logger

from models.amplitude import I, ONE, AlgebraicComplex
from models.automaton import (
    Internal,
    InternalAny,
    Leaf,
    Lsta,
    StateId,
    StateInterner,
    Transition,
    internal,
)
from models.circuit import GateMatrix, GateOp
from models.enums import GateKind, ProductTag
from models.errors import GateArgumentError, NeedsUnfoldError
from models.gate_library import Y
from .lsta_ops import reduce, trim

ProductKey = Tuple[StateId, StateId, ProductTag]


def check_indexed(a: Lsta, t: int):
    """Raise NeedsUnfoldError if some level <= t is reached through a parameterized symbol"""
    if t < 1:
        raise GateArgumentError(f"qubit index {t} must be at least 1")
    frontier = set(a.roots)
    seen: Set[Tuple[StateId, int]] = set()
    for depth in range(1, t + 1):
        below: Set[StateId] = set()
        for q in frontier:
            if (q, depth) in seen:
                continue
            seen.add((q, depth))
            for tr in a.transitions_of(q):
                if isinstance(tr.symbol, InternalAny):
                    raise NeedsUnfoldError(
                        f"level {depth} of {a.name_of(q)} is parameterized; unfold before applying a gate on qubit {t}")
                if not tr.is_leaf:
                    below.update(tr.bottom)
        frontier = below
        if not frontier:
            break


def _is_at(tr: Transition, t: int) -> bool:
    return isinstance(tr.symbol, Internal) and tr.symbol.index == t


def _leaf_value(u: GateMatrix, tag: ProductTag, a: AlgebraicComplex, b: AlgebraicComplex) -> AlgebraicComplex:
    if tag is ProductTag.L:
        return u.u1 * a + u.u2 * b
    return u.u3 * a + u.u4 * b


def product_construction(a: Lsta, t: int, u: GateMatrix) -> Tuple[Lsta, Dict[StateId, ProductKey]]:
    """General single-qubit construction, untrimmed, plus the key of every product state"""
    check_indexed(a, t)
    return layer_product(a, lambda tr: _is_at(tr, t), u)


def layer_product(a: Lsta, at_target: Callable[[Transition], bool],
                  u: GateMatrix) -> Tuple[Lsta, Dict[StateId, ProductKey]]:
    """Product construction started at every transition selected by at_target.

    The selected transitions must form one tree level; the product states
    pair transitions with the same symbol and intersect their choices.
    """
    intern = StateInterner(a.next_free_state)
    pending: List[ProductKey] = []

    def product(q1: StateId, q2: StateId, tag: ProductTag) -> StateId:
        key = (q1, q2, tag)
        if key not in intern:
            pending.append(key)
        return intern(key, f"({a.name_of(q1)},{a.name_of(q2)},{tag.value})")

    transitions: List[Transition] = []
    for tr in a.transitions:
        if not tr.is_leaf and at_target(tr):
            transitions.append(internal(tr.top, tr.symbol,
                                        product(tr.left, tr.right, ProductTag.L),
                                        product(tr.left, tr.right, ProductTag.R), tr.choices))
        else:
            transitions.append(tr)

    while pending:
        q1, q2, tag = pending.pop()
        top = intern((q1, q2, tag))
        for t1 in a.transitions_of(q1):
            for t2 in a.transitions_of(q2):
                choices = t1.choices & t2.choices
                if not choices:
                    continue
                if t1.is_leaf and t2.is_leaf:
                    value = _leaf_value(u, tag, t1.symbol.value, t2.symbol.value)
                    transitions.append(Transition(top, Leaf(value), None, choices))
                elif not t1.is_leaf and not t2.is_leaf and t1.symbol == t2.symbol:
                    transitions.append(internal(top, t1.symbol,
                                                product(t1.left, t2.left, tag),
                                                product(t1.right, t2.right, tag), choices))

    names = dict(a.names)
    names.update(intern.names)
    result = Lsta.build(a.roots, transitions, a.states, names)
    products = {state: key for key, state in intern.items()}
    return result, products


def apply_single(a: Lsta, t: int, u: GateMatrix) -> Lsta:
    result, products = product_construction(a, t, u)
    logger.debug(f"single on x{t}: {a.size} -> {result.size} states ({len(products)} products)")
    return result


def apply_x(a: Lsta, t: int) -> Lsta:
    check_indexed(a, t)
    transitions = [internal(tr.top, tr.symbol, tr.right, tr.left, tr.choices) if _is_at(tr, t) else tr
                   for tr in a.transitions]
    return Lsta.build(a.roots, transitions, a.states, a.names)


def _reaches_leaf_above(a: Lsta, t: int) -> bool:
    """Whether some tree of a ends before level t"""
    frontier = set(a.roots)
    for _ in range(t):
        below: Set[StateId] = set()
        for q in frontier:
            for tr in a.transitions_of(q):
                if tr.is_leaf:
                    return True
                below.update(tr.bottom)
        frontier = below
    return False


def apply_diag(a: Lsta, t: int, r0: AlgebraicComplex, r1: AlgebraicComplex) -> Lsta:
    """Diagonal gate through a primed copy whose leaves carry r1.

    Leaves of the original carry r0. When a also accepts trees shorter than
    t and r0 != 1, those keep their leaves and a third copy carries r0.
    """
    check_indexed(a, t)
    offset = a.next_free_state
    if r0 == ONE or not _reaches_leaf_above(a, t):
        copies = [(0, r0), (offset, r1)]
    else:
        copies = [(0, ONE), (offset, r0), (2 * offset, r1)]
    zero_shift, one_shift = copies[-2][0], copies[-1][0]

    transitions: List[Transition] = []
    names = dict(a.names)
    for shift, factor in copies:
        for tr in a.transitions:
            top = tr.top + shift
            if tr.is_leaf:
                transitions.append(Transition(top, Leaf(tr.symbol.value * factor), None, tr.choices))
            elif shift == 0 and _is_at(tr, t):
                transitions.append(internal(top, tr.symbol, tr.left + zero_shift, tr.right + one_shift,
                                            tr.choices))
            else:
                transitions.append(internal(top, tr.symbol, tr.left + shift, tr.right + shift, tr.choices))
        if shift:
            primes = "'" * (shift // offset)
            names.update({q + shift: a.name_of(q) + primes for q in a.states})

    states = [q + shift for shift, _ in copies for q in a.states]
    return Lsta.build(a.roots, transitions, states, names)


def _apply_core(a: Lsta, g: GateOp) -> Lsta:
    if g.kind is GateKind.X:
        return apply_x(a, g.target)
    if g.kind is GateKind.DIAGONAL:
        return apply_diag(a, g.target, g.r0, g.r1)
    if g.kind is GateKind.SINGLE:
        return apply_single(a, g.target, g.matrix)
    raise GateArgumentError(f"nested controlled gate {g.label()}")


def _check_qubits(qubits: Iterable[int]):
    qubits = list(qubits)
    if len(set(qubits)) != len(qubits):
        raise GateArgumentError(f"control and target qubits overlap: {qubits}")
    for q in qubits:
        if q < 1:
            raise GateArgumentError(f"qubit index {q} must be at least 1")


def apply_controlled(a: Lsta, controls: Tuple[int, ...], t: int, inner: GateOp) -> Lsta:
    """Controlled gate: the 0-branch of every control leads back into a primed copy of a"""
    _check_qubits(tuple(controls) + (t,))
    if not controls:
        raise GateArgumentError("controlled gate without controls")
    if inner.kind is GateKind.CONTROLLED:
        raise GateArgumentError(f"nested controlled gate {inner.label()}")
    if inner.kind is GateKind.SINGLE and inner.matrix == Y:
        # Y = X . D(i, -i)
        a = trim(apply_controlled(a, controls, t, GateOp.diagonal(t, I, -I, name="d")))
        return apply_controlled(a, controls, t, GateOp.x(t))
    check_indexed(a, max(tuple(controls) + (t,)))

    if all(c < t for c in controls):
        applied, products = _apply_core(a, inner.with_qubits((), t)), {}
    else:
        applied, products = product_construction(a, t, inner.matrix_form())

    offset = applied.next_free_state

    def primed(q: StateId) -> StateId:
        return q + offset

    def zero_branch(top: StateId, child: StateId) -> StateId:
        if top in products:
            qa, qb, tag = products[child]
            return primed(qa if tag is ProductTag.L else qb)
        return primed(child)

    control_levels = set(controls)
    transitions: List[Transition] = []
    for tr in applied.transitions:
        controlled = (not tr.is_leaf and isinstance(tr.symbol, Internal) and tr.symbol.index in control_levels
                      and (tr.top in a.states or tr.top in products))
        if controlled:
            transitions.append(internal(tr.top, tr.symbol, zero_branch(tr.top, tr.left), tr.right, tr.choices))
        else:
            transitions.append(tr)
    for tr in a.transitions:
        bottom = None if tr.is_leaf else (primed(tr.left), primed(tr.right))
        transitions.append(Transition(primed(tr.top), tr.symbol, bottom, tr.choices))

    names = dict(applied.names)
    names.update({primed(q): f"{a.name_of(q)}'" for q in a.states})
    states = list(applied.states) + [primed(q) for q in a.states]
    result = Lsta.build(a.roots, transitions, states, names)
    logger.debug(f"controlled {inner.name} on x{t} with controls {list(controls)}: "
                 f"{a.size} -> {result.size} states")
    return result


def apply_gate(a: Lsta, g: GateOp, then_reduce: bool = True) -> Lsta:
    """Dispatch a gate to its construction, then reduce (or only trim)"""
    if g.kind is GateKind.CONTROLLED:
        result = apply_controlled(a, g.controls, g.target, g.inner)
    else:
        _check_qubits([g.target])
        result = _apply_core(a, g)
    return reduce(result) if then_reduce else trim(result)


def apply_circuit(a: Lsta, gates: Iterable[GateOp], then_reduce: bool = True) -> Lsta:
    for g in gates:
        a = apply_gate(a, g, then_reduce)
    return a
