"""Gates over circuits of unbounded width, plus unfolding to reach fixed-index code.

The staircase, all-qubit and alternating constructions work on copies of
the input automaton: a copy number encodes what the gate has done to the
qubits above the current level.
"""

from typing import Dict, List, Optional, Tuple

from loguru import logger

from models.amplitude import omega_n
from models.automaton import INTERNAL_ANY, Internal, InternalAny, Leaf, Lsta, StateId, StateInterner, Transition, internal
from models.circuit import GateMatrix, ParamGateOp
from models.enums import ParamGateKind, Parity
from models.errors import AmbiguousLastLayerError, GateArgumentError, MixedSymbolsError, ShortTreeError
from models.gate_library import X
from .gates import apply_diag, apply_single, apply_x, layer_product
from .lsta_ops import any_tree_within, reduce, trim

INFINITE = None


def symbol_shape(a: Lsta) -> str:
    """'indexed', 'parameterized', 'mixed' or 'empty' for the internal symbols of a"""
    kinds = {type(s) for s in a.internal_symbols()}
    if not kinds:
        return "empty"
    if kinds == {Internal}:
        return "indexed"
    if kinds == {InternalAny}:
        return "parameterized"
    return "mixed"


def _require_uniform(a: Lsta, operation: str):
    if symbol_shape(a) == "mixed":
        raise MixedSymbolsError(f"{operation} needs all internal symbols indexed or all parameterized")


def _copies(a: Lsta, count: int) -> Tuple[StateInterner, Dict[Tuple[StateId, int], StateId]]:
    intern = StateInterner(0)
    ids = {}
    suffixes = ["", "~", "~~"] if count <= 3 else [f"~{i}" for i in range(count)]
    for i in range(count):
        for q in sorted(a.states):
            ids[(q, i)] = intern((q, i), f"{a.name_of(q)}{suffixes[i]}")
    return intern, ids


def _staircase(a: Lsta, inverse: bool) -> Lsta:
    _require_uniform(a, "CX(n)")
    intern, ids = _copies(a, 2)
    transitions: List[Transition] = []
    for tr in a.transitions:
        plain, barred = ids[(tr.top, 0)], ids[(tr.top, 1)]
        if tr.is_leaf:
            transitions.append(Transition(plain, tr.symbol, None, tr.choices))
            transitions.append(Transition(barred, tr.symbol, None, tr.choices))
            continue
        transitions.append(internal(plain, tr.symbol, ids[(tr.left, 0)], ids[(tr.right, 1)], tr.choices))
        if inverse:
            transitions.append(internal(barred, tr.symbol, ids[(tr.right, 1)], ids[(tr.left, 0)], tr.choices))
        else:
            transitions.append(internal(barred, tr.symbol, ids[(tr.right, 0)], ids[(tr.left, 1)], tr.choices))
    return Lsta.build((ids[(r, 0)] for r in a.roots), transitions, intern.names.keys(), intern.names)


def cx_n(a: Lsta) -> Lsta:
    """CNOT staircase CX(1,2) ... CX(n-1,n), top-down"""
    return _staircase(a, inverse=False)


def cx_n_inv(a: Lsta) -> Lsta:
    """Inverse staircase CX(n-1,n) ... CX(1,2)"""
    return _staircase(a, inverse=True)


def x_all(a: Lsta) -> Lsta:
    transitions = [tr if tr.is_leaf else internal(tr.top, tr.symbol, tr.right, tr.left, tr.choices)
                   for tr in a.transitions]
    return Lsta.build(a.roots, transitions, a.states, a.names)


def alt_cnot(a: Lsta, parity: Parity) -> Lsta:
    """CX on qubit pairs (1,2),(3,4),... for EVEN, (2,3),(4,5),... for ODD"""
    intern, ids = _copies(a, 3)
    transitions: List[Transition] = []
    for tr in a.transitions:
        if tr.is_leaf:
            transitions.extend(Transition(ids[(tr.top, i)], tr.symbol, None, tr.choices) for i in range(3))
            continue
        # copy 0 sits on a control qubit; copies 1 and 2 on its target, plain and flipped
        transitions.append(internal(ids[(tr.top, 0)], tr.symbol, ids[(tr.left, 1)], ids[(tr.right, 2)], tr.choices))
        transitions.append(internal(ids[(tr.top, 1)], tr.symbol, ids[(tr.left, 0)], ids[(tr.right, 0)], tr.choices))
        transitions.append(internal(ids[(tr.top, 2)], tr.symbol, ids[(tr.right, 0)], ids[(tr.left, 0)], tr.choices))
    start = 0 if parity is Parity.EVEN else 1
    return Lsta.build((ids[(r, start)] for r in a.roots), transitions, intern.names.keys(), intern.names)


def phase_all(a: Lsta, roots_of_unity: int, power: int = 1) -> Lsta:
    """D(1, w_N^m) on every qubit; copy i counts the 1-branches taken so far modulo N"""
    count = roots_of_unity
    if count < 1 or 16 % count:
        raise GateArgumentError(f"PHALL needs N dividing 16, got {count}")
    intern, ids = _copies(a, count)
    transitions: List[Transition] = []
    for i in range(count):
        factor = omega_n(count, i * power)
        for tr in a.transitions:
            top = ids[(tr.top, i)]
            if tr.is_leaf:
                transitions.append(Transition(top, Leaf(tr.symbol.value * factor), None, tr.choices))
            else:
                transitions.append(internal(top, tr.symbol, ids[(tr.left, i)],
                                            ids[(tr.right, (i + 1) % count)], tr.choices))
    return Lsta.build((ids[(r, 0)] for r in a.roots), transitions, intern.names.keys(), intern.names)


def unfold_top(a: Lsta, t: int) -> Lsta:
    """Give the first t levels explicit indices x1..xt"""
    if t < 1:
        raise GateArgumentError(f"unfold depth {t} must be at least 1")
    if symbol_shape(a) not in ("parameterized", "empty"):
        raise MixedSymbolsError("unfold_top needs a fully parameterized automaton")
    short = any_tree_within(a, t - 1)
    if short is not None:
        raise ShortTreeError(f"automaton accepts a tree of fewer than {t} qubits; cannot unfold {t} levels")

    intern = StateInterner(a.next_free_state)

    def copy(q: StateId, level: int) -> StateId:
        return intern((q, level), f"{a.name_of(q)}@{level}")

    transitions: List[Transition] = list(a.transitions)
    for level in range(1, t + 1):
        for tr in a.transitions:
            top = copy(tr.top, level)
            if tr.is_leaf:
                transitions.append(Transition(top, tr.symbol, None, tr.choices))
            elif level < t:
                transitions.append(internal(top, Internal(level), copy(tr.left, level + 1),
                                            copy(tr.right, level + 1), tr.choices))
            else:
                transitions.append(internal(top, Internal(level), tr.left, tr.right, tr.choices))
    names = dict(a.names)
    names.update(intern.names)
    return trim(Lsta.build((copy(r, 1) for r in a.roots), transitions, names=names))


def fold(a: Lsta) -> Lsta:
    """Erase qubit indices and reduce"""
    transitions = [internal(tr.top, INTERNAL_ANY, tr.left, tr.right, tr.choices)
                   if isinstance(tr.symbol, Internal) else tr
                   for tr in a.transitions]
    return reduce(Lsta.build(a.roots, transitions, a.states, a.names))


def _unfold_bottom(a: Lsta, t: int) -> Tuple[Lsta, Dict[StateId, Optional[int]]]:
    """Height-counter construction; returns the height of every new state (None above the counted part)"""
    if t < 1:
        raise GateArgumentError(f"unfold depth {t} must be at least 1")
    intern = StateInterner(0)
    heights: Dict[StateId, Optional[int]] = {}

    def at(q: StateId, h: Optional[int]) -> StateId:
        label = "inf" if h is INFINITE else str(h)
        state = intern((q, h), f"{a.name_of(q)}^{label}")
        heights[state] = h
        return state

    transitions: List[Transition] = []
    for tr in a.transitions:
        even = frozenset(2 * c for c in tr.choices)
        odd = frozenset(2 * c + 1 for c in tr.choices)
        if tr.is_leaf:
            transitions.append(Transition(at(tr.top, 0), tr.symbol, None, even | odd))
            continue
        transitions.append(internal(at(tr.top, INFINITE), tr.symbol,
                                    at(tr.left, INFINITE), at(tr.right, INFINITE), even))
        transitions.append(internal(at(tr.top, INFINITE), tr.symbol, at(tr.left, t), at(tr.right, t), odd))
        for h in range(1, t + 1):
            transitions.append(internal(at(tr.top, h), tr.symbol, at(tr.left, h - 1), at(tr.right, h - 1),
                                        even | odd))

    roots = [at(r, INFINITE) for r in a.roots] + [at(r, h) for r in a.roots for h in range(t + 1)]
    return Lsta.build(roots, transitions, heights.keys(), intern.names), heights


def unfold_bottom(a: Lsta, t: int) -> Lsta:
    """Make the last t levels pure layers; language preserved on perfect trees"""
    result, _ = _unfold_bottom(a, t)
    return trim(result)


def _leaf_layer(a: Lsta) -> List[Transition]:
    """The almost-leaf transitions: non-leaf transitions whose bottoms are both leaf states"""
    leaf_states = set()
    for q, ts in a.by_top.items():
        kinds = {tr.is_leaf for tr in ts}
        if kinds == {True}:
            leaf_states.add(q)
        elif kinds == {True, False}:
            raise AmbiguousLastLayerError(f"{a.name_of(q)} has both leaf and internal transitions")
    layer = []
    for tr in a.transitions:
        if tr.is_leaf:
            continue
        inside = (tr.left in leaf_states) + (tr.right in leaf_states)
        if inside == 1:
            raise AmbiguousLastLayerError(
                f"transition of {a.name_of(tr.top)} mixes a leaf state and an internal state")
        if inside == 2:
            layer.append(tr)
    return layer


def apply_single_last(a: Lsta, u: GateMatrix) -> Lsta:
    """Gate on the last qubit of every accepted tree"""
    layer = frozenset(_leaf_layer(a))
    result, products = layer_product(a, lambda tr: tr in layer, u)
    logger.debug(f"last-qubit gate: {len(layer)} almost-leaf transitions, {len(products)} products")
    return result


def apply_single_bottom(a: Lsta, u: GateMatrix, depth: int = 1) -> Lsta:
    """Gate on the qubit `depth` levels above the leaves (1 is the last qubit)"""
    if depth == 1:
        return apply_single_last(a, u)
    unfolded, heights = _unfold_bottom(a, depth)
    result, _ = layer_product(unfolded, lambda tr: heights.get(tr.top) == depth, u)
    return result


def _apply_first(a: Lsta, g: ParamGateOp) -> Lsta:
    def direct(b: Lsta) -> Lsta:
        if g.matrix == X:
            return apply_x(b, g.index)
        if g.matrix.is_diagonal:
            return apply_diag(b, g.index, g.matrix.u1, g.matrix.u4)
        return apply_single(b, g.index, g.matrix)

    if symbol_shape(a) == "parameterized":
        return fold(direct(unfold_top(a, g.index)))
    return direct(a)


def apply_param_gate(a: Lsta, g: ParamGateOp, then_reduce: bool = True) -> Lsta:
    """Dispatch a parameterized gate, then reduce (or only trim)"""
    kind = g.kind
    if kind is ParamGateKind.CXN:
        result = cx_n(a)
    elif kind is ParamGateKind.CXN_INV:
        result = cx_n_inv(a)
    elif kind is ParamGateKind.X_ALL:
        result = x_all(a)
    elif kind is ParamGateKind.ALT_CNOT:
        result = alt_cnot(a, g.parity)
    elif kind is ParamGateKind.PHASE_ALL:
        result = phase_all(a, g.roots_of_unity, g.power)
    elif kind is ParamGateKind.SINGLE_FIRST:
        result = _apply_first(a, g)
    elif kind is ParamGateKind.SINGLE_LAST:
        result = apply_single_bottom(a, g.matrix, g.index)
    elif kind is ParamGateKind.UNFOLD_TOP:
        result = unfold_top(a, g.index)
    elif kind is ParamGateKind.UNFOLD_BOTTOM:
        result = unfold_bottom(a, g.index)
    elif kind is ParamGateKind.FOLD:
        result = fold(a)
    else:
        raise GateArgumentError(f"unknown parameterized gate {kind}")
    logger.debug(f"{g.label()}: {a.size} -> {result.size} states")
    return reduce(result) if then_reduce else trim(result)
