"""The ``.lsta`` text format and the term syntax for trees.

::

    # Bell states
    root r
    r -> x1 (a, b) {1,2}
    a -> x2 (h, z) {1}
    h -> 1/s2 {1,2}

``x`` without an index is the parameterized symbol. Leaves use the
amplitude literal syntax.
"""

import re
from typing import Dict, List

import pyparsing as pp
from loguru import logger

from core.lsta_ops import validate
from models.amplitude import AMPLITUDE_LITERAL, format_amplitude
from models.automaton import (
    INTERNAL_ANY,
    Internal,
    InternalNode,
    LeafNode,
    Lsta,
    StateId,
    StateTree,
    Transition,
    Leaf,
    transition_sort_key,
)
from models.errors import LstaFormatError

STATE_NAME = re.compile(r"[A-Za-z_][\w'~^@&.]*\Z")

_state = pp.Regex(r"[A-Za-z_][\w'~^@&.]*")
_symbol = pp.Regex(r"x(\d+)?(?=\s*\()").set_parse_action(
    lambda toks: Internal(int(toks[0][1:])) if len(toks[0]) > 1 else INTERNAL_ANY)
_choices = pp.Suppress("{") + pp.DelimitedList(pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))) \
    + pp.Suppress("}")

ROOT_LINE = pp.Keyword("root") + pp.Group(pp.OneOrMore(_state))("roots")
INTERNAL_LINE = (
    _state("top") + pp.Suppress("->") + _symbol("symbol")
    + pp.Suppress("(") + _state("left") + pp.Suppress(",") + _state("right") + pp.Suppress(")")
    + pp.Group(_choices)("choices")
)
# the literal is read positionally; a results name on it yields a nested ParseResults
LEAF_LINE = _state("top") + pp.Suppress("->") + AMPLITUDE_LITERAL + pp.Group(_choices)("choices")

TERM = pp.Forward()
TERM <<= (
    (_symbol + pp.Suppress("(") + TERM + pp.Suppress(",") + TERM + pp.Suppress(")")).set_parse_action(
        lambda toks: InternalNode(toks[0], toks[1], toks[2]))
    | AMPLITUDE_LITERAL.copy().add_parse_action(lambda toks: LeafNode(toks[0]))
)


class _StateTable:
    """Assigns ids to state names in order of first appearance"""

    def __init__(self):
        self.ids: Dict[str, StateId] = {}

    def __call__(self, name: str) -> StateId:
        return self.ids.setdefault(name, len(self.ids))

    @property
    def names(self) -> Dict[StateId, str]:
        return {state: name for name, state in self.ids.items()}


def parse_lsta(text: str, check: bool = True) -> Lsta:
    """Parse an automaton; validates it unless check is False"""
    table = _StateTable()
    roots: List[StateId] = []
    transitions: List[Transition] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            if body.split()[0] == "root" and "->" not in body:
                parsed = ROOT_LINE.parse_string(body, parse_all=True)
                roots.extend(table(name) for name in parsed["roots"])
            elif INTERNAL_LINE.matches(body, parse_all=True):
                parsed = INTERNAL_LINE.parse_string(body, parse_all=True)
                bottom = (table(parsed["left"]), table(parsed["right"]))
                transitions.append(Transition(table(parsed["top"]), parsed["symbol"], bottom,
                                              frozenset(parsed["choices"])))
            else:
                parsed = LEAF_LINE.parse_string(body, parse_all=True)
                transitions.append(Transition(table(parsed["top"]), Leaf(parsed[1]), None,
                                              frozenset(parsed["choices"])))
        except pp.ParseException as e:
            raise LstaFormatError(f"cannot parse '{body}': {e.msg}", number) from e

    a = Lsta.build(roots, transitions, table.ids.values(), table.names)
    if check:
        validate(a).raise_if_invalid()
    logger.debug(f"parsed LSTA: {a.size} states, {len(a.transitions)} transitions")
    return a


def _printable_names(a: Lsta) -> Dict[StateId, str]:
    """State names usable in the format, falling back to q<id> on clashes"""
    names = {q: a.name_of(q) for q in a.states}
    if all(STATE_NAME.match(n) for n in names.values()) and len(set(names.values())) == len(names):
        return names
    return {q: f"q{q}" for q in a.states}


def serialize_lsta(a: Lsta, title: str = "") -> str:
    names = _printable_names(a)
    lines = [f"# {title}"] if title else []
    if a.roots:
        lines.append("root " + " ".join(names[r] for r in sorted(a.roots)))
    for t in sorted(a.transitions, key=transition_sort_key):
        choices = "{" + ",".join(str(c) for c in sorted(t.choices)) + "}"
        if t.is_leaf:
            lines.append(f"{names[t.top]} -> {format_amplitude(t.symbol.value)} {choices}")
        else:
            lines.append(f"{names[t.top]} -> {t.symbol} ({names[t.left]}, {names[t.right]}) {choices}")
    return "\n".join(lines) + "\n"


def parse_term(text: str) -> StateTree:
    """Tree from term syntax, e.g. x1(x2(0,1/s2), x2(1/s2,0))"""
    try:
        return TERM.parse_string(text.strip(), parse_all=True)[0]
    except pp.ParseException as e:
        raise LstaFormatError(f"invalid term '{text}': {e.msg}") from e

