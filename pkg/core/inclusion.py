"""Language inclusion L(A) <= L(B) as reachability over (D, F) vertices.

D is the set of A-states used at one level of an A-run. Each map in F sends
every state of D to the B-states that one surviving B-run assigns to the
nodes carrying that A-state. A vertex with D empty whose maps do not include
the empty map is a completed A-run that no B-run follows: a counterexample.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from loguru import logger

from config import INCLUSION_BUDGET
from models.automaton import InclusionVertex, Lsta, StateId, StateTree
from models.errors import BudgetExhaustedError
from .emptiness import Gamma, build_tree, gammas_by_choice

CoverMap = FrozenSet[Tuple[StateId, FrozenSet[StateId]]]


@dataclass(frozen=True)
class InclusionResult:
    holds: bool
    counterexample: Optional[StateTree] = None
    visited: int = 0

    def __bool__(self):
        return self.holds


def _image(cover: CoverMap) -> FrozenSet[StateId]:
    return frozenset(s for _, states in cover for s in states)


def _successor_maps(a_gamma: Gamma, b: Lsta, cover: CoverMap) -> Set[CoverMap]:
    """All successor maps G of one map F under the A-side choice a_gamma"""
    image = _image(cover)
    results: Set[CoverMap] = set()
    for _, b_gamma in gammas_by_choice(b, image):
        if any(b_gamma[s].symbol != a_gamma[q].symbol for q, states in cover for s in states):
            continue
        successor: Dict[StateId, Set[StateId]] = {}
        for q, states in cover:
            t_a = a_gamma[q]
            if t_a.is_leaf:
                continue
            for s in states:
                t_b = b_gamma[s]
                successor.setdefault(t_a.left, set()).add(t_b.left)
                successor.setdefault(t_a.right, set()).add(t_b.right)
        results.add(frozenset((q, frozenset(ss)) for q, ss in successor.items()))
    return results


def includes(a: Lsta, b: Lsta, budget: int = INCLUSION_BUDGET) -> InclusionResult:
    """Decide L(a) <= L(b); on failure return a tree of L(a) outside L(b)"""
    parents: Dict[InclusionVertex, Optional[Tuple[InclusionVertex, Gamma]]] = {}
    sources: Dict[InclusionVertex, StateId] = {}
    queue = deque()
    for q in sorted(a.roots):
        vertex = InclusionVertex(frozenset([q]),
                                 frozenset(frozenset([(q, frozenset([r]))]) for r in b.roots))
        if vertex not in parents:
            parents[vertex] = None
            sources[vertex] = q
            queue.append(vertex)

    empty_map: CoverMap = frozenset()
    while queue:
        vertex = queue.popleft()
        for _, a_gamma in gammas_by_choice(a, vertex.domain):
            domain = frozenset(s for t in a_gamma.values() if not t.is_leaf for s in t.bottom)
            maps: Set[CoverMap] = set()
            for cover in vertex.maps:
                maps |= _successor_maps(a_gamma, b, cover)
            if not domain:
                if empty_map not in maps:
                    tree = _counterexample(parents, sources, vertex, a_gamma)
                    logger.debug(f"inclusion fails after {len(parents)} vertices")
                    return InclusionResult(False, tree, len(parents))
                continue
            successor = InclusionVertex(domain, frozenset(maps))
            if successor in parents:
                continue
            parents[successor] = (vertex, a_gamma)
            if len(parents) > budget:
                raise BudgetExhaustedError(budget)
            queue.append(successor)
    logger.debug(f"inclusion holds, {len(parents)} vertices explored")
    return InclusionResult(True, None, len(parents))


def _counterexample(parents, sources, vertex: InclusionVertex, last: Gamma) -> StateTree:
    path: List[Gamma] = [last]
    node = vertex
    while parents[node] is not None:
        node, gamma = parents[node]
        path.append(gamma)
    path.reverse()
    return build_tree(sources[node], path)


def equivalent(a: Lsta, b: Lsta, budget: int = INCLUSION_BUDGET) -> bool:
    return includes(a, b, budget).holds and includes(b, a, budget).holds
